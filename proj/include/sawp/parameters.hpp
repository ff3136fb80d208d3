#pragma once

#include <map>
#include <string>

#include "sawp/model.hpp"

namespace sawp {

// Key material/section parameters plus named load magnitudes, the stage-1
// extraction target.
struct ParameterSet {
    double E = 0.0;        // Pa
    double A_column = 0.0; // m^2
    double A_girder = 0.0; // m^2 (also diagonals and cantilevers)
    double I_column = 0.0; // m^4
    double I_girder = 0.0; // m^4
    std::map<std::string, double> loads; // e.g. point_load -> N, distributed_load -> N/m

    bool operator==(const ParameterSet&) const = default;
};

// JSON object with keys E, A_column, A_girder, I_column, I_girder, loads.
ParameterSet parse_parameters(const std::string& text);
std::string serialize(const ParameterSet& params);

// Reads the parameters back out of a model: properties from the first column
// and first non-column element, load magnitudes from the largest components.
ParameterSet derive_parameters(const FrameModel& model);

} // namespace sawp
