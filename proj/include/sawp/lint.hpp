#pragma once

#include <set>
#include <string>
#include <vector>

#include "sawp/model.hpp"

namespace sawp {

enum class Severity { warning, error };

struct Finding {
    std::string lint; // SPACE-1..4, COUNT-1..4, LOAD-1
    Severity severity = Severity::warning;
    std::string message;
    std::vector<int> offending_ids;
};

struct ValidationReport {
    std::vector<Finding> findings;
    bool clean() const { return findings.empty(); }
};

// Deterministic structural-hygiene lints. Always returns a report; findings
// are warnings for generated models and treated as fatal for bundled ground
// truth by the benchmark loader.
//
//   SPACE-1  support nodes sit at y = 0
//   SPACE-2  girder end nodes share the y-coordinate
//   SPACE-3  column end nodes share the x-coordinate
//   SPACE-4  an element with both coordinates differing must be a diagonal
//   COUNT-1..4  column/girder/diagonal/cantilever tallies match stated counts
//   LOAD-1   distributed-load sign agrees with signed_uniform_load
ValidationReport validate(const FrameModel& model);

enum class Side { left, right, top, bottom };

// Non-support nodes attaining the extreme coordinate for the side, e.g. the
// smallest x for Side::left. Throws EmptySelectionError when every node is a
// support node.
std::set<int> boundary_nodes(const FrameModel& model, Side side);

// Signed local-y intensity for a uniform transverse load of the given
// magnitude. Downward/inward loads are negative; the sign flips when the
// element runs right-to-left (or top-to-bottom for vertical elements).
double signed_uniform_load(const Element& element, double magnitude, bool inward,
                           const FrameModel& model);

} // namespace sawp
