#pragma once

#include <string>
#include <vector>

#include "sawp/model.hpp"

namespace sawp {

// Rewrites a model into its canonical form: nodes sorted by (x, y) and
// renumbered from 1, element endpoints ordered so node_i < node_j, elements
// sorted by (kind, i, j) and renumbered from 1, supports and loads sorted.
// Distributed-load signs are re-derived when an element's endpoints swap, so
// the mechanics are unchanged. Idempotent and invariant under relabeling.
FrameModel canonicalize(const FrameModel& model);

struct Coord {
    double x = 0.0;
    double y = 0.0;
};

struct ElementSignature {
    Coord a, b; // endpoint coordinates, canonical order
};

// Id-independent difference between two canonicalized models, everything
// keyed by coordinates. "missing" = in truth but not generated, "extra" =
// generated but not in truth.
struct ModelDiff {
    std::vector<Coord> missing_nodes, extra_nodes;
    std::vector<ElementSignature> missing_elements, extra_elements;
    std::vector<std::string> support_mismatches;
    std::vector<std::string> point_load_mismatches;
    std::vector<std::string> distributed_load_mismatches;

    bool layout_clean() const {
        return missing_nodes.empty() && extra_nodes.empty() && missing_elements.empty() &&
               extra_elements.empty();
    }
    bool supports_clean() const { return support_mismatches.empty(); }
    bool loads_clean() const {
        return point_load_mismatches.empty() && distributed_load_mismatches.empty();
    }
    bool empty() const { return layout_clean() && supports_clean() && loads_clean(); }

    std::string summary() const;
};

ModelDiff diff_models(const FrameModel& generated, const FrameModel& truth);

} // namespace sawp
