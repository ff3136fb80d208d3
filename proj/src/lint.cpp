#include "sawp/lint.hpp"

#include <cmath>
#include <sstream>

#include "sawp/errors.hpp"
#include "sawp/numfmt.hpp"

namespace sawp {
namespace {

void add_finding(ValidationReport& report, const std::string& lint, std::string message,
                 std::vector<int> ids) {
    report.findings.push_back({lint, Severity::warning, std::move(message), std::move(ids)});
}

std::string join_ids(const std::vector<int>& ids) {
    std::ostringstream os;
    for (size_t k = 0; k < ids.size(); ++k) os << (k ? ", " : "") << ids[k];
    return os.str();
}

void count_lint(ValidationReport& report, const std::string& lint, const char* kind_name,
                int stated, int defined) {
    if (stated != defined) {
        std::ostringstream os;
        os << "problem states " << stated << " " << kind_name << "(s) but the model defines "
           << defined;
        add_finding(report, lint, os.str(), {});
    }
}

} // namespace

ValidationReport validate(const FrameModel& model) {
    ValidationReport report;

    // SPACE-1: support nodes default to y = 0
    std::vector<int> raised;
    for (const auto& s : model.supports) {
        const Node& n = model.node(s.node);
        if (std::abs(n.y) > kCoordTol) raised.push_back(n.id);
    }
    if (!raised.empty())
        add_finding(report, "SPACE-1",
                    "support nodes expected at y = 0: nodes " + join_ids(raised), raised);

    // SPACE-2/3/4: shape consistency per element kind
    std::vector<int> bad_girders, bad_columns, hidden_diagonals;
    for (const auto& e : model.elements) {
        const Node& a = model.node(e.node_i);
        const Node& b = model.node(e.node_j);
        const bool dx = std::abs(a.x - b.x) > kCoordTol;
        const bool dy = std::abs(a.y - b.y) > kCoordTol;
        if (e.kind == ElementKind::girder && dy) bad_girders.push_back(e.id);
        if (e.kind == ElementKind::column && dx) bad_columns.push_back(e.id);
        if (dx && dy && e.kind != ElementKind::diagonal) hidden_diagonals.push_back(e.id);
    }
    if (!bad_girders.empty())
        add_finding(report, "SPACE-2",
                    "girder end nodes must have identical y-coordinates: elements " +
                        join_ids(bad_girders),
                    bad_girders);
    if (!bad_columns.empty())
        add_finding(report, "SPACE-3",
                    "column end nodes must have identical x-coordinates: elements " +
                        join_ids(bad_columns),
                    bad_columns);
    if (!hidden_diagonals.empty())
        add_finding(report, "SPACE-4",
                    "elements with both coordinates differing must be diagonals: elements " +
                        join_ids(hidden_diagonals),
                    hidden_diagonals);

    // COUNT-1..4: tallies against the stated counts, skipped when absent
    if (model.stated_counts) {
        int n_col = 0, n_gir = 0, n_dia = 0, n_can = 0;
        for (const auto& e : model.elements) {
            switch (e.kind) {
            case ElementKind::column: ++n_col; break;
            case ElementKind::girder: ++n_gir; break;
            case ElementKind::diagonal: ++n_dia; break;
            case ElementKind::cantilever: ++n_can; break;
            }
        }
        const auto& c = *model.stated_counts;
        count_lint(report, "COUNT-1", "column", c.columns, n_col);
        count_lint(report, "COUNT-2", "girder", c.girders, n_gir);
        count_lint(report, "COUNT-3", "diagonal", c.diagonals, n_dia);
        count_lint(report, "COUNT-4", "cantilever", c.cantilevers, n_can);
    }

    // LOAD-1: stored sign must match the orientation rule
    std::vector<int> bad_loads;
    for (const auto& d : model.distributed_loads) {
        const Element& e = model.element(d.element);
        const double expected = signed_uniform_load(e, std::abs(d.w), d.inward, model);
        if (std::signbit(d.w) != std::signbit(expected)) bad_loads.push_back(d.element);
    }
    if (!bad_loads.empty())
        add_finding(report, "LOAD-1",
                    "distributed-load sign inconsistent with element orientation: elements " +
                        join_ids(bad_loads),
                    bad_loads);

    return report;
}

std::set<int> boundary_nodes(const FrameModel& model, Side side) {
    std::vector<const Node*> candidates;
    for (const auto& n : model.nodes)
        if (!model.is_support(n.id)) candidates.push_back(&n);
    if (candidates.empty())
        throw EmptySelectionError("every node is a support node; nothing to select");

    auto coord = [&](const Node* n) { return (side == Side::left || side == Side::right) ? n->x : n->y; };
    const bool want_min = (side == Side::left || side == Side::bottom);

    double extreme = coord(candidates.front());
    for (const Node* n : candidates)
        extreme = want_min ? std::min(extreme, coord(n)) : std::max(extreme, coord(n));

    std::set<int> out;
    for (const Node* n : candidates)
        if (std::abs(coord(n) - extreme) <= kCoordTol) out.insert(n->id);
    return out;
}

double signed_uniform_load(const Element& element, double magnitude, bool inward,
                           const FrameModel& model) {
    const Node& a = model.node(element.node_i);
    const Node& b = model.node(element.node_j);
    double w = inward ? -magnitude : magnitude;
    if (std::abs(a.x - b.x) > kCoordTol) {
        if (a.x > b.x) w = -w; // element runs right-to-left
    } else {
        if (a.y > b.y) w = -w; // vertical element runs top-to-bottom
    }
    return w;
}

} // namespace sawp
