#include "sawp/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "sawp/numfmt.hpp"

namespace sawp {
namespace {

// Tolerance-aware lexicographic order on (x, y).
int coord_compare(double ax, double ay, double bx, double by) {
    if (std::abs(ax - bx) > kCoordTol) return ax < bx ? -1 : 1;
    if (std::abs(ay - by) > kCoordTol) return ay < by ? -1 : 1;
    return 0;
}

bool close(double a, double b, double rel = 1e-6, double abs_tol = 1e-9) {
    return std::abs(a - b) <= std::max(abs_tol, rel * std::max(std::abs(a), std::abs(b)));
}

std::string coord_str(double x, double y) {
    return "(" + format_number(x) + ", " + format_number(y) + ")";
}

std::string coord_str(const Coord& c) { return coord_str(c.x, c.y); }

} // namespace

FrameModel canonicalize(const FrameModel& model) {
    FrameModel out;

    // nodes: sorted by (x, y), renumbered from 1
    std::vector<Node> nodes = model.nodes;
    std::stable_sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
        int c = coord_compare(a.x, a.y, b.x, b.y);
        return c != 0 ? c < 0 : a.id < b.id;
    });
    std::map<int, int> node_map;
    for (size_t k = 0; k < nodes.size(); ++k) {
        node_map[nodes[k].id] = int(k) + 1;
        nodes[k].id = int(k) + 1;
    }
    out.nodes = std::move(nodes);

    // elements: endpoints ordered so node_i < node_j in the new numbering;
    // a swap reverses the local axes, so attached distributed loads negate
    struct Mapped {
        Element e;
        bool swapped;
        int old_id;
    };
    std::vector<Mapped> elems;
    for (const auto& e : model.elements) {
        Element m = e;
        m.node_i = node_map.at(e.node_i);
        m.node_j = node_map.at(e.node_j);
        bool swapped = false;
        if (m.node_i > m.node_j) {
            std::swap(m.node_i, m.node_j);
            swapped = true;
        }
        elems.push_back({m, swapped, e.id});
    }
    std::stable_sort(elems.begin(), elems.end(), [](const Mapped& a, const Mapped& b) {
        auto ka = std::tuple(int(a.e.kind), a.e.node_i, a.e.node_j, a.old_id);
        auto kb = std::tuple(int(b.e.kind), b.e.node_i, b.e.node_j, b.old_id);
        return ka < kb;
    });
    std::map<int, int> elem_map;
    std::map<int, bool> elem_swapped;
    for (size_t k = 0; k < elems.size(); ++k) {
        elem_map[elems[k].old_id] = int(k) + 1;
        elem_swapped[elems[k].old_id] = elems[k].swapped;
        elems[k].e.id = int(k) + 1;
        out.elements.push_back(elems[k].e);
    }

    for (const auto& s : model.supports) out.supports.push_back({node_map.at(s.node), s.fix});
    std::sort(out.supports.begin(), out.supports.end(),
              [](const Support& a, const Support& b) { return a.node < b.node; });

    for (const auto& p : model.point_loads)
        out.point_loads.push_back({node_map.at(p.node), p.fx, p.fy, p.mz});
    std::sort(out.point_loads.begin(), out.point_loads.end(),
              [](const PointLoad& a, const PointLoad& b) {
                  return std::tuple(a.node, a.fx, a.fy, a.mz) <
                         std::tuple(b.node, b.fx, b.fy, b.mz);
              });

    for (const auto& d : model.distributed_loads) {
        DistributedLoad m = d;
        m.element = elem_map.at(d.element);
        if (elem_swapped.at(d.element)) m.w = -m.w;
        out.distributed_loads.push_back(m);
    }
    std::sort(out.distributed_loads.begin(), out.distributed_loads.end(),
              [](const DistributedLoad& a, const DistributedLoad& b) {
                  return std::tuple(a.element, a.w) < std::tuple(b.element, b.w);
              });

    out.stated_counts = model.stated_counts;
    if (model.visualization) {
        VisualizationSpec v = *model.visualization;
        std::sort(v.diagrams.begin(), v.diagrams.end());
        v.diagrams.erase(std::unique(v.diagrams.begin(), v.diagrams.end()), v.diagrams.end());
        out.visualization = v;
    }
    return out;
}

namespace {

struct LoadAtCoord {
    Coord at;
    double fx = 0, fy = 0, mz = 0;
};

struct DistOnElement {
    ElementSignature sig;
    double w = 0;
};

std::vector<Coord> node_coords(const FrameModel& m) {
    std::vector<Coord> v;
    for (const auto& n : m.nodes) v.push_back({n.x, n.y});
    return v;
}

bool same_coord(const Coord& a, const Coord& b) {
    return std::abs(a.x - b.x) <= kCoordTol && std::abs(a.y - b.y) <= kCoordTol;
}

ElementSignature signature(const FrameModel& m, const Element& e) {
    const Node& a = m.node(e.node_i);
    const Node& b = m.node(e.node_j);
    return {{a.x, a.y}, {b.x, b.y}};
}

bool same_signature(const ElementSignature& a, const ElementSignature& b) {
    return same_coord(a.a, b.a) && same_coord(a.b, b.b);
}

std::string sig_str(const ElementSignature& s) { return coord_str(s.a) + "-" + coord_str(s.b); }

// Point loads summed per node coordinate: splitting one load into two entries
// at the same node is not a modeling difference.
std::vector<LoadAtCoord> point_load_resultants(const FrameModel& m) {
    std::vector<LoadAtCoord> out;
    for (const auto& p : m.point_loads) {
        const Node& n = m.node(p.node);
        Coord at{n.x, n.y};
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const LoadAtCoord& l) { return same_coord(l.at, at); });
        if (it == out.end()) {
            out.push_back({at, p.fx, p.fy, p.mz});
        } else {
            it->fx += p.fx;
            it->fy += p.fy;
            it->mz += p.mz;
        }
    }
    return out;
}

std::vector<DistOnElement> distributed_resultants(const FrameModel& m) {
    std::vector<DistOnElement> out;
    for (const auto& d : m.distributed_loads) {
        ElementSignature sig = signature(m, m.element(d.element));
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const DistOnElement& x) { return same_signature(x.sig, sig); });
        if (it == out.end())
            out.push_back({sig, d.w});
        else
            it->w += d.w;
    }
    return out;
}

std::string fix_str(const Fixity& f) {
    std::ostringstream os;
    os << "[" << (f.ux ? "1" : "0") << "," << (f.uy ? "1" : "0") << "," << (f.rz ? "1" : "0")
       << "]";
    return os.str();
}

} // namespace

ModelDiff diff_models(const FrameModel& generated, const FrameModel& truth) {
    ModelDiff diff;

    // nodes by coordinates
    std::vector<Coord> gen_nodes = node_coords(generated);
    std::vector<bool> used(gen_nodes.size(), false);
    for (const Coord& t : node_coords(truth)) {
        bool found = false;
        for (size_t k = 0; k < gen_nodes.size(); ++k) {
            if (!used[k] && same_coord(gen_nodes[k], t)) {
                used[k] = true;
                found = true;
                break;
            }
        }
        if (!found) diff.missing_nodes.push_back(t);
    }
    for (size_t k = 0; k < gen_nodes.size(); ++k)
        if (!used[k]) diff.extra_nodes.push_back(gen_nodes[k]);

    // elements by endpoint coordinate pairs
    std::vector<ElementSignature> gen_sigs;
    for (const auto& e : generated.elements) gen_sigs.push_back(signature(generated, e));
    std::vector<bool> sig_used(gen_sigs.size(), false);
    for (const auto& e : truth.elements) {
        ElementSignature t = signature(truth, e);
        bool found = false;
        for (size_t k = 0; k < gen_sigs.size(); ++k) {
            if (!sig_used[k] && same_signature(gen_sigs[k], t)) {
                sig_used[k] = true;
                found = true;
                break;
            }
        }
        if (!found) diff.missing_elements.push_back(t);
    }
    for (size_t k = 0; k < gen_sigs.size(); ++k)
        if (!sig_used[k]) diff.extra_elements.push_back(gen_sigs[k]);

    // supports: fixity compared at matching coordinates
    std::vector<bool> sup_used(generated.supports.size(), false);
    for (const auto& st : truth.supports) {
        const Node& tn = truth.node(st.node);
        bool matched = false;
        for (size_t k = 0; k < generated.supports.size(); ++k) {
            if (sup_used[k]) continue;
            const Node& gn = generated.node(generated.supports[k].node);
            if (same_coord({gn.x, gn.y}, {tn.x, tn.y})) {
                sup_used[k] = true;
                matched = true;
                if (!(generated.supports[k].fix == st.fix))
                    diff.support_mismatches.push_back(
                        "support at " + coord_str(tn.x, tn.y) + ": fixity " +
                        fix_str(generated.supports[k].fix) + " vs " + fix_str(st.fix));
                break;
            }
        }
        if (!matched)
            diff.support_mismatches.push_back("missing support at " + coord_str(tn.x, tn.y));
    }
    for (size_t k = 0; k < generated.supports.size(); ++k) {
        if (!sup_used[k]) {
            const Node& gn = generated.node(generated.supports[k].node);
            diff.support_mismatches.push_back("extra support at " + coord_str(gn.x, gn.y));
        }
    }

    // point loads: per-coordinate resultants, 1e-6 relative on components
    auto gen_loads = point_load_resultants(generated);
    auto truth_loads = point_load_resultants(truth);
    std::vector<bool> pl_used(gen_loads.size(), false);
    for (const auto& t : truth_loads) {
        bool matched = false;
        for (size_t k = 0; k < gen_loads.size(); ++k) {
            if (pl_used[k] || !same_coord(gen_loads[k].at, t.at)) continue;
            pl_used[k] = true;
            matched = true;
            if (!close(gen_loads[k].fx, t.fx) || !close(gen_loads[k].fy, t.fy) ||
                !close(gen_loads[k].mz, t.mz))
                diff.point_load_mismatches.push_back(
                    "point load at " + coord_str(t.at) + ": (" + format_number(gen_loads[k].fx) +
                    ", " + format_number(gen_loads[k].fy) + ", " + format_number(gen_loads[k].mz) +
                    ") vs (" + format_number(t.fx) + ", " + format_number(t.fy) + ", " +
                    format_number(t.mz) + ")");
            break;
        }
        if (!matched)
            diff.point_load_mismatches.push_back("missing point load at " + coord_str(t.at));
    }
    for (size_t k = 0; k < gen_loads.size(); ++k)
        if (!pl_used[k])
            diff.point_load_mismatches.push_back("extra point load at " +
                                                 coord_str(gen_loads[k].at));

    // distributed loads: signed intensity per element signature
    auto gen_dist = distributed_resultants(generated);
    auto truth_dist = distributed_resultants(truth);
    std::vector<bool> dl_used(gen_dist.size(), false);
    for (const auto& t : truth_dist) {
        bool matched = false;
        for (size_t k = 0; k < gen_dist.size(); ++k) {
            if (dl_used[k] || !same_signature(gen_dist[k].sig, t.sig)) continue;
            dl_used[k] = true;
            matched = true;
            if (!close(gen_dist[k].w, t.w))
                diff.distributed_load_mismatches.push_back(
                    "distributed load on " + sig_str(t.sig) + ": w " +
                    format_number(gen_dist[k].w) + " vs " + format_number(t.w));
            break;
        }
        if (!matched)
            diff.distributed_load_mismatches.push_back("missing distributed load on " +
                                                       sig_str(t.sig));
    }
    for (size_t k = 0; k < gen_dist.size(); ++k)
        if (!dl_used[k])
            diff.distributed_load_mismatches.push_back("extra distributed load on " +
                                                       sig_str(gen_dist[k].sig));

    return diff;
}

std::string ModelDiff::summary() const {
    std::ostringstream os;
    for (const auto& c : missing_nodes) os << "missing node " << coord_str(c) << "\n";
    for (const auto& c : extra_nodes) os << "extra node " << coord_str(c) << "\n";
    for (const auto& s : missing_elements) os << "missing element " << sig_str(s) << "\n";
    for (const auto& s : extra_elements) os << "extra element " << sig_str(s) << "\n";
    for (const auto& s : support_mismatches) os << s << "\n";
    for (const auto& s : point_load_mismatches) os << s << "\n";
    for (const auto& s : distributed_load_mismatches) os << s << "\n";
    return os.str();
}

} // namespace sawp
