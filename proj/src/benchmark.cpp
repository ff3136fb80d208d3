#include "sawp/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sawp/canonical.hpp"
#include "sawp/errors.hpp"
#include "sawp/fmd.hpp"
#include "sawp/lint.hpp"

namespace sawp::bench {
namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path case_dir(const std::filesystem::path& root, int id) {
    char name[16];
    std::snprintf(name, sizeof(name), "case%02d", id);
    return root / "benchmark" / name;
}

SAWPCase load_one(const std::filesystem::path& root, int id) {
    const auto dir = case_dir(root, id);
    SAWPCase c;
    c.id = id;
    c.description = read_file(dir / "description.txt");

    const std::string model_text = read_file(dir / "truth.fmd.json");
    c.truth_model = parse_document(model_text);

    using nlohmann::json;
    json meta;
    try {
        meta = json::parse(read_file(dir / "meta.json"));
    } catch (const json::parse_error& e) {
        throw AssetCorruptionError("case " + std::to_string(id) + ": bad meta.json: " + e.what());
    }
    if (!meta.contains("id") || meta["id"].get<int>() != id)
        throw AssetCorruptionError("case " + std::to_string(id) + ": meta id mismatch");
    c.pattern = pattern_from_string(meta["pattern"].get<std::string>());
    if (!c.truth_model.visualization)
        throw AssetCorruptionError("case " + std::to_string(id) + ": truth model lacks visualization");
    c.visualization = *c.truth_model.visualization;

    // meta duplicates counts and visualization for external consumers; they
    // must agree with the model document
    if (meta.contains("stated_counts") != c.truth_model.stated_counts.has_value())
        throw AssetCorruptionError("case " + std::to_string(id) + ": stated_counts drift");
    if (c.truth_model.stated_counts) {
        const auto& sc = *c.truth_model.stated_counts;
        const auto& mc = meta["stated_counts"];
        if (mc["columns"].get<int>() != sc.columns || mc["girders"].get<int>() != sc.girders ||
            mc["diagonals"].get<int>() != sc.diagonals ||
            mc["cantilevers"].get<int>() != sc.cantilevers)
            throw AssetCorruptionError("case " + std::to_string(id) + ": stated_counts drift");
    }

    // ground truth must be canonical, lint-clean, and solve to the pinned bytes
    if (serialize(canonicalize(c.truth_model)) != model_text)
        throw AssetCorruptionError("case " + std::to_string(id) + ": truth model is not canonical");
    const ValidationReport report = validate(c.truth_model);
    if (!report.clean()) {
        std::string msg = "case " + std::to_string(id) + ": truth model fails lints:";
        for (const auto& f : report.findings) msg += " " + f.lint;
        throw AssetCorruptionError(msg);
    }
    const std::string pinned = read_file(dir / "truth.solution.json");
    c.truth_solution = fem::solve(c.truth_model);
    if (fem::serialize(c.truth_solution) != pinned)
        throw AssetCorruptionError("case " + std::to_string(id) +
                                   ": pinned solution does not match a fresh solve");
    return c;
}

} // namespace

const char* to_string(Pattern p) {
    switch (p) {
    case Pattern::scaling: return "scaling";
    case Pattern::asymmetry: return "asymmetry";
    case Pattern::features: return "features";
    }
    return "?";
}

Pattern pattern_from_string(const std::string& s) {
    if (s == "scaling") return Pattern::scaling;
    if (s == "asymmetry") return Pattern::asymmetry;
    if (s == "features") return Pattern::features;
    throw SchemaError("unknown pattern '" + s + "'");
}

const char* to_string(Mutation m) {
    switch (m) {
    case Mutation::drop_node: return "drop_node";
    case Mutation::drop_element: return "drop_element";
    case Mutation::reshape_bays: return "reshape_bays";
    case Mutation::move_loads_all_floor: return "move_loads_all_floor";
    case Mutation::wrong_support: return "wrong_support";
    case Mutation::flip_distributed_sign: return "flip_distributed_sign";
    }
    return "?";
}

std::vector<SAWPCase> load_cases(const std::filesystem::path& root) {
    std::vector<SAWPCase> cases;
    for (int id = 1; id <= 20; ++id) cases.push_back(load_one(root, id));
    return cases;
}

SAWPCase case_by_id(int id, const std::filesystem::path& root) {
    if (id < 1 || id > 20)
        throw UnknownCaseError("case id " + std::to_string(id) + " is outside 1..20");
    return load_one(root, id);
}

namespace {

FrameModel rebuild_grid(const SAWPCase& c, int nbays, int nstories) {
    const FrameModel& base = c.truth_model;
    const Element* col = nullptr;
    const Element* gir = nullptr;
    for (const auto& e : base.elements) {
        if (!col && e.kind == ElementKind::column) col = &e;
        if (!gir && e.kind == ElementKind::girder) gir = &e;
    }
    if (!col || !gir)
        throw InapplicableMutationError("case " + std::to_string(c.id) +
                                        " has no column/girder pair to rebuild from");
    const double bay = 6.0, story = 4.0;

    FrameModel m;
    int next = 1;
    std::map<std::pair<int, int>, int> grid; // (ix, iy) -> node id
    for (int ix = 0; ix <= nbays; ++ix)
        for (int iy = 0; iy <= nstories; ++iy) {
            grid[{ix, iy}] = next;
            m.nodes.push_back({next++, ix * bay, iy * story});
        }
    int eid = 1;
    for (int ix = 0; ix <= nbays; ++ix)
        for (int iy = 0; iy < nstories; ++iy)
            m.elements.push_back({eid++, grid[{ix, iy}], grid[{ix, iy + 1}], ElementKind::column,
                                  col->E, col->A, col->I});
    for (int ix = 0; ix < nbays; ++ix)
        for (int iy = 1; iy <= nstories; ++iy)
            m.elements.push_back({eid++, grid[{ix, iy}], grid[{ix + 1, iy}], ElementKind::girder,
                                  gir->E, gir->A, gir->I});
    for (int ix = 0; ix <= nbays; ++ix) m.supports.push_back({grid[{ix, 0}], {true, true, true}});

    // transplant the load pattern by coordinates
    for (const auto& p : base.point_loads) {
        const Node& n = base.node(p.node);
        for (const auto& nn : m.nodes)
            if (std::abs(nn.x - n.x) <= kCoordTol && std::abs(nn.y - n.y) <= kCoordTol)
                m.point_loads.push_back({nn.id, p.fx, p.fy, p.mz});
    }
    if (!base.distributed_loads.empty()) {
        const double w = base.distributed_loads.front().w;
        const bool inward = base.distributed_loads.front().inward;
        for (const auto& e : m.elements)
            if (e.kind == ElementKind::girder) m.distributed_loads.push_back({e.id, w, inward});
    }
    m.stated_counts = base.stated_counts;
    m.visualization = base.visualization;
    return m;
}

} // namespace

FrameModel mutate_case(const SAWPCase& c, const MutantSpec& spec) {
    FrameModel m = c.truth_model;
    switch (spec.mutation) {
    case Mutation::drop_node: {
        const Node* victim = nullptr;
        for (const auto& n : m.nodes) {
            if (m.is_support(n.id)) continue;
            if (!victim || n.y > victim->y + kCoordTol ||
                (std::abs(n.y - victim->y) <= kCoordTol && n.x > victim->x))
                victim = &n;
        }
        if (!victim) throw InapplicableMutationError("no free node to drop");
        const int id = victim->id;
        std::set<int> dead_elements;
        for (const auto& e : m.elements)
            if (e.node_i == id || e.node_j == id) dead_elements.insert(e.id);
        std::erase_if(m.nodes, [&](const Node& n) { return n.id == id; });
        std::erase_if(m.elements, [&](const Element& e) { return dead_elements.count(e.id) > 0; });
        std::erase_if(m.point_loads, [&](const PointLoad& p) { return p.node == id; });
        std::erase_if(m.distributed_loads,
                      [&](const DistributedLoad& d) { return dead_elements.count(d.element) > 0; });
        break;
    }
    case Mutation::drop_element: {
        if (m.elements.empty()) throw InapplicableMutationError("no element to drop");
        int victim = 0;
        for (const auto& e : m.elements) victim = std::max(victim, e.id);
        std::erase_if(m.elements, [&](const Element& e) { return e.id == victim; });
        std::erase_if(m.distributed_loads,
                      [&](const DistributedLoad& d) { return d.element == victim; });
        break;
    }
    case Mutation::reshape_bays: {
        switch (c.id) {
        case 1: case 3: case 4: m = rebuild_grid(c, 2, 1); break;
        case 5: case 6: m = rebuild_grid(c, 2, 2); break;
        case 7: case 8: m = rebuild_grid(c, 1, 1); break;
        case 9: case 10: m = rebuild_grid(c, 2, 2); break;
        case 11: case 12: case 13: case 14: m = rebuild_grid(c, 2, 2); break;
        default:
            throw InapplicableMutationError("case " + std::to_string(c.id) +
                                            " has no bay structure to reshape");
        }
        break;
    }
    case Mutation::move_loads_all_floor: {
        if (m.point_loads.empty())
            throw InapplicableMutationError("case has no point loads to move");
        const PointLoad pattern = m.point_loads.front();
        double floor_y = 0.0;
        bool found = false;
        for (const auto& n : m.nodes) {
            if (m.is_support(n.id)) continue;
            if (!found || n.y < floor_y) {
                floor_y = n.y;
                found = true;
            }
        }
        m.point_loads.clear();
        for (const auto& n : m.nodes)
            if (!m.is_support(n.id) && std::abs(n.y - floor_y) <= kCoordTol)
                m.point_loads.push_back({n.id, pattern.fx, pattern.fy, pattern.mz});
        break;
    }
    case Mutation::wrong_support: {
        if (m.supports.empty()) throw InapplicableMutationError("case has no supports");
        auto it = std::max_element(m.supports.begin(), m.supports.end(),
                                   [](const Support& a, const Support& b) { return a.node < b.node; });
        if (!it->fix.rz)
            throw InapplicableMutationError("last support is already rotation-free");
        it->fix.rz = false;
        break;
    }
    case Mutation::flip_distributed_sign: {
        if (m.distributed_loads.empty())
            throw InapplicableMutationError("case has no distributed loads");
        for (auto& d : m.distributed_loads) d.w = -d.w;
        break;
    }
    }
    check_integrity(m);
    return canonicalize(m);
}

std::vector<MutantSpec> mutant_suite() {
    using grade::ErrorType;
    return {
        {11, Mutation::drop_node, ErrorType::type1_layout},
        {13, Mutation::drop_node, ErrorType::type1_layout},
        {5, Mutation::drop_element, ErrorType::type1_layout},
        {9, Mutation::drop_element, ErrorType::type1_layout},
        {5, Mutation::reshape_bays, ErrorType::type1_layout},
        {9, Mutation::reshape_bays, ErrorType::type1_layout},
        {5, Mutation::move_loads_all_floor, ErrorType::type2_boundary},
        {13, Mutation::move_loads_all_floor, ErrorType::type2_boundary},
        {9, Mutation::wrong_support, ErrorType::type2_boundary},
        {11, Mutation::wrong_support, ErrorType::type2_boundary},
        {6, Mutation::flip_distributed_sign, ErrorType::type2_boundary},
        {12, Mutation::flip_distributed_sign, ErrorType::type2_boundary},
    };
}

} // namespace sawp::bench
