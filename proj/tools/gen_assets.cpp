// Regenerates the bundled benchmark assets (benchmark/case01..case20 and the
// default in-context exemplar). The case models are reviewed encodings of the
// bundled word problems; solutions are pinned from this repository's kernel.
//
// Usage: sawp-gen-assets [repo root]

#include <cassert>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "sawp/canonical.hpp"
#include "sawp/fem/solver.hpp"
#include "sawp/fmd.hpp"
#include "sawp/lint.hpp"
#include "sawp/numfmt.hpp"

using namespace sawp;

namespace {

constexpr double kE = 2e11;
constexpr double kAc = 2e-3;
constexpr double kAg = 6e-3; // girders, diagonals, cantilevers
constexpr double kIc = 1.6e-5;
constexpr double kIg = 5.4e-5;
constexpr double kP = 2e3;
constexpr double kW = 1e4;

class Builder {
public:
    int node(double x, double y) {
        const auto key = std::make_pair(x, y);
        auto it = coords_.find(key);
        if (it != coords_.end()) return it->second;
        const int id = int(m_.nodes.size()) + 1;
        m_.nodes.push_back({id, x, y});
        coords_[key] = id;
        return id;
    }

    int element(double xi, double yi, double xj, double yj, ElementKind kind) {
        const double A = kind == ElementKind::column ? kAc : kAg;
        const double I = kind == ElementKind::column ? kIc : kIg;
        const int id = int(m_.elements.size()) + 1;
        m_.elements.push_back({id, node(xi, yi), node(xj, yj), kind, kE, A, I});
        return id;
    }

    void fixed_support(double x, double y) { m_.supports.push_back({node(x, y), {true, true, true}}); }

    void pload(double x, double y, double fx, double fy, double mz = 0.0) {
        m_.point_loads.push_back({node(x, y), fx, fy, mz});
    }

    // inward/downward uniform load of the given magnitude on an element
    void dload(int element_id, double magnitude) {
        const Element& e = m_.element(element_id);
        m_.distributed_loads.push_back(
            {element_id, signed_uniform_load(e, magnitude, true, m_), true});
    }

    FrameModel finish(int columns, int girders, int diagonals, int cantilevers) {
        m_.stated_counts = StatedCounts{columns, girders, diagonals, cantilevers};
        VisualizationSpec viz;
        viz.diagrams = {DiagramKind::deformed, DiagramKind::axial, DiagramKind::shear,
                        DiagramKind::moment};
        m_.visualization = viz;
        check_integrity(m_);
        return canonicalize(m_);
    }

private:
    FrameModel m_;
    std::map<std::pair<double, double>, int> coords_;
};

// rectangular grid frame with loads at the left column tops or on all girders
FrameModel grid_case(int bays, int stories, bool point_loads) {
    Builder b;
    for (int ix = 0; ix <= bays; ++ix)
        for (int iy = 0; iy < stories; ++iy)
            b.element(6.0 * ix, 4.0 * iy, 6.0 * ix, 4.0 * (iy + 1), ElementKind::column);
    std::vector<int> girders;
    for (int ix = 0; ix < bays; ++ix)
        for (int iy = 1; iy <= stories; ++iy)
            girders.push_back(
                b.element(6.0 * ix, 4.0 * iy, 6.0 * (ix + 1), 4.0 * iy, ElementKind::girder));
    for (int ix = 0; ix <= bays; ++ix) b.fixed_support(6.0 * ix, 0.0);
    if (point_loads) {
        for (int iy = 1; iy <= stories; ++iy) b.pload(0.0, 4.0 * iy, kP, 0.0);
    } else {
        for (int g : girders) b.dload(g, kW);
    }
    const int n_col = (bays + 1) * stories;
    const int n_gir = bays * stories;
    return b.finish(n_col, n_gir, 0, 0);
}

// simple portal: two columns, one girder
FrameModel portal_case(bool point_load, bool distributed) {
    Builder b;
    b.element(0, 0, 0, 4, ElementKind::column);
    b.element(6, 0, 6, 4, ElementKind::column);
    const int girder = b.element(0, 4, 6, 4, ElementKind::girder);
    b.fixed_support(0, 0);
    b.fixed_support(6, 0);
    if (point_load) b.pload(0, 4, kP, 0);
    if (distributed) b.dload(girder, kW);
    return b.finish(2, 1, 0, 0);
}

// one column braced by a diagonal anchored 6 m to its left
FrameModel knee_brace_case() {
    Builder b;
    b.element(6, 0, 6, 4, ElementKind::column);
    b.element(0, 0, 6, 4, ElementKind::diagonal);
    b.fixed_support(0, 0);
    b.fixed_support(6, 0);
    b.pload(6, 4, kP, 0);
    return b.finish(1, 0, 1, 0);
}

// asymmetric two-bay frame; tall side selects which bay has two stories
FrameModel lshape_case(bool left_tall, bool point_loads) {
    Builder b;
    const double tall_x0 = left_tall ? 0.0 : 6.0;
    for (double x : {0.0, 6.0, 12.0}) b.element(x, 0, x, 4, ElementKind::column);
    b.element(tall_x0, 4, tall_x0, 8, ElementKind::column);
    b.element(tall_x0 + 6.0, 4, tall_x0 + 6.0, 8, ElementKind::column);
    std::vector<int> girders;
    girders.push_back(b.element(0, 4, 6, 4, ElementKind::girder));
    girders.push_back(b.element(6, 4, 12, 4, ElementKind::girder));
    girders.push_back(b.element(tall_x0, 8, tall_x0 + 6.0, 8, ElementKind::girder));
    for (double x : {0.0, 6.0, 12.0}) b.fixed_support(x, 0);
    if (point_loads) {
        // the left-side column top on each story
        b.pload(0, 4, kP, 0);
        b.pload(tall_x0, 8, kP, 0);
    } else {
        for (int g : girders) b.dload(g, kW);
    }
    return b.finish(5, 3, 0, 0);
}

// gable frame: two columns and a two-member pitched roof
FrameModel gable_case(bool point_load) {
    Builder b;
    b.element(0, 0, 0, 4, ElementKind::column);
    b.element(8, 0, 8, 4, ElementKind::column);
    const int left = b.element(0, 4, 4, 7, ElementKind::diagonal);
    const int right = b.element(4, 7, 8, 4, ElementKind::diagonal);
    b.fixed_support(0, 0);
    b.fixed_support(8, 0);
    if (point_load) {
        b.pload(0, 4, kP, 0);
    } else {
        b.dload(left, kW);
        b.dload(right, kW);
    }
    return b.finish(2, 0, 2, 0);
}

// portal with ground-anchored braces outside both columns
FrameModel braced_portal_case(bool point_load) {
    Builder b;
    b.element(4, 0, 4, 4, ElementKind::column);
    b.element(10, 0, 10, 4, ElementKind::column);
    const int girder = b.element(4, 4, 10, 4, ElementKind::girder);
    b.element(0, 0, 4, 4, ElementKind::diagonal);
    b.element(10, 4, 14, 0, ElementKind::diagonal);
    for (double x : {0.0, 4.0, 10.0, 14.0}) b.fixed_support(x, 0);
    if (point_load)
        b.pload(4, 4, kP, 0);
    else
        b.dload(girder, kW);
    return b.finish(2, 1, 2, 0);
}

// portal with cantilever wings at both girder ends
FrameModel cantilever_case(bool point_loads) {
    Builder b;
    b.element(0, 0, 0, 4, ElementKind::column);
    b.element(6, 0, 6, 4, ElementKind::column);
    const int girder = b.element(0, 4, 6, 4, ElementKind::girder);
    const int left = b.element(-2, 4, 0, 4, ElementKind::cantilever);
    const int right = b.element(6, 4, 8, 4, ElementKind::cantilever);
    b.fixed_support(0, 0);
    b.fixed_support(6, 0);
    if (point_loads) {
        b.pload(-2, 4, 0, -kP);
        b.pload(8, 4, 0, -kP);
    } else {
        b.dload(girder, kW);
        b.dload(left, kW);
        b.dload(right, kW);
    }
    return b.finish(2, 1, 0, 2);
}

struct CaseDef {
    int id;
    bench::Pattern pattern;
    FrameModel model;
    std::string description;
};

const char* kTail =
    "All supports are fixed. What are the resulting deformations and internal forces "
    "(axial, shear, and moment) in the frame?";

std::string props(const std::string& other_kind) {
    return "considering elastic material properties with a Young's modulus E of 2e11 Pa, "
           "column cross-sectional area of 2e-3 m^2, " +
           other_kind +
           " cross-sectional area of 6e-3 m^2, column moment of inertia of 1.6e-5 m^4, and " +
           other_kind + " moment of inertia of 5.4e-5 m^4. ";
}

std::vector<CaseDef> build_cases() {
    using bench::Pattern;
    std::vector<CaseDef> cases;

    cases.push_back({1, Pattern::scaling, portal_case(true, true),
        "How does a simple 2D frame, consisting of two vertical columns (4e0 meters in height) "
        "and one horizontal girder (6e0 meters in length), behave under the combined effects of "
        "a horizontal point load of 2e3 N at the top of one column and a uniform vertical "
        "distributed load of 1e4 N/m along the girder, " + props("girder") + kTail});

    cases.push_back({2, Pattern::features, knee_brace_case(),
        "How does a simple 2D frame, consisting of one vertical column (4e0 meters in height), "
        "one diagonal member forming the brace in the left side of the column, where the "
        "horizontal height from the top of the column to the support of the diagonal member "
        "is 6e0 meters, behave under the effect of a horizontal point load of 2e3 N at the top "
        "of the column, " + props("diagonal member") + kTail});

    cases.push_back({3, Pattern::scaling, portal_case(true, false),
        "How does a simple 2D frame, consisting of two vertical columns (4e0 meters in height) "
        "and one horizontal girder (6e0 meters in length), behave under the effect of a "
        "horizontal point load of 2e3 N at the top of one column, " + props("girder") + kTail});

    cases.push_back({4, Pattern::scaling, portal_case(false, true),
        "How does a simple 2D frame, consisting of two vertical columns (4e0 meters in height) "
        "and one horizontal girder (6e0 meters in length), behave under the effect of a uniform "
        "vertical distributed load of 1e4 N/m along the girder, " + props("girder") + kTail});

    cases.push_back({5, Pattern::scaling, grid_case(1, 2, true),
        "How does a two-story 2D frame, consisting of four vertical columns (4 meters in height "
        "for each story) and two horizontal girders (6 meters in length each), behave under the "
        "horizontal point load of 2e3 N at each column on the left side? Consider elastic "
        "material properties with Young's modulus of 2e11 Pa, column cross-sectional area of "
        "2e-3 m^2, girder cross-sectional area of 6e-3 m^2, column moment of inertia of "
        "1.6e-5 m^4, and girder moment of inertia of 5.4e-5 m^4. All supports are fixed. What "
        "are the resulting deformations and internal forces (axial, shear, and bending moment) "
        "within the frame?"});

    cases.push_back({6, Pattern::scaling, grid_case(1, 2, false),
        "How does a two-story 2D frame, consisting of four vertical columns (4 meters in height "
        "for each story) and two horizontal girders (6 meters in length each), behave under the "
        "uniform vertical distributed load of 1e4 N/m along each girder? Consider elastic "
        "material properties with Young's modulus of 2e11 Pa, column cross-sectional area of "
        "2e-3 m^2, girder cross-sectional area of 6e-3 m^2, column moment of inertia of "
        "1.6e-5 m^4, and girder moment of inertia of 5.4e-5 m^4. All supports are fixed. What "
        "are the resulting deformations and internal forces (axial, shear, and bending moment) "
        "within the frame?"});

    cases.push_back({7, Pattern::scaling, grid_case(2, 1, true),
        "How does a one-story two-bay 2D frame, consisting of three vertical columns (4 meters "
        "in height each) and two horizontal girders (6 meters in length each), behave under the "
        "horizontal point load of 2e3 N at the top of the column on the left side? Consider "
        "elastic material properties with Young's modulus of 2e11 Pa, column cross-sectional "
        "area of 2e-3 m^2, girder cross-sectional area of 6e-3 m^2, column moment of inertia of "
        "1.6e-5 m^4, and girder moment of inertia of 5.4e-5 m^4. All supports are fixed. What "
        "are the resulting deformations and internal forces (axial, shear, and bending moment) "
        "within the frame?"});

    cases.push_back({8, Pattern::scaling, grid_case(2, 1, false),
        "How does a one-story two-bay simple 2D frame, consisting of three vertical columns "
        "(4 meters in height each) and two horizontal girders (6 meters in length each), behave "
        "under the uniform vertical distributed load of 1e4 N/m along each girder? Consider "
        "elastic material properties with Young's modulus of 2e11 Pa, column cross-sectional "
        "area of 2e-3 m^2, girder cross-sectional area of 6e-3 m^2, column moment of inertia of "
        "1.6e-5 m^4, and girder moment of inertia of 5.4e-5 m^4. All supports are fixed. What "
        "are the resulting deformations and internal forces (axial, shear, and bending moment) "
        "within the frame?"});

    cases.push_back({9, Pattern::scaling, grid_case(3, 2, true),
        "How does a two-story three-bay 2D frame, consisting of 8 vertical columns (4 meters in "
        "height each) and 6 horizontal girders (6 meters in length each), behave under the "
        "horizontal point load of 2e3 N at each column on the left side? Consider elastic "
        "material properties with Young's modulus of 2e11 Pa, column cross-sectional area of "
        "2e-3 m^2, girder cross-sectional area of 6e-3 m^2, column moment of inertia of "
        "1.6e-5 m^4, and girder moment of inertia of 5.4e-5 m^4. All supports are fixed. What "
        "are the resulting deformations and internal forces (axial force, shear force, and "
        "bending moment) within the frame?"});

    cases.push_back({10, Pattern::scaling, grid_case(3, 2, false),
        "How does a two-story three-bay 2D frame, consisting of 8 vertical columns (4 meters in "
        "height each) and 6 horizontal girders (6 meters in length each), behave under the "
        "uniform vertical distributed load of 1e4 N/m along each girder? Consider elastic "
        "material properties with Young's modulus of 2e11 Pa, column cross-sectional area of "
        "2e-3 m^2, girder cross-sectional area of 6e-3 m^2, column moment of inertia of "
        "1.6e-5 m^4, and girder moment of inertia of 5.4e-5 m^4. All supports are fixed. What "
        "are the resulting deformations and internal forces (axial force, shear force, and "
        "bending moment) within the frame?"});

    cases.push_back({11, Pattern::asymmetry, lshape_case(true, true),
        "How does a two-story two-bay 2D frame, where the first bay has two stories and the "
        "second bay has one story, consisting of 5 vertical columns (4 meters in height each) "
        "and 3 horizontal girders (6 meters in length each), behave under the horizontal point "
        "load of 2e3 N at each column on the left side? Consider elastic material properties "
        "with Young's modulus of 2e11 Pa, column cross-sectional area of 2e-3 m^2, girder "
        "cross-sectional area of 6e-3 m^2, column moment of inertia of 1.6e-5 m^4, and girder "
        "moment of inertia of 5.4e-5 m^4. All supports are fixed. What are the resulting "
        "deformations and internal forces (axial force, shear force, and bending moment) within "
        "the frame?"});

    cases.push_back({12, Pattern::asymmetry, lshape_case(true, false),
        "How does a two-story two-bay 2D frame, where the first bay has two stories and the "
        "second bay has one story, consisting of 5 vertical columns (4 meters in height each) "
        "and 3 horizontal girders (6 meters in length each), behave under the uniform vertical "
        "distributed load of 1e4 N/m along each girder? Consider elastic material properties "
        "with Young's modulus of 2e11 Pa, column cross-sectional area of 2e-3 m^2, girder "
        "cross-sectional area of 6e-3 m^2, column moment of inertia of 1.6e-5 m^4, and girder "
        "moment of inertia of 5.4e-5 m^4. All supports are fixed. What are the resulting "
        "deformations and internal forces (axial force, shear force, and bending moment) within "
        "the frame?"});

    cases.push_back({13, Pattern::asymmetry, lshape_case(false, true),
        "How does a two-story two-bay 2D frame, where the first bay has one story and the "
        "second bay has two stories, consisting of 5 vertical columns (4 meters in height each) "
        "and 3 horizontal girders (6 meters in length each), behave under the horizontal point "
        "load of 2e3 N at the column on the left side on the first story and on the second "
        "story? Consider elastic material properties with Young's modulus of 2e11 Pa, column "
        "cross-sectional area of 2e-3 m^2, girder cross-sectional area of 6e-3 m^2, column "
        "moment of inertia of 1.6e-5 m^4, and girder moment of inertia of 5.4e-5 m^4. All "
        "supports are fixed. What are the resulting deformations and internal forces (axial "
        "force, shear force, and bending moment) within the frame?"});

    cases.push_back({14, Pattern::asymmetry, lshape_case(false, false),
        "How does a two-story two-bay 2D frame, where the first bay has one story and the "
        "second bay has two stories, consisting of 5 vertical columns (4 meters in height each) "
        "and 3 horizontal girders (6 meters in length each), behave under the uniform vertical "
        "distributed load of 1e4 N/m along each girder? Consider elastic material properties "
        "with Young's modulus of 2e11 Pa, column cross-sectional area of 2e-3 m^2, girder "
        "cross-sectional area of 6e-3 m^2, column moment of inertia of 1.6e-5 m^4, and girder "
        "moment of inertia of 5.4e-5 m^4. All supports are fixed. What are the resulting "
        "deformations and internal forces (axial force, shear force, and bending moment) within "
        "the frame?"});

    cases.push_back({15, Pattern::features, gable_case(true),
        "How does a simple 2D frame, consisting of two vertical columns (4e0 meters in height) "
        "with a spacing of 8e0 meters between the two columns, have two identical diagonal "
        "members forming the roof in the middle of the columns, where the vertical height from "
        "the top of the columns to the peak of the roof is 3e0 meters, behave under the effect "
        "of a horizontal point load of 2e3 N at the left column? " + props("diagonal member") +
        kTail});

    cases.push_back({16, Pattern::features, gable_case(false),
        "How does a simple 2D frame, consisting of two vertical columns (4e0 meters in height) "
        "with a spacing of 8e0 meters between the two columns, have two identical diagonal "
        "members forming the roof in the middle of the columns, where the vertical height from "
        "the top of the columns to the peak of the roof is 3e0 meters, behave under the uniform "
        "distributed load of 1e4 N/m along each diagonal member? The direction of the "
        "distributed load is inward. " + props("diagonal member") + kTail});

    cases.push_back({17, Pattern::features, braced_portal_case(true),
        "How does a simple 2D frame, consisting of two vertical columns (4e0 meters in height), "
        "one horizontal girder (6e0 meters in length) and two diagonal members forming the "
        "braces (one node of the diagonal member is connected to the top of the column and "
        "another node is connected to the ground), one is on the left side of the left column "
        "and another is on the right side of the right column, where the horizontal length from "
        "the top of the column to the support of the diagonal member is 4e0 meters, behave "
        "under the effect of a horizontal point load of 2e3 N at the left column? " +
        props("girder and diagonal member") + kTail});

    cases.push_back({18, Pattern::features, braced_portal_case(false),
        "How does a simple 2D frame, consisting of two vertical columns (4e0 meters in height), "
        "one horizontal girder (6e0 meters in length) and two diagonal members forming the "
        "braces (one node of the diagonal member is connected to the top of the column and "
        "another node is connected to the ground), one is on the left side of the left column "
        "and another is on the right side of the right column, where the horizontal length from "
        "the top of the column to the support of the diagonal member is 4e0 meters, behave "
        "under the uniform distributed load of 1e4 N/m along the girder? " +
        props("girder and diagonal member") + kTail});

    cases.push_back({19, Pattern::features, cantilever_case(true),
        "How does a simple 2D frame, consisting of two vertical columns (4e0 meters in height), "
        "one horizontal girder (6e0 meters in length) and two cantilever beams (2e0 meters in "
        "length) on both sides which are connected to the top of two columns, behave under the "
        "combined effects of two vertical point loads of 2e3 N at the end of each cantilever "
        "beam on both sides? " + props("girder and cantilever beam") + kTail});

    cases.push_back({20, Pattern::features, cantilever_case(false),
        "How does a simple 2D frame, consisting of two vertical columns (4e0 meters in height), "
        "one horizontal girder (6e0 meters in length) and two cantilever beams (2e0 meters in "
        "length) on both sides which are connected to the top of two columns, behave under the "
        "uniform vertical distributed load of 1e4 N/m along the girder and two cantilever "
        "beams? " + props("girder and cantilever beam") + kTail});

    return cases;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        std::exit(1);
    }
    out << content;
}

std::string meta_json(const CaseDef& c) {
    const auto& sc = *c.model.stated_counts;
    const auto& viz = *c.model.visualization;
    std::string out = "{\n  \"id\": " + std::to_string(c.id) + ",\n  \"pattern\": \"" +
                      bench::to_string(c.pattern) + "\",\n  \"stated_counts\": {\"columns\": " +
                      std::to_string(sc.columns) + ", \"girders\": " + std::to_string(sc.girders) +
                      ", \"diagonals\": " + std::to_string(sc.diagonals) +
                      ", \"cantilevers\": " + std::to_string(sc.cantilevers) +
                      "},\n  \"visualization\": " + serialize(viz) + "\n}\n";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    const std::filesystem::path root = argc > 1 ? argv[1] : ".";
    const auto cases = build_cases();
    if (cases.size() != 20) {
        std::cerr << "expected 20 cases\n";
        return 1;
    }

    for (const auto& c : cases) {
        const ValidationReport lint = validate(c.model);
        if (!lint.clean()) {
            std::cerr << "case " << c.id << " fails lints:\n";
            for (const auto& f : lint.findings) std::cerr << "  [" << f.lint << "] " << f.message << "\n";
            return 1;
        }
        const fem::SolveResult solution = fem::solve(c.model);

        char name[16];
        std::snprintf(name, sizeof(name), "case%02d", c.id);
        const auto dir = root / "benchmark" / name;
        std::filesystem::create_directories(dir);
        write_file(dir / "description.txt", c.description + "\n");
        write_file(dir / "truth.fmd.json", serialize(c.model));
        write_file(dir / "truth.solution.json", fem::serialize(solution));
        write_file(dir / "meta.json", meta_json(c));
        std::cout << name << ": " << c.model.nodes.size() << " nodes, "
                  << c.model.elements.size() << " elements\n";
    }

    // default in-context exemplar: the structural document of case 1
    std::filesystem::create_directories(root / "prompts" / "icl");
    write_file(root / "prompts" / "icl" / "example1.fmd.json",
               serialize_structural(cases.front().model));
    std::cout << "wrote prompts/icl/example1.fmd.json\n";
    return 0;
}
