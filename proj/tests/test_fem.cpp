#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sawp/errors.hpp"
#include "sawp/fem/solver.hpp"
#include "support/models.hpp"
#include "support/oracles.hpp"

using namespace sawp;
using namespace testmodels;

namespace {

void check_close(double got, double want, double rel) {
    CHECK(std::abs(got - want) <= rel * std::max(std::abs(want), 1e-12));
}

} // namespace

TEST_CASE("element geometry") {
    auto g = fem::element_geometry(0, 0, 0, 4);
    CHECK(g.length == doctest::Approx(4));
    CHECK(g.c == doctest::Approx(0));
    CHECK(g.s == doctest::Approx(1));

    g = fem::element_geometry(0, 4, 6, 4);
    CHECK(g.length == doctest::Approx(6));
    CHECK(g.c == doctest::Approx(1));
    CHECK(g.s == doctest::Approx(0));

    // the pitched-roof member: 4 m run, 3 m rise
    g = fem::element_geometry(0, 4, 4, 7);
    CHECK(g.length == doctest::Approx(5));
    CHECK(g.c == doctest::Approx(0.8));
    CHECK(g.s == doctest::Approx(0.6));
    CHECK(g.c * g.c + g.s * g.s == doctest::Approx(1).epsilon(1e-12));

    CHECK_THROWS_AS(fem::element_geometry(1, 2, 1, 2), ZeroLengthError);
}

TEST_CASE("local stiffness entries for unit properties") {
    const auto k = fem::local_stiffness(1.0, 1.0, 1.0, 1.0);
    CHECK(k(0, 0) == doctest::Approx(1));
    CHECK(k(1, 1) == doctest::Approx(12));
    CHECK(k(1, 2) == doctest::Approx(6));
    CHECK(k(2, 2) == doctest::Approx(4));
    CHECK(k(2, 5) == doctest::Approx(2));
}

TEST_CASE("local stiffness matches the quadrature oracle") {
    const double cases[][4] = {
        {1, 1, 1, 1}, {kE, kAc, kIc, 4.0}, {kE, kAg, kIg, 6.0}, {3.1e9, 7e-4, 2.2e-6, 2.5}};
    for (const auto& c : cases) {
        const auto k = fem::local_stiffness(c[0], c[1], c[2], c[3]);
        const auto ref = oracle::local_stiffness_quadrature(c[0], c[1], c[2], c[3]);
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                CHECK(k(a, b) == doctest::Approx(ref(a, b)).epsilon(1e-10));
        CHECK((k - k.transpose()).cwiseAbs().maxCoeff() == doctest::Approx(0));
    }
}

TEST_CASE("portal column stiffness blocks") {
    const auto k = fem::local_stiffness(kE, kAc, kIc, 4.0);
    CHECK(k(0, 0) == doctest::Approx(1e8));       // EA/L
    CHECK(k(1, 1) == doctest::Approx(6e5));       // 12EI/L^3
}

TEST_CASE("local stiffness has the three rigid-body modes") {
    const auto k = fem::local_stiffness(kE, kAg, kIg, 6.0);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> es(k);
    int zeros = 0;
    const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
    for (int i = 0; i < 6; ++i)
        if (std::abs(es.eigenvalues()[i]) < 1e-10 * scale) ++zeros;
    CHECK(zeros == 3);
    for (int i = 0; i < 6; ++i) CHECK(es.eigenvalues()[i] > -1e-10 * scale);
}

TEST_CASE("equivalent nodal loads match the quadrature oracle") {
    for (double w : {-1e4, 2.5e3, 7.7}) {
        for (double L : {6.0, 4.0, 2.3}) {
            const auto got = fem::equivalent_nodal_loads(w, L, 1.0, 0.0);
            const auto ref = oracle::uniform_load_quadrature(w, L);
            for (int a = 0; a < 6; ++a) {
                CHECK(got.equivalent_global[a] == doctest::Approx(ref[a]).epsilon(1e-12));
                CHECK(got.fixed_end_local[a] == doctest::Approx(-ref[a]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("uniform load end values") {
    const auto v = fem::equivalent_nodal_loads(-1e4, 6.0, 1.0, 0.0);
    CHECK(std::abs(v.fixed_end_local[1]) == doctest::Approx(30000)); // |w|L/2
    CHECK(std::abs(v.fixed_end_local[2]) == doctest::Approx(30000)); // |w|L^2/12
    CHECK(v.fixed_end_local[2] == doctest::Approx(-v.fixed_end_local[5]));
    const auto zero = fem::equivalent_nodal_loads(0.0, 6.0, 1.0, 0.0);
    CHECK(zero.equivalent_global.cwiseAbs().maxCoeff() == doctest::Approx(0));
}

TEST_CASE("portal assembly: size, symmetry, load vector") {
    const auto sys = fem::assemble(portal_frame());
    CHECK(sys.K.rows() == 12);
    CHECK(sys.K.cols() == 12);
    const double asym = (sys.K - sys.K.transpose()).cwiseAbs().maxCoeff();
    CHECK(asym <= 1e-9 * sys.K.cwiseAbs().maxCoeff());

    // node 2 carries the sway load plus the girder's left-end equivalents
    CHECK(sys.F[sys.dofs.index(2, 0)] == doctest::Approx(2000));
    CHECK(sys.F[sys.dofs.index(2, 1)] == doctest::Approx(-30000));
    CHECK(sys.F[sys.dofs.index(2, 2)] == doctest::Approx(-30000));
    CHECK(sys.F[sys.dofs.index(4, 0)] == doctest::Approx(0));
    CHECK(sys.F[sys.dofs.index(4, 1)] == doctest::Approx(-30000));
    CHECK(sys.F[sys.dofs.index(4, 2)] == doctest::Approx(30000));

    FrameModel unloaded = portal_frame();
    unloaded.point_loads.clear();
    unloaded.distributed_loads.clear();
    CHECK(fem::assemble(unloaded).F.cwiseAbs().maxCoeff() == doctest::Approx(0));
}

// ground-truth displacements and end forces for the portal under combined
// sway + gravity loading, 0.1% relative
TEST_CASE("portal solve reproduces the reference table") {
    const auto r = fem::solve(portal_frame());

    check_close(r.node_displacements.at(2)[0], 0.00203106, 1e-3);
    check_close(r.node_displacements.at(2)[1], -0.000293798, 1e-3);
    check_close(r.node_displacements.at(2)[2], -0.00458888, 1e-3);
    check_close(r.node_displacements.at(4)[0], 0.00199962, 1e-3);
    check_close(r.node_displacements.at(4)[1], -0.000306202, 1e-3);
    check_close(r.node_displacements.at(4)[2], 0.0042402, 1e-3);
    CHECK(r.node_displacements.at(1).cwiseAbs().maxCoeff() == 0.0);
    CHECK(r.node_displacements.at(3).cwiseAbs().maxCoeff() == 0.0);

    const double table[3][6] = {
        {29379.8, -4288.01, -4904.93, -29379.8, 4288.01, -12247.1},
        {30620.2, 6288.01, 9183.87, -30620.2, -6288.01, 15968.2},
        {6288.01, 29379.8, 12247.1, -6288.01, 30620.2, -15968.2},
    };
    for (int e = 1; e <= 3; ++e) {
        const auto& ef = r.element_end_forces.at(e);
        for (int k = 0; k < 3; ++k) {
            check_close(ef.end1[k], table[e - 1][k], 1e-3);
            check_close(ef.end2[k], table[e - 1][k + 3], 1e-3);
        }
    }

    // girder end shears carry the whole distributed resultant
    const auto& girder = r.element_end_forces.at(3);
    CHECK(girder.end1[1] + girder.end2[1] == doctest::Approx(60000).epsilon(1e-8));

    // reactions balance the applied loads
    const auto& r1 = r.reactions.at(1);
    const auto& r3 = r.reactions.at(3);
    CHECK(r1[0] + r3[0] == doctest::Approx(-2000).epsilon(1e-9));
    CHECK(r1[1] + r3[1] == doctest::Approx(60000).epsilon(1e-9));
}

TEST_CASE("cantilever tip sway equals PH^3/3EI") {
    const auto r = fem::solve(cantilever_column());
    const double expected = 2000.0 * 64.0 / (3.0 * kE * kIc); // 0.013333...
    CHECK(std::abs(r.node_displacements.at(2)[0] - expected) <= 1e-9 * expected);
}

TEST_CASE("simply supported beam: midspan deflection, shear, moment") {
    const auto r = fem::solve(simply_supported_beam());
    const double expected = 5.0 * 1e4 * std::pow(6.0, 4) / (384.0 * kE * kIg); // 0.015625
    CHECK(std::abs(-r.node_displacements.at(2)[1] - expected) <= 1e-9 * expected);

    const auto& e1 = r.element_end_forces.at(1);
    CHECK(std::abs(e1.end1[1] - 30000) <= 1e-9 * 30000); // wL/2 at the support
    CHECK(std::abs(e1.end2[2] - 45000) <= 1e-9 * 45000); // wL^2/8 at midspan
}

TEST_CASE("internal actions are consistent with the end triples") {
    const auto r = fem::solve(portal_frame());
    const auto& girder = r.element_end_forces.at(3);
    const double w = -1e4, L = 6.0;

    const auto at0 = fem::internal_action_at(girder, w, L, 0.0);
    const auto atL = fem::internal_action_at(girder, w, L, L);
    CHECK(at0.V == doctest::Approx(girder.end1[1]).epsilon(1e-8));
    CHECK(at0.M == doctest::Approx(-girder.end1[2]).epsilon(1e-8));
    CHECK(atL.V == doctest::Approx(-girder.end2[1]).epsilon(1e-8));
    CHECK(atL.M == doctest::Approx(girder.end2[2]).epsilon(1e-8));
    CHECK(at0.N == doctest::Approx(-girder.end1[0]).epsilon(1e-8));

    // where V crosses zero the moment is extremal (dM/dx = V)
    const double x0 = -girder.end1[1] / w;
    CHECK(x0 > 0);
    CHECK(x0 < L);
    const double m0 = fem::internal_action_at(girder, w, L, x0).M;
    CHECK(m0 > fem::internal_action_at(girder, w, L, x0 - 0.01).M);
    CHECK(m0 > fem::internal_action_at(girder, w, L, x0 + 0.01).M);

    CHECK_THROWS_AS(fem::internal_action_at(girder, w, L, -0.5), DomainError);
    CHECK_THROWS_AS(fem::internal_action_at(girder, w, L, L + 0.5), DomainError);
}

TEST_CASE("simply supported midspan moment via internal actions") {
    const auto r = fem::solve(simply_supported_beam());
    const auto a = fem::internal_action_at(r.element_end_forces.at(1), -1e4, 3.0, 3.0);
    CHECK(a.M == doctest::Approx(45000).epsilon(1e-9));
}

TEST_CASE("mechanism raises SingularSystemError") {
    // a fully fixed column plus a floating, unattached beam
    FrameModel m;
    m.nodes = {{1, 0, 0}, {2, 0, 4}, {3, 10, 0}, {4, 16, 0}};
    m.elements = {{1, 1, 2, ElementKind::column, kE, kAc, kIc},
                  {2, 3, 4, ElementKind::girder, kE, kAg, kIg}};
    m.supports = {{1, {true, true, true}}};
    m.point_loads = {{4, 0.0, -1000.0, 0.0}};
    CHECK_THROWS_AS(fem::solve(m), SingularSystemError);
}

TEST_CASE("unloaded model solves to all zeros") {
    FrameModel m = portal_frame();
    m.point_loads.clear();
    m.distributed_loads.clear();
    const auto r = fem::solve(m);
    for (const auto& [id, u] : r.node_displacements)
        CHECK(u.cwiseAbs().maxCoeff() == doctest::Approx(0));
    for (const auto& [id, ef] : r.element_end_forces) {
        CHECK(ef.end1.cwiseAbs().maxCoeff() == doctest::Approx(0));
        CHECK(ef.end2.cwiseAbs().maxCoeff() == doctest::Approx(0));
    }
}

TEST_CASE("solve result serialization round-trips") {
    const auto r = fem::solve(portal_frame());
    const std::string text = fem::serialize(r);
    const auto parsed = fem::parse_solve_result(text);
    CHECK(fem::serialize(parsed) == text);
    CHECK(parsed.node_displacements.size() == 4);
    CHECK(parsed.element_end_forces.size() == 3);
    CHECK(parsed.reactions.size() == 2);
    // 9 significant digits suffice to round-trip the displayed values
    CHECK(parsed.node_displacements.at(2)[0] ==
          doctest::Approx(r.node_displacements.at(2)[0]).epsilon(1e-8));
}
