#pragma once

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "sawp/errors.hpp"

namespace sawp::fem {

// Length and direction cosines of a 2-node element. Local x runs from node i
// to node j; local y is 90 degrees counterclockwise.
struct ElementGeometry {
    double length = 0.0;
    double c = 1.0; // cos
    double s = 0.0; // sin
};

inline ElementGeometry element_geometry(double xi, double yi, double xj, double yj) {
    const double dx = xj - xi;
    const double dy = yj - yi;
    const double L = std::hypot(dx, dy);
    if (!(L > 0.0))
        throw ZeroLengthError("element endpoints coincide at (" + std::to_string(xi) + ", " +
                              std::to_string(yi) + ")");
    return {L, dx / L, dy / L};
}

// Euler-Bernoulli beam-column stiffness in local axes, DOF order
// (ux_i, uy_i, rz_i, ux_j, uy_j, rz_j): axial block EA/L, bending blocks
// 12EI/L^3, 6EI/L^2, 4EI/L, 2EI/L in the standard Hermitian pattern.
template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> local_stiffness(Scalar E, Scalar A, Scalar I, Scalar L) {
    const Scalar a = E * A / L;
    const Scalar b = Scalar(12) * E * I / (L * L * L);
    const Scalar c = Scalar(6) * E * I / (L * L);
    const Scalar d = Scalar(4) * E * I / L;
    const Scalar e = Scalar(2) * E * I / L;
    Eigen::Matrix<Scalar, 6, 6> k;
    k << a, 0, 0, -a, 0, 0,
         0, b, c, 0, -b, c,
         0, c, d, 0, -c, e,
        -a, 0, 0, a, 0, 0,
         0, -b, -c, 0, b, -c,
         0, c, e, 0, -c, d;
    return k;
}

// Global-to-local transformation T (block diagonal rotation); u_local = T u.
template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> transformation(Scalar c, Scalar s) {
    Eigen::Matrix<Scalar, 6, 6> T = Eigen::Matrix<Scalar, 6, 6>::Zero();
    T(0, 0) = c;  T(0, 1) = s;
    T(1, 0) = -s; T(1, 1) = c;
    T(2, 2) = 1;
    T(3, 3) = c;  T(3, 4) = s;
    T(4, 3) = -s; T(4, 4) = c;
    T(5, 5) = 1;
    return T;
}

template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> global_stiffness(Scalar E, Scalar A, Scalar I, Scalar L, Scalar c,
                                             Scalar s) {
    const auto T = transformation(c, s);
    return T.transpose() * local_stiffness(E, A, I, L) * T;
}

template <typename Scalar>
struct UniformLoadVectors {
    Eigen::Matrix<Scalar, 6, 1> equivalent_global; // added to the global load vector
    Eigen::Matrix<Scalar, 6, 1> fixed_end_local;   // added back when recovering end forces
};

// Consistent nodal loads for a uniform transverse load w along local +y:
// local equivalent vector (0, wL/2, wL^2/12, 0, wL/2, -wL^2/12); the fixed-end
// forces are its negation.
template <typename Scalar>
UniformLoadVectors<Scalar> equivalent_nodal_loads(Scalar w, Scalar L, Scalar c, Scalar s) {
    Eigen::Matrix<Scalar, 6, 1> local;
    local << 0, w * L / Scalar(2), w * L * L / Scalar(12), 0, w * L / Scalar(2),
        -w * L * L / Scalar(12);
    UniformLoadVectors<Scalar> out;
    out.equivalent_global = transformation(c, s).transpose() * local;
    out.fixed_end_local = -local;
    return out;
}

inline UniformLoadVectors<double> equivalent_nodal_loads(double w, const ElementGeometry& g) {
    return equivalent_nodal_loads(w, g.length, g.c, g.s);
}

} // namespace sawp::fem
