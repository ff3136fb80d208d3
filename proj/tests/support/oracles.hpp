#pragma once

// Test-only oracles, independent of the library's closed-form element math:
// the stiffness matrix and consistent load vector are integrated numerically
// from the Hermite/linear shape functions.

#include <array>
#include <functional>

#include <Eigen/Dense>

namespace oracle {

// 4-point Gauss-Legendre on [0, 1]
inline double integrate01(const std::function<double(double)>& f) {
    static const std::array<double, 4> xs = {0.06943184420297371, 0.33000947820757187,
                                             0.6699905217924281, 0.9305681557970263};
    static const std::array<double, 4> ws = {0.1739274225687269, 0.3260725774312731,
                                             0.3260725774312731, 0.1739274225687269};
    double sum = 0;
    for (int k = 0; k < 4; ++k) sum += ws[k] * f(xs[k]);
    return sum;
}

// second derivatives (w.r.t. x) of the Hermite transverse shape functions
inline double hermite_dd(int i, double xi, double L) {
    switch (i) {
    case 0: return (-6 + 12 * xi) / (L * L);
    case 1: return (-4 + 6 * xi) / L;
    case 2: return (6 - 12 * xi) / (L * L);
    case 3: return (-2 + 6 * xi) / L;
    }
    return 0;
}

inline double hermite(int i, double xi, double L) {
    switch (i) {
    case 0: return 1 - 3 * xi * xi + 2 * xi * xi * xi;
    case 1: return L * (xi - 2 * xi * xi + xi * xi * xi);
    case 2: return 3 * xi * xi - 2 * xi * xi * xi;
    case 3: return L * (-xi * xi + xi * xi * xi);
    }
    return 0;
}

// stiffness by integrating EI v'' products and EA u' products
inline Eigen::Matrix<double, 6, 6> local_stiffness_quadrature(double E, double A, double I,
                                                              double L) {
    Eigen::Matrix<double, 6, 6> k = Eigen::Matrix<double, 6, 6>::Zero();
    const int bend_dof[4] = {1, 2, 4, 5};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            k(bend_dof[a], bend_dof[b]) = E * I * L *
                integrate01([&](double xi) { return hermite_dd(a, xi, L) * hermite_dd(b, xi, L); });
    const double axial = E * A / L; // (du/dx)^2 with linear interpolation
    k(0, 0) = k(3, 3) = axial;
    k(0, 3) = k(3, 0) = -axial;
    return k;
}

// consistent nodal loads for a uniform transverse load, by integrating w * N_i
inline Eigen::Matrix<double, 6, 1> uniform_load_quadrature(double w, double L) {
    Eigen::Matrix<double, 6, 1> f = Eigen::Matrix<double, 6, 1>::Zero();
    const int bend_dof[4] = {1, 2, 4, 5};
    for (int a = 0; a < 4; ++a)
        f(bend_dof[a]) = w * L * integrate01([&](double xi) { return hermite(a, xi, L); });
    return f;
}

} // namespace oracle
