#pragma once

// Hand-built models shared across test binaries.

#include "sawp/model.hpp"

namespace testmodels {

inline constexpr double kE = 2e11;
inline constexpr double kAc = 2e-3;
inline constexpr double kAg = 6e-3;
inline constexpr double kIc = 1.6e-5;
inline constexpr double kIg = 5.4e-5;

// the two-column / one-girder portal with a 2 kN sway load and a 10 kN/m
// gravity load on the girder; nodes 1 (0,0), 2 (0,4), 3 (6,0), 4 (6,4)
inline sawp::FrameModel portal_frame() {
    sawp::FrameModel m;
    m.nodes = {{1, 0, 0}, {2, 0, 4}, {3, 6, 0}, {4, 6, 4}};
    m.elements = {{1, 1, 2, sawp::ElementKind::column, kE, kAc, kIc},
                  {2, 3, 4, sawp::ElementKind::column, kE, kAc, kIc},
                  {3, 2, 4, sawp::ElementKind::girder, kE, kAg, kIg}};
    m.supports = {{1, {true, true, true}}, {3, {true, true, true}}};
    m.point_loads = {{2, 2000.0, 0.0, 0.0}};
    m.distributed_loads = {{3, -1e4, true}};
    return m;
}

// single vertical column fixed at the base, 2 kN horizontal tip load
inline sawp::FrameModel cantilever_column() {
    sawp::FrameModel m;
    m.nodes = {{1, 0, 0}, {2, 0, 4}};
    m.elements = {{1, 1, 2, sawp::ElementKind::column, kE, kAc, kIc}};
    m.supports = {{1, {true, true, true}}};
    m.point_loads = {{2, 2000.0, 0.0, 0.0}};
    return m;
}

// simply supported beam (pin + roller), two elements, uniform 10 kN/m
inline sawp::FrameModel simply_supported_beam() {
    sawp::FrameModel m;
    m.nodes = {{1, 0, 0}, {2, 3, 0}, {3, 6, 0}};
    m.elements = {{1, 1, 2, sawp::ElementKind::girder, kE, kAg, kIg},
                  {2, 2, 3, sawp::ElementKind::girder, kE, kAg, kIg}};
    m.supports = {{1, {true, true, false}}, {3, {false, true, false}}};
    m.distributed_loads = {{1, -1e4, true}, {2, -1e4, true}};
    return m;
}

} // namespace testmodels
