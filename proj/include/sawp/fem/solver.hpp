#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sawp/fem/element.hpp"
#include "sawp/model.hpp"

namespace sawp::fem {

// Node id -> three consecutive global DOF indices (ux, uy, rz), in ascending
// node-id order.
struct DofMap {
    std::vector<int> node_ids; // sorted
    std::map<int, int> base;   // node id -> first DOF index

    int index(int node_id, int component) const { return base.at(node_id) + component; }
    int size() const { return 3 * int(node_ids.size()); }
};

DofMap build_dof_map(const FrameModel& model);

struct AssembledSystem {
    Eigen::MatrixXd K; // (3n x 3n), symmetric
    Eigen::VectorXd F; // point loads + distributed-load equivalents
    DofMap dofs;
};

AssembledSystem assemble(const FrameModel& model);

// Local end forces exerted on the element, (P, V, M) per end.
struct EndForces {
    Eigen::Vector3d end1 = Eigen::Vector3d::Zero();
    Eigen::Vector3d end2 = Eigen::Vector3d::Zero();
};

struct SolveResult {
    std::map<int, Eigen::Vector3d> node_displacements; // ux, uy, rz
    std::map<int, EndForces> element_end_forces;
    std::map<int, Eigen::Vector3d> reactions; // support nodes only: Rx, Ry, Mz
    bool condition_warning = false;           // estimated condition number > 1e12
    double condition_estimate = 0.0;
};

// Direct stiffness solve: K_ff u_f = F_f with constrained DOFs exactly zero,
// reactions K u - F at constrained DOFs, end forces via recover_end_forces.
// Throws SingularSystemError for mechanisms / insufficient supports.
SolveResult solve(const FrameModel& model);

EndForces recover_end_forces(const FrameModel& model, const Element& element,
                             const Eigen::VectorXd& u, const DofMap& dofs);

// Internal actions at a local coordinate x in [0, L]: axial N (tension
// positive), shear V with V(0) = V_end1, and sagging-positive moment M with
// dM/dx = V. w_local is the total uniform transverse load on the element.
struct InternalAction {
    double N = 0, V = 0, M = 0;
};

InternalAction internal_action_at(const EndForces& ef, double w_local, double L, double x);

// Signed sum of the uniform loads on one element (zero when unloaded).
double element_uniform_load(const FrameModel& model, int element_id);

// JSON with keys "displacements", "end_forces", "reactions"; 9 significant
// digits; deterministic ordering by id.
std::string serialize(const SolveResult& result);
SolveResult parse_solve_result(const std::string& text);
SolveResult load_solve_result(const std::filesystem::path& path);
void save_solve_result(const SolveResult& result, const std::filesystem::path& path);

} // namespace sawp::fem
