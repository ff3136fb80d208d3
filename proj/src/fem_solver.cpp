#include "sawp/fem/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "sawp/errors.hpp"
#include "sawp/numfmt.hpp"

namespace sawp::fem {
namespace {

ElementGeometry geometry_of(const FrameModel& model, const Element& e) {
    const Node& a = model.node(e.node_i);
    const Node& b = model.node(e.node_j);
    return element_geometry(a.x, a.y, b.x, b.y);
}

std::array<int, 6> element_dofs(const DofMap& dofs, const Element& e) {
    return {dofs.index(e.node_i, 0), dofs.index(e.node_i, 1), dofs.index(e.node_i, 2),
            dofs.index(e.node_j, 0), dofs.index(e.node_j, 1), dofs.index(e.node_j, 2)};
}

} // namespace

DofMap build_dof_map(const FrameModel& model) {
    DofMap dofs;
    for (const auto& n : model.nodes) dofs.node_ids.push_back(n.id);
    std::sort(dofs.node_ids.begin(), dofs.node_ids.end());
    for (size_t k = 0; k < dofs.node_ids.size(); ++k) dofs.base[dofs.node_ids[k]] = 3 * int(k);
    return dofs;
}

double element_uniform_load(const FrameModel& model, int element_id) {
    double w = 0.0;
    for (const auto& d : model.distributed_loads)
        if (d.element == element_id) w += d.w;
    return w;
}

AssembledSystem assemble(const FrameModel& model) {
    check_integrity(model);
    AssembledSystem sys;
    sys.dofs = build_dof_map(model);
    const int n = sys.dofs.size();
    sys.K = Eigen::MatrixXd::Zero(n, n);
    sys.F = Eigen::VectorXd::Zero(n);

    for (const auto& e : model.elements) {
        const ElementGeometry g = geometry_of(model, e);
        const Eigen::Matrix<double, 6, 6> k = global_stiffness(e.E, e.A, e.I, g.length, g.c, g.s);
        const auto idx = element_dofs(sys.dofs, e);
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) sys.K(idx[a], idx[b]) += k(a, b);
    }

    for (const auto& p : model.point_loads) {
        sys.F[sys.dofs.index(p.node, 0)] += p.fx;
        sys.F[sys.dofs.index(p.node, 1)] += p.fy;
        sys.F[sys.dofs.index(p.node, 2)] += p.mz;
    }

    for (const auto& d : model.distributed_loads) {
        const Element& e = model.element(d.element);
        const ElementGeometry g = geometry_of(model, e);
        const auto loads = equivalent_nodal_loads(d.w, g);
        const auto idx = element_dofs(sys.dofs, e);
        for (int a = 0; a < 6; ++a) sys.F[idx[a]] += loads.equivalent_global[a];
    }
    return sys;
}

EndForces recover_end_forces(const FrameModel& model, const Element& element,
                             const Eigen::VectorXd& u, const DofMap& dofs) {
    const ElementGeometry g = geometry_of(model, element);
    const auto idx = element_dofs(dofs, element);
    Eigen::Matrix<double, 6, 1> ue;
    for (int a = 0; a < 6; ++a) ue[a] = u[idx[a]];

    Eigen::Matrix<double, 6, 1> f =
        local_stiffness(element.E, element.A, element.I, g.length) * transformation(g.c, g.s) * ue;
    const double w = element_uniform_load(model, element.id);
    if (w != 0.0) f += equivalent_nodal_loads(w, g).fixed_end_local;

    EndForces ef;
    ef.end1 = f.head<3>();
    ef.end2 = f.tail<3>();
    return ef;
}

SolveResult solve(const FrameModel& model) {
    AssembledSystem sys = assemble(model);
    const int n = sys.dofs.size();

    std::vector<bool> constrained(n, false);
    for (const auto& s : model.supports) {
        if (s.fix.ux) constrained[sys.dofs.index(s.node, 0)] = true;
        if (s.fix.uy) constrained[sys.dofs.index(s.node, 1)] = true;
        if (s.fix.rz) constrained[sys.dofs.index(s.node, 2)] = true;
    }
    std::vector<int> free;
    for (int i = 0; i < n; ++i)
        if (!constrained[i]) free.push_back(i);

    const int nf = int(free.size());
    Eigen::MatrixXd Kff(nf, nf);
    Eigen::VectorXd Ff(nf);
    for (int a = 0; a < nf; ++a) {
        Ff[a] = sys.F[free[a]];
        for (int b = 0; b < nf; ++b) Kff(a, b) = sys.K(free[a], free[b]);
    }

    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    SolveResult result;
    if (nf > 0) {
        Eigen::LDLT<Eigen::MatrixXd> ldlt(Kff);
        const double max_diag = Kff.diagonal().cwiseAbs().maxCoeff();
        if (ldlt.info() != Eigen::Success)
            throw SingularSystemError("stiffness factorization failed (mechanism?)");
        const auto& D = ldlt.vectorD();
        for (int i = 0; i < D.size(); ++i)
            if (!(D[i] > 1e-12 * max_diag))
                throw SingularSystemError(
                    "reduced stiffness is singular: mechanism or insufficient supports");

        Eigen::VectorXd uf = ldlt.solve(Ff);
        for (int a = 0; a < nf; ++a) u[free[a]] = uf[a];

        // condition estimate from the symmetric eigenvalue range
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Kff, Eigen::EigenvaluesOnly);
        const auto& ev = es.eigenvalues();
        const double lo = ev.cwiseAbs().minCoeff();
        const double hi = ev.cwiseAbs().maxCoeff();
        result.condition_estimate = lo > 0 ? hi / lo : std::numeric_limits<double>::infinity();
        result.condition_warning = result.condition_estimate > 1e12;
    }

    for (int node : sys.dofs.node_ids)
        result.node_displacements[node] =
            Eigen::Vector3d(u[sys.dofs.index(node, 0)], u[sys.dofs.index(node, 1)],
                            u[sys.dofs.index(node, 2)]);

    for (const auto& e : model.elements)
        result.element_end_forces[e.id] = recover_end_forces(model, e, u, sys.dofs);

    const Eigen::VectorXd residual = sys.K * u - sys.F;
    for (const auto& s : model.supports)
        result.reactions[s.node] =
            Eigen::Vector3d(residual[sys.dofs.index(s.node, 0)],
                            residual[sys.dofs.index(s.node, 1)],
                            residual[sys.dofs.index(s.node, 2)]);

    return result;
}

InternalAction internal_action_at(const EndForces& ef, double w_local, double L, double x) {
    const double slack = 1e-9 * L;
    if (x < -slack || x > L + slack)
        throw DomainError("coordinate " + format_number(x) + " outside [0, " + format_number(L) +
                          "]");
    x = std::clamp(x, 0.0, L);
    InternalAction a;
    a.N = -ef.end1[0];
    a.V = ef.end1[1] + w_local * x;
    a.M = -ef.end1[2] + ef.end1[1] * x + w_local * x * x / 2.0;
    return a;
}

// --- serialization ---------------------------------------------------------

namespace {

std::string triple(const Eigen::Vector3d& v) {
    return "[" + format_number(v[0]) + ", " + format_number(v[1]) + ", " + format_number(v[2]) +
           "]";
}

} // namespace

std::string serialize(const SolveResult& r) {
    std::ostringstream os;
    os << "{\n  \"displacements\": {";
    size_t k = 0;
    for (const auto& [id, v] : r.node_displacements)
        os << (k++ ? ",\n    " : "\n    ") << "\"" << id << "\": " << triple(v);
    os << (r.node_displacements.empty() ? "},\n" : "\n  },\n");

    os << "  \"end_forces\": {";
    k = 0;
    for (const auto& [id, ef] : r.element_end_forces)
        os << (k++ ? ",\n    " : "\n    ") << "\"" << id << "\": [" << triple(ef.end1) << ", "
           << triple(ef.end2) << "]";
    os << (r.element_end_forces.empty() ? "},\n" : "\n  },\n");

    os << "  \"reactions\": {";
    k = 0;
    for (const auto& [id, v] : r.reactions)
        os << (k++ ? ",\n    " : "\n    ") << "\"" << id << "\": " << triple(v);
    os << (r.reactions.empty() ? "}\n" : "\n  }\n");
    os << "}\n";
    return os.str();
}

SolveResult parse_solve_result(const std::string& text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("solution is not valid JSON: ") + e.what());
    }
    for (const char* key : {"displacements", "end_forces", "reactions"})
        if (!doc.contains(key))
            throw SchemaError(std::string("solution: missing key '") + key + "'");

    auto to_vec3 = [](const json& a) {
        if (!a.is_array() || a.size() != 3) throw SchemaError("solution: expected a 3-vector");
        return Eigen::Vector3d(a[0].get<double>(), a[1].get<double>(), a[2].get<double>());
    };

    SolveResult r;
    for (auto it = doc["displacements"].begin(); it != doc["displacements"].end(); ++it)
        r.node_displacements[std::stoi(it.key())] = to_vec3(it.value());
    for (auto it = doc["end_forces"].begin(); it != doc["end_forces"].end(); ++it) {
        const auto& pair = it.value();
        if (!pair.is_array() || pair.size() != 2)
            throw SchemaError("solution: end_forces entries need two triples");
        EndForces ef;
        ef.end1 = to_vec3(pair[0]);
        ef.end2 = to_vec3(pair[1]);
        r.element_end_forces[std::stoi(it.key())] = ef;
    }
    for (auto it = doc["reactions"].begin(); it != doc["reactions"].end(); ++it)
        r.reactions[std::stoi(it.key())] = to_vec3(it.value());
    return r;
}

SolveResult load_solve_result(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open solution file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_solve_result(ss.str());
}

void save_solve_result(const SolveResult& result, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write solution file " + path.string());
    out << serialize(result);
}

} // namespace sawp::fem
