#include "sawp/grader.hpp"

#include <cmath>
#include <sstream>

#include "sawp/errors.hpp"
#include "sawp/numfmt.hpp"
#include "sawp/pipeline.hpp"

namespace sawp::grade {

const char* to_string(ErrorType t) {
    switch (t) {
    case ErrorType::none: return "none";
    case ErrorType::type1_layout: return "type1_layout";
    case ErrorType::type2_boundary: return "type2_boundary";
    case ErrorType::unparseable: return "unparseable";
    case ErrorType::unsolvable: return "unsolvable";
    }
    return "?";
}

StructureGrade grade_structure(const FrameModel& generated, const FrameModel& truth) {
    StructureGrade g;
    g.diff = diff_models(generated, truth);
    g.layout = g.diff.layout_clean();
    g.supports = g.diff.supports_clean();
    g.loads = g.diff.loads_clean();
    return g;
}

namespace {

bool component_close(double a, double truth, double rel_tol, double abs_tol) {
    return std::abs(a - truth) <= std::max(abs_tol, rel_tol * std::abs(truth));
}

bool triple_close(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double rel, double abs_tol) {
    for (int k = 0; k < 3; ++k)
        if (!component_close(a[k], b[k], rel, abs_tol)) return false;
    return true;
}

} // namespace

bool grade_numeric(const fem::SolveResult& generated, const fem::SolveResult& truth,
                   double rel_tol, double abs_tol) {
    if (generated.node_displacements.size() != truth.node_displacements.size() ||
        generated.element_end_forces.size() != truth.element_end_forces.size())
        throw ShapeMismatchError("solution shapes differ: " +
                                 std::to_string(generated.node_displacements.size()) + "/" +
                                 std::to_string(generated.element_end_forces.size()) +
                                 " nodes/elements vs " +
                                 std::to_string(truth.node_displacements.size()) + "/" +
                                 std::to_string(truth.element_end_forces.size()));

    for (const auto& [id, v] : truth.node_displacements) {
        auto it = generated.node_displacements.find(id);
        if (it == generated.node_displacements.end())
            throw ShapeMismatchError("node " + std::to_string(id) + " missing from solution");
        if (!triple_close(it->second, v, rel_tol, abs_tol)) return false;
    }
    for (const auto& [id, ef] : truth.element_end_forces) {
        auto it = generated.element_end_forces.find(id);
        if (it == generated.element_end_forces.end())
            throw ShapeMismatchError("element " + std::to_string(id) + " missing from solution");
        if (!triple_close(it->second.end1, ef.end1, rel_tol, abs_tol) ||
            !triple_close(it->second.end2, ef.end2, rel_tol, abs_tol))
            return false;
    }
    return true;
}

ErrorType classify(bool parsed, bool solvable, const GradeReport& g) {
    if (!parsed) return ErrorType::unparseable;
    if (!solvable) return ErrorType::unsolvable;
    if (!g.layout_match) return ErrorType::type1_layout;
    if (!g.support_match || !g.load_match) return ErrorType::type2_boundary;
    if (!g.numeric_match) return ErrorType::type2_boundary;
    return ErrorType::none;
}

ErrorType classify_error(const pipeline::Attempt& attempt) {
    bool parsed = attempt.stages.size() == 3;
    for (const auto& s : attempt.stages)
        if (s.status != pipeline::StageOutput::Status::ok) parsed = false;
    const bool solvable = attempt.result.has_value();
    return classify(parsed, solvable, attempt.grade);
}

std::string serialize(const GradeReport& g) {
    std::ostringstream os;
    os << "{\n"
       << "  \"layout_match\": " << (g.layout_match ? "true" : "false") << ",\n"
       << "  \"support_match\": " << (g.support_match ? "true" : "false") << ",\n"
       << "  \"load_match\": " << (g.load_match ? "true" : "false") << ",\n"
       << "  \"numeric_match\": " << (g.numeric_match ? "true" : "false") << ",\n"
       << "  \"error\": \"" << to_string(g.error) << "\",\n"
       << "  \"rel_tol\": " << format_number(g.rel_tol) << ",\n"
       << "  \"abs_tol\": " << format_number(g.abs_tol) << ",\n";
    std::string diff = g.diff_summary;
    std::string escaped;
    for (char c : diff) {
        if (c == '"') escaped += "\\\"";
        else if (c == '\n') escaped += "\\n";
        else if (c == '\\') escaped += "\\\\";
        else escaped += c;
    }
    os << "  \"diff\": \"" << escaped << "\"\n}\n";
    return os.str();
}

AccuracyCells aggregate_accuracy(const std::vector<pipeline::Attempt>& attempts,
                                 const std::string& mode) {
    AccuracyCells cells;
    std::map<int, int> valid, passed;
    for (const auto& a : attempts) {
        if (a.infrastructure_failure) continue; // reported separately
        ++valid[a.case_id];
        if (a.grade.fully_correct()) ++passed[a.case_id];
        if (a.grade.error != ErrorType::none) ++cells.error_histogram[to_string(a.grade.error)];
    }
    for (const auto& [case_id, n] : valid) {
        const int ok = passed.count(case_id) ? passed[case_id] : 0;
        cells.by_case[case_id] = (mode == "stability") ? double(ok) / double(n)
                                                       : (ok > 0 ? 1.0 : 0.0);
    }
    double sum = 0.0;
    for (const auto& [_, v] : cells.by_case) sum += v;
    cells.overall = cells.by_case.empty() ? 0.0 : sum / double(cells.by_case.size());
    return cells;
}

} // namespace sawp::grade
