#pragma once

#include <map>
#include <string>
#include <vector>

#include "sawp/canonical.hpp"
#include "sawp/fem/solver.hpp"
#include "sawp/model.hpp"

namespace sawp::pipeline {
struct Attempt;
}

namespace sawp::grade {

// Failure taxonomy: layout errors (wrong geometry/topology) take precedence
// over boundary-condition errors (wrong supports or loads).
enum class ErrorType { none, type1_layout, type2_boundary, unparseable, unsolvable };

const char* to_string(ErrorType t);

struct StructureGrade {
    bool layout = false;
    bool supports = false;
    bool loads = false;
    ModelDiff diff;
};

// Compares two canonicalized models: layout by node/element coordinate sets,
// supports by fixity at matching coordinates, loads by position/components.
StructureGrade grade_structure(const FrameModel& generated, const FrameModel& truth);

inline constexpr double kNumericRelTol = 1e-3;
inline constexpr double kNumericAbsTol = 1e-9;

// True iff every displacement and end-force component agrees within
// max(rel_tol * |truth|, abs_tol). Throws ShapeMismatchError when node or
// element counts differ.
bool grade_numeric(const fem::SolveResult& generated, const fem::SolveResult& truth,
                   double rel_tol = kNumericRelTol, double abs_tol = kNumericAbsTol);

struct GradeReport {
    bool layout_match = false;
    bool support_match = false;
    bool load_match = false;
    bool numeric_match = false;
    ErrorType error = ErrorType::unparseable;
    std::string diff_summary;
    double rel_tol = kNumericRelTol;
    double abs_tol = kNumericAbsTol;

    bool fully_correct() const {
        return layout_match && support_match && load_match && numeric_match;
    }
};

std::string serialize(const GradeReport& report);

// Classification from the grade flags: unparseable beats unsolvable beats
// type 1 beats type 2. A numeric-only failure (correct structure, wrong
// element properties) grades as type 2.
ErrorType classify(bool parsed, bool solvable, const GradeReport& grades);

// Convenience overload over a full pipeline attempt.
ErrorType classify_error(const pipeline::Attempt& attempt);

// Cell values (solved flags or rates) per case plus an error-type histogram
// over failed attempts.
struct AccuracyCells {
    std::map<int, double> by_case;
    double overall = 0.0;
    std::map<std::string, int> error_histogram;
};

AccuracyCells aggregate_accuracy(const std::vector<pipeline::Attempt>& attempts,
                                 const std::string& mode);

} // namespace sawp::grade
