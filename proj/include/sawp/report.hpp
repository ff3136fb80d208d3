#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sawp/fem/solver.hpp"
#include "sawp/grader.hpp"
#include "sawp/model.hpp"

namespace sawp::report {

struct DiagramRequest {
    DiagramKind kind = DiagramKind::geometry;
    double scale = 50.0; // deformation magnification
    int samples = 21;    // evaluation points per element
    int width = 800;     // px
    int height = 600;    // px
};

// Throws DomainError when scale <= 0 or samples < 2.
void check(const DiagramRequest& request);

// One row per element end (element_id,end,axial_N,shear_N,moment_Nm) plus
// trailing min/max summary rows; byte-deterministic for a fixed result.
void export_forces_csv(const fem::SolveResult& result, const std::filesystem::path& path);

// Well-formed standalone SVG. Deformed shapes use cubic Hermite interpolation
// of the nodal displacements; force diagrams plot the internal actions
// sampled along each element, drawn normal to the element axis. The moment
// diagram is drawn on the tension side (sagging toward the span).
void render_svg_diagram(const FrameModel& model, const fem::SolveResult* result,
                        const DiagramRequest& request, const std::filesystem::path& path);

struct ReportBundle {
    std::filesystem::path report_md;
    std::filesystem::path csv;
    std::vector<std::filesystem::path> diagrams;
    std::filesystem::path solution_json;
};

struct ReportInputs {
    std::string description; // empty for ad-hoc models
    const FrameModel* model = nullptr;
    const fem::SolveResult* result = nullptr;
    const grade::GradeReport* grade = nullptr; // optional
    std::string timestamp;                     // empty = current UTC time
};

// Markdown report plus CSV/SVG side files under out_dir. Deterministic
// except for the single generated_at metadata line.
ReportBundle build_report(const ReportInputs& inputs, const std::filesystem::path& out_dir);

} // namespace sawp::report

namespace sawp::report::cli {

// Entry point behind the command-line tool. Exit status: 0 success,
// 1 domain error, 2 usage error.
int cli_main(int argc, const char* const* argv);

} // namespace sawp::report::cli
