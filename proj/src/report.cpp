#include "sawp/report.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

#include "sawp/errors.hpp"
#include "sawp/fmd.hpp"
#include "sawp/numfmt.hpp"

namespace sawp::report {
namespace {

std::string utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write " + path.string());
    out << content;
}

} // namespace

void check(const DiagramRequest& request) {
    if (!(request.scale > 0.0)) throw DomainError("diagram scale must be positive");
    if (request.samples < 2) throw DomainError("diagram needs at least 2 samples per element");
    if (request.width < 16 || request.height < 16) throw DomainError("canvas too small");
}

void export_forces_csv(const fem::SolveResult& result, const std::filesystem::path& path) {
    std::ostringstream os;
    os << "element_id,end,axial_N,shear_N,moment_Nm\n";
    double lo[3] = {std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity()};
    double hi[3] = {-std::numeric_limits<double>::infinity(),
                    -std::numeric_limits<double>::infinity(),
                    -std::numeric_limits<double>::infinity()};
    bool any = false;
    for (const auto& [id, ef] : result.element_end_forces) {
        const Eigen::Vector3d* ends[2] = {&ef.end1, &ef.end2};
        for (int e = 0; e < 2; ++e) {
            os << id << "," << (e + 1);
            for (int k = 0; k < 3; ++k) {
                const double v = (*ends[e])[k];
                os << "," << format_number(v);
                lo[k] = std::min(lo[k], v);
                hi[k] = std::max(hi[k], v);
            }
            os << "\n";
            any = true;
        }
    }
    if (!any) {
        for (double* m : {lo, hi}) m[0] = m[1] = m[2] = 0.0;
    }
    os << "min,," << format_number(lo[0]) << "," << format_number(lo[1]) << ","
       << format_number(lo[2]) << "\n";
    os << "max,," << format_number(hi[0]) << "," << format_number(hi[1]) << ","
       << format_number(hi[2]) << "\n";
    write_file(path, os.str());
}

// --- SVG --------------------------------------------------------------------

namespace {

struct Canvas {
    double min_x = 0, min_y = 0, scale = 1;
    int width = 800, height = 600;
    double margin = 60;

    double px(double x) const { return margin + (x - min_x) * scale; }
    double py(double y) const { return height - margin - (y - min_y) * scale; }
};

Canvas fit_canvas(const FrameModel& model, const DiagramRequest& request) {
    Canvas c;
    c.width = request.width;
    c.height = request.height;
    double lo_x = model.nodes.front().x, hi_x = lo_x;
    double lo_y = model.nodes.front().y, hi_y = lo_y;
    for (const auto& n : model.nodes) {
        lo_x = std::min(lo_x, n.x);
        hi_x = std::max(hi_x, n.x);
        lo_y = std::min(lo_y, n.y);
        hi_y = std::max(hi_y, n.y);
    }
    const double span_x = std::max(hi_x - lo_x, 1e-6);
    const double span_y = std::max(hi_y - lo_y, 1e-6);
    c.min_x = lo_x;
    c.min_y = lo_y;
    c.scale = std::min((c.width - 2 * c.margin) / span_x, (c.height - 2 * c.margin) / span_y);
    return c;
}

std::string pt(double x, double y) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f,%.2f", x, y);
    return buf;
}

const char* kind_color(ElementKind k) {
    switch (k) {
    case ElementKind::column: return "#27496d";
    case ElementKind::girder: return "#00695c";
    case ElementKind::diagonal: return "#8d6e63";
    case ElementKind::cantilever: return "#6a1b9a";
    }
    return "#000";
}

void draw_base_geometry(std::ostringstream& svg, const FrameModel& model, const Canvas& c,
                        bool faded) {
    for (const auto& e : model.elements) {
        const Node& a = model.node(e.node_i);
        const Node& b = model.node(e.node_j);
        svg << "  <line class=\"" << to_string(e.kind) << "\" x1=\"" << c.px(a.x) << "\" y1=\""
            << c.py(a.y) << "\" x2=\"" << c.px(b.x) << "\" y2=\"" << c.py(b.y) << "\" stroke=\""
            << (faded ? "#bbbbbb" : kind_color(e.kind)) << "\" stroke-width=\""
            << (faded ? 1.5 : 3) << "\"/>\n";
    }
    for (const auto& s : model.supports) {
        const Node& n = model.node(s.node);
        svg << "  <rect class=\"support\" x=\"" << c.px(n.x) - 6 << "\" y=\"" << c.py(n.y)
            << "\" width=\"12\" height=\"8\" fill=\"#444444\"/>\n";
    }
    if (!faded) {
        for (const auto& n : model.nodes)
            svg << "  <circle class=\"node\" cx=\"" << c.px(n.x) << "\" cy=\"" << c.py(n.y)
                << "\" r=\"3\" fill=\"#222222\"/>\n";
    }
}

struct LocalFrame {
    fem::ElementGeometry g;
    double ax, ay; // start node
    double nx, ny; // unit normal (local +y) in world coords
};

LocalFrame local_frame(const FrameModel& model, const Element& e) {
    const Node& a = model.node(e.node_i);
    const Node& b = model.node(e.node_j);
    LocalFrame f;
    f.g = fem::element_geometry(a.x, a.y, b.x, b.y);
    f.ax = a.x;
    f.ay = a.y;
    f.nx = -f.g.s;
    f.ny = f.g.c;
    return f;
}

void draw_deformed(std::ostringstream& svg, const FrameModel& model,
                   const fem::SolveResult& result, const DiagramRequest& request,
                   const Canvas& c) {
    for (const auto& e : model.elements) {
        const LocalFrame f = local_frame(model, e);
        const Eigen::Vector3d ui = result.node_displacements.at(e.node_i);
        const Eigen::Vector3d uj = result.node_displacements.at(e.node_j);
        // local end displacements
        const double u1 = f.g.c * ui[0] + f.g.s * ui[1];
        const double v1 = -f.g.s * ui[0] + f.g.c * ui[1];
        const double u2 = f.g.c * uj[0] + f.g.s * uj[1];
        const double v2 = -f.g.s * uj[0] + f.g.c * uj[1];
        const double L = f.g.length;

        svg << "  <polyline class=\"deformed\" fill=\"none\" stroke=\"#c62828\" "
               "stroke-width=\"2\" points=\"";
        for (int k = 0; k < request.samples; ++k) {
            const double xi = double(k) / (request.samples - 1);
            const double x = xi * L;
            // cubic Hermite for the transverse field, linear for the axial one
            const double h1 = 1 - 3 * xi * xi + 2 * xi * xi * xi;
            const double h2 = xi - 2 * xi * xi + xi * xi * xi;
            const double h3 = 3 * xi * xi - 2 * xi * xi * xi;
            const double h4 = -xi * xi + xi * xi * xi;
            const double ax = (1 - xi) * u1 + xi * u2;
            const double v = h1 * v1 + h2 * L * ui[2] + h3 * v2 + h4 * L * uj[2];
            const double wx = f.ax + f.g.c * (x + ax * request.scale) + f.nx * v * request.scale;
            const double wy = f.ay + f.g.s * (x + ax * request.scale) + f.ny * v * request.scale;
            svg << pt(c.px(wx), c.py(wy)) << " ";
        }
        svg << "\"/>\n";
    }
}

double action_value(const fem::InternalAction& a, DiagramKind kind) {
    switch (kind) {
    case DiagramKind::axial: return a.N;
    case DiagramKind::shear: return a.V;
    case DiagramKind::moment: return a.M;
    default: return 0;
    }
}

void draw_force_diagram(std::ostringstream& svg, const FrameModel& model,
                        const fem::SolveResult& result, const DiagramRequest& request,
                        const Canvas& c) {
    // normalize lobes against the largest magnitude over all elements
    double peak = 0;
    for (const auto& e : model.elements) {
        const auto& ef = result.element_end_forces.at(e.id);
        const double w = fem::element_uniform_load(model, e.id);
        const double L = local_frame(model, e).g.length;
        for (int k = 0; k < request.samples; ++k) {
            const double x = L * double(k) / (request.samples - 1);
            peak = std::max(peak,
                            std::abs(action_value(fem::internal_action_at(ef, w, L, x),
                                                  request.kind)));
        }
    }
    const double lobe = 50.0; // px
    const double norm = peak > 0 ? lobe / peak : 0;
    // sagging moments plot on the tension side of the member
    const double side = request.kind == DiagramKind::moment ? -1.0 : 1.0;

    for (const auto& e : model.elements) {
        const LocalFrame f = local_frame(model, e);
        const auto& ef = result.element_end_forces.at(e.id);
        const double w = fem::element_uniform_load(model, e.id);
        const double L = f.g.length;

        svg << "  <polygon class=\"" << to_string(request.kind)
            << "-lobe\" fill=\"#1565c0\" fill-opacity=\"0.35\" stroke=\"#1565c0\" "
               "stroke-width=\"1\" points=\""
            << pt(c.px(f.ax), c.py(f.ay)) << " ";
        for (int k = 0; k < request.samples; ++k) {
            const double x = L * double(k) / (request.samples - 1);
            const double v =
                side * action_value(fem::internal_action_at(ef, w, L, x), request.kind) * norm;
            const double wx = f.ax + f.g.c * x + f.nx * v / c.scale;
            const double wy = f.ay + f.g.s * x + f.ny * v / c.scale;
            svg << pt(c.px(wx), c.py(wy)) << " ";
        }
        svg << pt(c.px(f.ax + f.g.c * L), c.py(f.ay + f.g.s * L)) << "\"/>\n";

        // interior extremum of the moment curve sits where the shear crosses zero
        if (request.kind == DiagramKind::moment && w != 0.0) {
            const double x0 = -ef.end1[1] / w;
            if (x0 > 1e-9 && x0 < L - 1e-9) {
                const double m = action_value(fem::internal_action_at(ef, w, L, x0), request.kind);
                const double v = side * m * norm;
                const double wx = f.ax + f.g.c * x0 + f.nx * v / c.scale;
                const double wy = f.ay + f.g.s * x0 + f.ny * v / c.scale;
                svg << "  <circle class=\"extremum\" cx=\"" << c.px(wx) << "\" cy=\"" << c.py(wy)
                    << "\" r=\"4\" fill=\"#e65100\"/>\n"
                    << "  <text class=\"extremum-label\" x=\"" << c.px(wx) + 6 << "\" y=\""
                    << c.py(wy) - 6 << "\" font-size=\"11\">" << format_number(m) << "</text>\n";
            }
        }
    }
}

} // namespace

void render_svg_diagram(const FrameModel& model, const fem::SolveResult* result,
                        const DiagramRequest& request, const std::filesystem::path& path) {
    check(request);
    if (request.kind != DiagramKind::geometry && result == nullptr)
        throw DomainError("diagram kind needs a solve result");

    const Canvas c = fit_canvas(model, request);
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.width << "\" height=\""
        << c.height << "\" viewBox=\"0 0 " << c.width << " " << c.height << "\">\n"
        << "  <title>" << to_string(request.kind) << " diagram</title>\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << c.width << "\" height=\"" << c.height
        << "\" fill=\"#ffffff\"/>\n";

    switch (request.kind) {
    case DiagramKind::geometry: draw_base_geometry(svg, model, c, false); break;
    case DiagramKind::deformed:
        draw_base_geometry(svg, model, c, true);
        draw_deformed(svg, model, *result, request, c);
        break;
    default:
        draw_base_geometry(svg, model, c, true);
        draw_force_diagram(svg, model, *result, request, c);
        break;
    }
    svg << "</svg>\n";
    write_file(path, svg.str());
}

// --- markdown report ---------------------------------------------------------

ReportBundle build_report(const ReportInputs& inputs, const std::filesystem::path& out_dir) {
    if (!inputs.model || !inputs.result) throw DomainError("report needs a model and a result");
    std::filesystem::create_directories(out_dir);

    ReportBundle bundle;
    bundle.csv = out_dir / "forces.csv";
    export_forces_csv(*inputs.result, bundle.csv);
    bundle.solution_json = out_dir / "solution.json";
    fem::save_solve_result(*inputs.result, bundle.solution_json);

    VisualizationSpec viz;
    if (inputs.model->visualization)
        viz = *inputs.model->visualization;
    else
        viz.diagrams = {DiagramKind::deformed, DiagramKind::axial, DiagramKind::shear,
                        DiagramKind::moment};

    std::vector<DiagramKind> kinds = {DiagramKind::geometry};
    for (DiagramKind k : viz.diagrams)
        if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) kinds.push_back(k);

    for (DiagramKind k : kinds) {
        DiagramRequest req;
        req.kind = k;
        req.scale = viz.scale;
        req.samples = std::max(viz.samples, 2);
        const auto path = out_dir / (std::string(to_string(k)) + ".svg");
        render_svg_diagram(*inputs.model, inputs.result, req, path);
        bundle.diagrams.push_back(path);
    }

    std::ostringstream md;
    md << "# Frame analysis report\n\n";
    md << "generated_at: " << (inputs.timestamp.empty() ? utc_now() : inputs.timestamp) << "\n\n";
    if (!inputs.description.empty()) md << "## Problem\n\n" << inputs.description << "\n\n";
    md << "## Model\n\n```json\n" << serialize(*inputs.model) << "```\n\n";

    md << "## Node displacements\n\n| node | ux (m) | uy (m) | rz (rad) |\n| --- | --- | --- | "
          "--- |\n";
    for (const auto& [id, u] : inputs.result->node_displacements)
        md << "| " << id << " | " << format_number(u[0]) << " | " << format_number(u[1]) << " | "
           << format_number(u[2]) << " |\n";

    md << "\n## Element end forces\n\nForces are exerted on the element in local axes; the "
          "moment diagram legend: sagging is drawn on the tension side.\n\n"
          "| element | end | P (N) | V (N) | M (N·m) |\n| --- | --- | --- | --- | --- |\n";
    for (const auto& [id, ef] : inputs.result->element_end_forces) {
        md << "| " << id << " | 1 | " << format_number(ef.end1[0]) << " | "
           << format_number(ef.end1[1]) << " | " << format_number(ef.end1[2]) << " |\n";
        md << "| " << id << " | 2 | " << format_number(ef.end2[0]) << " | "
           << format_number(ef.end2[1]) << " | " << format_number(ef.end2[2]) << " |\n";
    }

    md << "\n## Reactions\n\n| node | Rx (N) | Ry (N) | Mz (N·m) |\n| --- | --- | --- | --- |\n";
    for (const auto& [id, r] : inputs.result->reactions)
        md << "| " << id << " | " << format_number(r[0]) << " | " << format_number(r[1]) << " | "
           << format_number(r[2]) << " |\n";

    md << "\n## Output files\n\n- [forces.csv](forces.csv)\n- [solution.json](solution.json)\n";
    for (const auto& d : bundle.diagrams)
        md << "- [" << d.filename().string() << "](" << d.filename().string() << ")\n";

    if (inputs.grade) {
        md << "\n## Grade\n\n| check | result |\n| --- | --- |\n"
           << "| layout | " << (inputs.grade->layout_match ? "match" : "mismatch") << " |\n"
           << "| supports | " << (inputs.grade->support_match ? "match" : "mismatch") << " |\n"
           << "| loads | " << (inputs.grade->load_match ? "match" : "mismatch") << " |\n"
           << "| numeric | " << (inputs.grade->numeric_match ? "match" : "mismatch") << " |\n"
           << "| classification | " << grade::to_string(inputs.grade->error) << " |\n";
        if (!inputs.grade->diff_summary.empty())
            md << "\n```\n" << inputs.grade->diff_summary << "```\n";
    }

    bundle.report_md = out_dir / "report.md";
    write_file(bundle.report_md, md.str());
    return bundle;
}

} // namespace sawp::report
