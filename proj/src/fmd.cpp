#include "sawp/fmd.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sawp/errors.hpp"
#include "sawp/numfmt.hpp"

namespace sawp {
namespace {

using nlohmann::json;

void require_keys(const json& obj, const char* where,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
    for (const char* k : required)
        if (!obj.contains(k))
            throw SchemaError(std::string(where) + ": missing key '" + k + "'");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : required)
            if (it.key() == k) known = true;
        for (const char* k : optional)
            if (it.key() == k) known = true;
        if (!known)
            throw SchemaError(std::string(where) + ": unknown key '" + it.key() + "'");
    }
}

double as_number(const json& v, const char* where) {
    if (!v.is_number())
        throw SchemaError(std::string(where) + ": expected a number");
    return v.get<double>();
}

int as_id(const json& v, const char* where) {
    if (!v.is_number_integer())
        throw SchemaError(std::string(where) + ": expected an integer id");
    return v.get<int>();
}

int as_int(const json& v, const char* where) {
    if (!v.is_number_integer())
        throw SchemaError(std::string(where) + ": expected an integer");
    return v.get<int>();
}

bool as_bool(const json& v, const char* where) {
    if (!v.is_boolean())
        throw SchemaError(std::string(where) + ": expected a boolean");
    return v.get<bool>();
}

std::string as_string(const json& v, const char* where) {
    if (!v.is_string())
        throw SchemaError(std::string(where) + ": expected a string");
    return v.get<std::string>();
}

const json& as_array(const json& v, const char* where) {
    if (!v.is_array())
        throw SchemaError(std::string(where) + ": expected an array");
    return v;
}

VisualizationSpec parse_visualization(const json& v) {
    require_keys(v, "visualization", {"diagrams", "scale", "samples"});
    VisualizationSpec spec;
    for (const auto& d : as_array(v["diagrams"], "visualization.diagrams"))
        spec.diagrams.push_back(diagram_kind_from_string(as_string(d, "visualization.diagrams")));
    spec.scale = as_number(v["scale"], "visualization.scale");
    spec.samples = as_int(v["samples"], "visualization.samples");
    if (!(spec.scale > 0.0))
        throw SchemaError("visualization.scale must be positive");
    if (spec.samples < 2)
        throw SchemaError("visualization.samples must be at least 2");
    return spec;
}

} // namespace

FrameModel parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("document root must be an object");
    require_keys(doc, "document",
                 {"nodes", "elements", "supports", "point_loads", "distributed_loads"},
                 {"stated_counts", "visualization"});

    FrameModel m;
    for (const auto& n : as_array(doc["nodes"], "nodes")) {
        require_keys(n, "node", {"id", "x", "y"});
        m.nodes.push_back({as_id(n["id"], "node.id"), as_number(n["x"], "node.x"),
                           as_number(n["y"], "node.y")});
    }
    for (const auto& e : as_array(doc["elements"], "elements")) {
        require_keys(e, "element", {"id", "i", "j", "kind", "E", "A", "I"});
        m.elements.push_back({as_id(e["id"], "element.id"), as_id(e["i"], "element.i"),
                              as_id(e["j"], "element.j"),
                              element_kind_from_string(as_string(e["kind"], "element.kind")),
                              as_number(e["E"], "element.E"), as_number(e["A"], "element.A"),
                              as_number(e["I"], "element.I")});
    }
    for (const auto& s : as_array(doc["supports"], "supports")) {
        require_keys(s, "support", {"node", "fix"});
        const auto& fix = as_array(s["fix"], "support.fix");
        if (fix.size() != 3) throw SchemaError("support.fix must have exactly 3 entries");
        m.supports.push_back({as_id(s["node"], "support.node"),
                              {as_bool(fix[0], "support.fix"), as_bool(fix[1], "support.fix"),
                               as_bool(fix[2], "support.fix")}});
    }
    for (const auto& p : as_array(doc["point_loads"], "point_loads")) {
        require_keys(p, "point_load", {"node", "fx", "fy", "mz"});
        m.point_loads.push_back({as_id(p["node"], "point_load.node"),
                                 as_number(p["fx"], "point_load.fx"),
                                 as_number(p["fy"], "point_load.fy"),
                                 as_number(p["mz"], "point_load.mz")});
    }
    for (const auto& d : as_array(doc["distributed_loads"], "distributed_loads")) {
        require_keys(d, "distributed_load", {"element", "w", "inward"});
        m.distributed_loads.push_back({as_id(d["element"], "distributed_load.element"),
                                       as_number(d["w"], "distributed_load.w"),
                                       as_bool(d["inward"], "distributed_load.inward")});
    }
    if (doc.contains("stated_counts")) {
        const auto& c = doc["stated_counts"];
        require_keys(c, "stated_counts", {"columns", "girders", "diagonals", "cantilevers"});
        m.stated_counts = StatedCounts{
            as_int(c["columns"], "stated_counts.columns"),
            as_int(c["girders"], "stated_counts.girders"),
            as_int(c["diagonals"], "stated_counts.diagonals"),
            as_int(c["cantilevers"], "stated_counts.cantilevers")};
    }
    if (doc.contains("visualization")) m.visualization = parse_visualization(doc["visualization"]);

    check_integrity(m);
    return m;
}

FrameModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open model file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

namespace {

void write_core(std::ostream& os, const FrameModel& m) {
    os << "{\n  \"nodes\": [";
    for (size_t k = 0; k < m.nodes.size(); ++k) {
        const auto& n = m.nodes[k];
        os << (k ? ",\n    " : "\n    ") << "{\"id\": " << n.id
           << ", \"x\": " << format_number(n.x) << ", \"y\": " << format_number(n.y) << "}";
    }
    os << (m.nodes.empty() ? "],\n" : "\n  ],\n");

    os << "  \"elements\": [";
    for (size_t k = 0; k < m.elements.size(); ++k) {
        const auto& e = m.elements[k];
        os << (k ? ",\n    " : "\n    ") << "{\"id\": " << e.id << ", \"i\": " << e.node_i
           << ", \"j\": " << e.node_j << ", \"kind\": \"" << to_string(e.kind)
           << "\", \"E\": " << format_number(e.E) << ", \"A\": " << format_number(e.A)
           << ", \"I\": " << format_number(e.I) << "}";
    }
    os << (m.elements.empty() ? "],\n" : "\n  ],\n");

    os << "  \"supports\": [";
    for (size_t k = 0; k < m.supports.size(); ++k) {
        const auto& s = m.supports[k];
        os << (k ? ",\n    " : "\n    ") << "{\"node\": " << s.node << ", \"fix\": ["
           << (s.fix.ux ? "true" : "false") << ", " << (s.fix.uy ? "true" : "false") << ", "
           << (s.fix.rz ? "true" : "false") << "]}";
    }
    os << (m.supports.empty() ? "],\n" : "\n  ],\n");

    os << "  \"point_loads\": [";
    for (size_t k = 0; k < m.point_loads.size(); ++k) {
        const auto& p = m.point_loads[k];
        os << (k ? ",\n    " : "\n    ") << "{\"node\": " << p.node
           << ", \"fx\": " << format_number(p.fx) << ", \"fy\": " << format_number(p.fy)
           << ", \"mz\": " << format_number(p.mz) << "}";
    }
    os << (m.point_loads.empty() ? "],\n" : "\n  ],\n");

    os << "  \"distributed_loads\": [";
    for (size_t k = 0; k < m.distributed_loads.size(); ++k) {
        const auto& d = m.distributed_loads[k];
        os << (k ? ",\n    " : "\n    ") << "{\"element\": " << d.element
           << ", \"w\": " << format_number(d.w) << ", \"inward\": "
           << (d.inward ? "true" : "false") << "}";
    }
    os << (m.distributed_loads.empty() ? "]" : "\n  ]");
}

} // namespace

std::string serialize(const FrameModel& m) {
    std::ostringstream os;
    write_core(os, m);
    if (m.stated_counts) {
        const auto& c = *m.stated_counts;
        os << ",\n  \"stated_counts\": {\"columns\": " << c.columns
           << ", \"girders\": " << c.girders << ", \"diagonals\": " << c.diagonals
           << ", \"cantilevers\": " << c.cantilevers << "}";
    }
    if (m.visualization) {
        const auto& v = *m.visualization;
        os << ",\n  \"visualization\": {\"diagrams\": [";
        for (size_t k = 0; k < v.diagrams.size(); ++k)
            os << (k ? ", " : "") << "\"" << to_string(v.diagrams[k]) << "\"";
        os << "], \"scale\": " << format_number(v.scale) << ", \"samples\": " << v.samples << "}";
    }
    os << "\n}\n";
    return os.str();
}

std::string serialize_structural(const FrameModel& m) {
    std::ostringstream os;
    write_core(os, m);
    os << "\n}\n";
    return os.str();
}

void save_model(const FrameModel& model, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write model file " + path.string());
    out << serialize(model);
}

VisualizationSpec parse_visualization_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("visualization is not valid JSON: ") + e.what());
    }
    return parse_visualization(doc);
}

std::string serialize(const VisualizationSpec& v) {
    std::ostringstream os;
    os << "{\"diagrams\": [";
    for (size_t k = 0; k < v.diagrams.size(); ++k)
        os << (k ? ", " : "") << "\"" << to_string(v.diagrams[k]) << "\"";
    os << "], \"scale\": " << format_number(v.scale) << ", \"samples\": " << v.samples << "}";
    return os.str();
}

} // namespace sawp
