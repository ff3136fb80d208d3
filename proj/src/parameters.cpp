#include "sawp/parameters.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "sawp/errors.hpp"
#include "sawp/numfmt.hpp"

namespace sawp {

ParameterSet parse_parameters(const std::string& text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("parameters are not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("parameters: root must be an object");

    ParameterSet p;
    auto scalar = [&](const char* key) {
        if (!doc.contains(key) || !doc[key].is_number())
            throw SchemaError(std::string("parameters: missing numeric key '") + key + "'");
        return doc[key].get<double>();
    };
    p.E = scalar("E");
    p.A_column = scalar("A_column");
    p.A_girder = scalar("A_girder");
    p.I_column = scalar("I_column");
    p.I_girder = scalar("I_girder");
    if (!(p.E > 0 && p.A_column > 0 && p.A_girder > 0 && p.I_column > 0 && p.I_girder > 0))
        throw SchemaError("parameters must all be positive");

    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& k = it.key();
        if (k == "E" || k == "A_column" || k == "A_girder" || k == "I_column" || k == "I_girder")
            continue;
        if (k != "loads") throw SchemaError("parameters: unknown key '" + k + "'");
    }
    if (doc.contains("loads")) {
        if (!doc["loads"].is_object()) throw SchemaError("parameters: loads must be an object");
        for (auto it = doc["loads"].begin(); it != doc["loads"].end(); ++it) {
            if (!it.value().is_number())
                throw SchemaError("parameters: load '" + it.key() + "' must be numeric");
            p.loads[it.key()] = it.value().get<double>();
        }
    }
    return p;
}

ParameterSet derive_parameters(const FrameModel& model) {
    ParameterSet p;
    const Element* col = nullptr;
    const Element* other = nullptr;
    for (const auto& e : model.elements) {
        if (e.kind == ElementKind::column && !col) col = &e;
        if (e.kind != ElementKind::column && !other) other = &e;
    }
    if (!col && !other) throw SchemaError("model has no elements to derive parameters from");
    if (!col) col = other;
    if (!other) other = col;
    p.E = col->E;
    p.A_column = col->A;
    p.I_column = col->I;
    p.A_girder = other->A;
    p.I_girder = other->I;

    double point = 0.0;
    for (const auto& pl : model.point_loads)
        point = std::max({point, std::abs(pl.fx), std::abs(pl.fy), std::abs(pl.mz)});
    if (point > 0) p.loads["point_load"] = point;
    double dist = 0.0;
    for (const auto& d : model.distributed_loads) dist = std::max(dist, std::abs(d.w));
    if (dist > 0) p.loads["distributed_load"] = dist;
    return p;
}

std::string serialize(const ParameterSet& p) {
    std::ostringstream os;
    os << "{\"E\": " << format_number(p.E) << ", \"A_column\": " << format_number(p.A_column)
       << ", \"A_girder\": " << format_number(p.A_girder)
       << ", \"I_column\": " << format_number(p.I_column)
       << ", \"I_girder\": " << format_number(p.I_girder) << ", \"loads\": {";
    size_t k = 0;
    for (const auto& [name, value] : p.loads)
        os << (k++ ? ", " : "") << "\"" << name << "\": " << format_number(value);
    os << "}}";
    return os.str();
}

} // namespace sawp
