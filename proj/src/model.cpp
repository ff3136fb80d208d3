#include "sawp/model.hpp"

#include <cmath>
#include <set>

#include "sawp/errors.hpp"

namespace sawp {

const char* to_string(ElementKind k) {
    switch (k) {
    case ElementKind::column: return "column";
    case ElementKind::girder: return "girder";
    case ElementKind::diagonal: return "diagonal";
    case ElementKind::cantilever: return "cantilever";
    }
    return "?";
}

ElementKind element_kind_from_string(const std::string& s) {
    if (s == "column") return ElementKind::column;
    if (s == "girder") return ElementKind::girder;
    if (s == "diagonal") return ElementKind::diagonal;
    if (s == "cantilever") return ElementKind::cantilever;
    throw SchemaError("unknown element kind '" + s + "'");
}

const char* to_string(DiagramKind k) {
    switch (k) {
    case DiagramKind::geometry: return "geometry";
    case DiagramKind::deformed: return "deformed";
    case DiagramKind::axial: return "axial";
    case DiagramKind::shear: return "shear";
    case DiagramKind::moment: return "moment";
    }
    return "?";
}

DiagramKind diagram_kind_from_string(const std::string& s) {
    if (s == "geometry") return DiagramKind::geometry;
    if (s == "deformed") return DiagramKind::deformed;
    if (s == "axial") return DiagramKind::axial;
    if (s == "shear") return DiagramKind::shear;
    if (s == "moment") return DiagramKind::moment;
    throw SchemaError("unknown diagram kind '" + s + "'");
}

const Node* FrameModel::find_node(int id) const {
    for (const auto& n : nodes)
        if (n.id == id) return &n;
    return nullptr;
}

const Element* FrameModel::find_element(int id) const {
    for (const auto& e : elements)
        if (e.id == id) return &e;
    return nullptr;
}

const Node& FrameModel::node(int id) const {
    if (const Node* n = find_node(id)) return *n;
    throw ReferenceError("node " + std::to_string(id) + " is not defined");
}

const Element& FrameModel::element(int id) const {
    if (const Element* e = find_element(id)) return *e;
    throw ReferenceError("element " + std::to_string(id) + " is not defined");
}

bool FrameModel::is_support(int node_id) const {
    for (const auto& s : supports)
        if (s.node == node_id) return true;
    return false;
}

int FrameModel::constrained_dof_count() const {
    int n = 0;
    for (const auto& s : supports) n += s.fix.count();
    return n;
}

void check_integrity(const FrameModel& model) {
    if (model.nodes.empty()) throw SchemaError("model defines no nodes");

    std::set<int> node_ids;
    for (const auto& n : model.nodes) {
        if (n.id <= 0) throw SchemaError("node ids must be positive, got " + std::to_string(n.id));
        if (!std::isfinite(n.x) || !std::isfinite(n.y))
            throw SchemaError("node " + std::to_string(n.id) + " has non-finite coordinates");
        if (!node_ids.insert(n.id).second)
            throw DuplicateIdError("duplicate node id " + std::to_string(n.id));
    }

    std::set<int> element_ids;
    for (const auto& e : model.elements) {
        if (e.id <= 0) throw SchemaError("element ids must be positive, got " + std::to_string(e.id));
        if (!element_ids.insert(e.id).second)
            throw DuplicateIdError("duplicate element id " + std::to_string(e.id));
        if (e.node_i == e.node_j)
            throw SchemaError("element " + std::to_string(e.id) + " connects a node to itself");
        if (!node_ids.count(e.node_i))
            throw ReferenceError("element " + std::to_string(e.id) + " references missing node " +
                                 std::to_string(e.node_i));
        if (!node_ids.count(e.node_j))
            throw ReferenceError("element " + std::to_string(e.id) + " references missing node " +
                                 std::to_string(e.node_j));
        if (!(e.E > 0.0) || !(e.A > 0.0) || !(e.I > 0.0))
            throw SchemaError("element " + std::to_string(e.id) + " needs E, A, I > 0");
    }

    std::set<int> support_nodes;
    for (const auto& s : model.supports) {
        if (!node_ids.count(s.node))
            throw ReferenceError("support references missing node " + std::to_string(s.node));
        if (s.fix.count() == 0)
            throw SchemaError("support at node " + std::to_string(s.node) +
                              " constrains no degree of freedom");
        if (!support_nodes.insert(s.node).second)
            throw DuplicateIdError("duplicate support at node " + std::to_string(s.node));
    }

    for (const auto& p : model.point_loads) {
        if (!node_ids.count(p.node))
            throw ReferenceError("point load references missing node " + std::to_string(p.node));
        if (!std::isfinite(p.fx) || !std::isfinite(p.fy) || !std::isfinite(p.mz))
            throw SchemaError("point load at node " + std::to_string(p.node) + " is non-finite");
        if (p.fx == 0.0 && p.fy == 0.0 && p.mz == 0.0)
            throw SchemaError("point load at node " + std::to_string(p.node) +
                              " has all-zero components");
    }

    for (const auto& d : model.distributed_loads) {
        if (!element_ids.count(d.element))
            throw ReferenceError("distributed load references missing element " +
                                 std::to_string(d.element));
        if (!std::isfinite(d.w) || d.w == 0.0)
            throw SchemaError("distributed load on element " + std::to_string(d.element) +
                              " must have finite nonzero intensity");
    }

    if (model.stated_counts) {
        const auto& c = *model.stated_counts;
        if (c.columns < 0 || c.girders < 0 || c.diagonals < 0 || c.cantilevers < 0)
            throw SchemaError("stated counts must be non-negative");
    }

    int constrained = 0;
    for (const auto& s : model.supports) constrained += s.fix.count();
    if (constrained < 3)
        throw SchemaError("model constrains " + std::to_string(constrained) +
                          " DOFs; at least 3 are required to prevent rigid-body motion");
}

} // namespace sawp
