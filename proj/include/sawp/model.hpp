#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sawp {

// Coordinate comparisons throughout the model layer use this absolute
// tolerance; benchmark coordinates are exact small integers.
inline constexpr double kCoordTol = 1e-9;

enum class ElementKind { column, girder, diagonal, cantilever };

const char* to_string(ElementKind k);
ElementKind element_kind_from_string(const std::string& s);

struct Node {
    int id = 0;
    double x = 0.0; // m
    double y = 0.0; // m
};

struct Element {
    int id = 0;
    int node_i = 0;
    int node_j = 0;
    ElementKind kind = ElementKind::girder;
    double E = 0.0; // Pa
    double A = 0.0; // m^2
    double I = 0.0; // m^4
};

// Constrained DOFs at a node, order (ux, uy, rz).
struct Fixity {
    bool ux = false;
    bool uy = false;
    bool rz = false;

    int count() const { return int(ux) + int(uy) + int(rz); }
    bool operator==(const Fixity&) const = default;
};

struct Support {
    int node = 0;
    Fixity fix;
};

struct PointLoad {
    int node = 0;
    double fx = 0.0; // N
    double fy = 0.0; // N
    double mz = 0.0; // N*m
};

// Uniform load transverse to the element, signed along local +y
// (local x runs node_i -> node_j, local y is 90 degrees counterclockwise).
struct DistributedLoad {
    int element = 0;
    double w = 0.0;      // N/m
    bool inward = false; // how the problem phrased the direction
};

struct StatedCounts {
    int columns = 0;
    int girders = 0;
    int diagonals = 0;
    int cantilevers = 0;
    bool operator==(const StatedCounts&) const = default;
};

enum class DiagramKind { geometry, deformed, axial, shear, moment };

const char* to_string(DiagramKind k);
DiagramKind diagram_kind_from_string(const std::string& s);

struct VisualizationSpec {
    std::vector<DiagramKind> diagrams;
    double scale = 50.0; // deformation magnification, dimensionless
    int samples = 21;    // sample points per element for force diagrams
    bool operator==(const VisualizationSpec&) const = default;
};

// Declarative analysis input: the parsed form of a frame model document.
// Values are treated as immutable after construction; all operations take
// const references and return fresh models.
struct FrameModel {
    std::vector<Node> nodes;
    std::vector<Element> elements;
    std::vector<Support> supports;
    std::vector<PointLoad> point_loads;
    std::vector<DistributedLoad> distributed_loads;
    std::optional<StatedCounts> stated_counts;
    std::optional<VisualizationSpec> visualization;

    const Node* find_node(int id) const;
    const Element* find_element(int id) const;
    // Throwing lookups; raise ReferenceError on a dangling id.
    const Node& node(int id) const;
    const Element& element(int id) const;

    bool is_support(int node_id) const;
    int constrained_dof_count() const;
};

// Verifies referential integrity and the per-type invariants; throws
// SchemaError / ReferenceError / DuplicateIdError. parse_document calls this;
// in-memory builders (mutants, tests) can call it directly.
void check_integrity(const FrameModel& model);

} // namespace sawp
