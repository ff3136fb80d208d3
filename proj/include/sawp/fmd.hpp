#pragma once

#include <filesystem>
#include <string>

#include "sawp/model.hpp"

namespace sawp {

// Parses a frame model document (UTF-8 JSON). Unknown keys are rejected.
// Throws SchemaError, ReferenceError or DuplicateIdError.
FrameModel parse_document(const std::string& text);

FrameModel load_model(const std::filesystem::path& path);

// Deterministic serialization: fixed key order, one entry per line, numbers
// with 9 significant digits. parse_document(serialize(m)) reproduces m, and
// serialize(parse_document(doc)) == doc for documents this writer produced.
std::string serialize(const FrameModel& model);

// Same writer restricted to the five structural keys; used for stage-2
// prompt material where counts and visualization are not part of the answer.
std::string serialize_structural(const FrameModel& model);

void save_model(const FrameModel& model, const std::filesystem::path& path);

// Standalone visualization fragment, the stage-3 answer payload:
// {"diagrams": [...], "scale": s, "samples": n}.
VisualizationSpec parse_visualization_spec(const std::string& text);
std::string serialize(const VisualizationSpec& spec);

} // namespace sawp
