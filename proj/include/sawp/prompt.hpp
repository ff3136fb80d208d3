#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sawp/benchmark.hpp"
#include "sawp/message.hpp"
#include "sawp/parameters.hpp"
#include "sawp/paths.hpp"

namespace sawp::prompt {

enum class InstructionId { direction, number, space_rationality, distributed_direction };

const char* to_string(InstructionId id);

// One structural reasoning instruction: title line plus ordered steps.
struct SystemInstruction {
    InstructionId id;
    std::string title;
    std::string body;
};

// The four-instruction catalog, loaded from the versioned prompt assets.
std::vector<SystemInstruction> instruction_catalog(
    const std::filesystem::path& root = default_data_dir());

struct InstructionSelection {
    enum class Mode { all, none, subset } mode = Mode::all;
    std::vector<InstructionId> subset;

    static InstructionSelection all() { return {Mode::all, {}}; }
    static InstructionSelection none() { return {Mode::none, {}}; }
    static InstructionSelection of(std::vector<InstructionId> ids) {
        return {Mode::subset, std::move(ids)};
    }
};

struct PromptOptions {
    InstructionSelection instructions = InstructionSelection::all();
    // 0 picks the default exemplar: case 1, or case 3 when prompting case 1.
    int exemplar = 0;
    // stage chaining: stage-2 prompts embed the extracted parameters, stage-3
    // prompts embed the assembled model
    std::optional<ParameterSet> stage1_parameters;
    std::optional<FrameModel> stage2_model;
};

struct PromptSection {
    std::string id; // general | task_specific | icl | question
    std::string text;
};

struct PromptBundle {
    int stage = 0;
    std::vector<PromptSection> sections; // ordered general, task_specific, icl, question
    std::vector<SystemInstruction> instructions;
    int exemplar_case = 0;
};

// Assembles the staged prompt for one case. Throws SelfExemplarError when the
// exemplar would leak the case's own answer, DomainError for a bad stage.
PromptBundle build_stage_prompt(const bench::SAWPCase& c, int stage,
                                const PromptOptions& options = {},
                                const std::filesystem::path& root = default_data_dir());

// Deterministic rendering: general + task + instructions in the system
// message, exemplar + question in the user message.
MessageScript render_messages(const PromptBundle& bundle);

// The exact byte sequence an instruction contributes to the system message;
// selections differ only by these chunks.
std::string instruction_chunk(const SystemInstruction& instruction);

} // namespace sawp::prompt
