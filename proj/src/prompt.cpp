#include "sawp/prompt.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sawp/errors.hpp"
#include "sawp/fmd.hpp"
#include "sawp/numfmt.hpp"

namespace sawp::prompt {
namespace {

std::string read_asset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open prompt asset " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

const char* asset_name(InstructionId id) {
    switch (id) {
    case InstructionId::direction: return "direction";
    case InstructionId::number: return "number";
    case InstructionId::space_rationality: return "space";
    case InstructionId::distributed_direction: return "distributed";
    }
    return "?";
}

std::string parameter_table(const ParameterSet& p) {
    std::ostringstream os;
    os << "| parameter | value |\n| --- | --- |\n";
    os << "| E | " << format_number(p.E) << " |\n";
    os << "| A_column | " << format_number(p.A_column) << " |\n";
    os << "| A_girder | " << format_number(p.A_girder) << " |\n";
    os << "| I_column | " << format_number(p.I_column) << " |\n";
    os << "| I_girder | " << format_number(p.I_girder) << " |";
    for (const auto& [name, value] : p.loads)
        os << "\n| " << name << " | " << format_number(value) << " |";
    return os.str();
}

std::string exemplar_answer(const bench::SAWPCase& exemplar, int stage) {
    switch (stage) {
    case 1: return serialize(derive_parameters(exemplar.truth_model)) + "\n";
    case 2: return serialize_structural(exemplar.truth_model);
    case 3: return serialize(exemplar.visualization) + "\n";
    }
    throw DomainError("stage must be 1, 2 or 3");
}

} // namespace

const char* to_string(InstructionId id) {
    switch (id) {
    case InstructionId::direction: return "direction";
    case InstructionId::number: return "number";
    case InstructionId::space_rationality: return "space_rationality";
    case InstructionId::distributed_direction: return "distributed_direction";
    }
    return "?";
}

std::vector<SystemInstruction> instruction_catalog(const std::filesystem::path& root) {
    std::vector<SystemInstruction> catalog;
    for (InstructionId id : {InstructionId::direction, InstructionId::number,
                             InstructionId::space_rationality,
                             InstructionId::distributed_direction}) {
        const std::string text = trimmed(
            read_asset(root / "prompts" / "instructions" / (std::string(asset_name(id)) + ".txt")));
        const auto nl = text.find('\n');
        if (nl == std::string::npos || nl + 1 >= text.size())
            throw AssetCorruptionError("instruction asset for '" + std::string(asset_name(id)) +
                                       "' needs a title line and a body");
        catalog.push_back({id, text.substr(0, nl), text.substr(nl + 1)});
    }
    return catalog;
}

PromptBundle build_stage_prompt(const bench::SAWPCase& c, int stage, const PromptOptions& options,
                                const std::filesystem::path& root) {
    if (stage < 1 || stage > 3) throw DomainError("stage must be 1, 2 or 3");

    int exemplar_id = options.exemplar;
    if (exemplar_id == 0) exemplar_id = (c.id == 1) ? 3 : 1;
    if (exemplar_id == c.id)
        throw SelfExemplarError("case " + std::to_string(c.id) +
                                " cannot use itself as the in-context exemplar");
    const bench::SAWPCase exemplar = bench::case_by_id(exemplar_id, root);

    PromptBundle bundle;
    bundle.stage = stage;
    bundle.exemplar_case = exemplar_id;

    const auto catalog = instruction_catalog(root);
    switch (options.instructions.mode) {
    case InstructionSelection::Mode::all: bundle.instructions = catalog; break;
    case InstructionSelection::Mode::none: break;
    case InstructionSelection::Mode::subset:
        for (const auto& instr : catalog)
            if (std::find(options.instructions.subset.begin(), options.instructions.subset.end(),
                          instr.id) != options.instructions.subset.end())
                bundle.instructions.push_back(instr);
        break;
    }

    bundle.sections.push_back({"general", trimmed(read_asset(root / "prompts" / "general.txt"))});
    bundle.sections.push_back(
        {"task_specific",
         trimmed(read_asset(root / "prompts" /
                            ("task_stage" + std::to_string(stage) + ".txt")))});

    std::ostringstream icl;
    icl << "Example problem:\n"
        << trimmed(exemplar.description) << "\n\nExample answer:\n```json\n"
        << exemplar_answer(exemplar, stage) << "```";
    bundle.sections.push_back({"icl", icl.str()});

    std::ostringstream q;
    q << "Question:\n" << trimmed(c.description);
    if (stage == 2 && options.stage1_parameters)
        q << "\n\nExtracted parameters:\n" << parameter_table(*options.stage1_parameters);
    if (stage == 3 && options.stage2_model)
        q << "\n\nFrame model document:\n```json\n" << serialize_structural(*options.stage2_model)
          << "```";
    bundle.sections.push_back({"question", q.str()});

    return bundle;
}

std::string instruction_chunk(const SystemInstruction& instruction) {
    return "\n" + instruction.title + "\n" + instruction.body + "\n";
}

MessageScript render_messages(const PromptBundle& bundle) {
    std::string general, task, icl, question;
    for (const auto& s : bundle.sections) {
        if (s.id == "general") general = s.text;
        if (s.id == "task_specific") task = s.text;
        if (s.id == "icl") icl = s.text;
        if (s.id == "question") question = s.text;
    }
    std::string system = general + "\n\n" + task + "\n";
    for (const auto& instr : bundle.instructions) system += instruction_chunk(instr);

    MessageScript script;
    script.messages.push_back({"system", system});
    script.messages.push_back({"user", icl + "\n\n" + question});
    return script;
}

} // namespace sawp::prompt
