#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sawp/benchmark.hpp"
#include "sawp/grader.hpp"
#include "sawp/llm.hpp"
#include "sawp/parameters.hpp"
#include "sawp/prompt.hpp"

namespace sawp::pipeline {

// One stage response: raw text plus the payload parsed from its single
// fenced block. Malformed output is recorded as unparseable, never thrown.
struct StageOutput {
    int stage = 0;
    std::string raw;
    enum class Status { ok, unparseable } status = Status::unparseable;
    std::optional<ParameterSet> parameters;          // stage 1
    std::optional<FrameModel> model;                 // stage 2, canonicalized
    std::optional<VisualizationSpec> visualization;  // stage 3
    std::string digest;
};

struct Attempt {
    int case_id = 0;
    int index = 0; // 1-based
    std::vector<StageOutput> stages;
    std::optional<FrameModel> model; // assembled (canonical) when stages 1-2 parsed
    std::optional<fem::SolveResult> result;
    grade::GradeReport grade;
    bool infrastructure_failure = false; // gateway failure, excluded from accuracy
    std::string infrastructure_error;
    std::vector<std::string> lint_findings; // warnings, recorded only
};

struct RunOptions {
    prompt::InstructionSelection instructions = prompt::InstructionSelection::all();
    int exemplar = 0; // 0 = default exemplar rule
    std::filesystem::path data_root;

    RunOptions();
};

// The single fenced code block of an LLM response; nullopt unless exactly one
// block is present.
std::optional<std::string> extract_fenced_block(const std::string& raw);

StageOutput run_stage(const bench::SAWPCase& c, int stage, const RunOptions& options,
                      llm::Gateway& gateway, const std::optional<ParameterSet>& stage1 = {},
                      const std::optional<FrameModel>& stage2 = {});

Attempt run_attempt(const bench::SAWPCase& c, const RunOptions& options, llm::Gateway& gateway,
                    int index);

struct BestOfN {
    bool solved = false;
    std::vector<Attempt> attempts;
};

// N independent attempts; the case counts as solved when any grades fully
// correct. All attempts are retained for reporting.
BestOfN run_case_best_of_n(const bench::SAWPCase& c, int n, const RunOptions& options,
                           llm::Gateway& gateway);

struct StabilityResult {
    double rate = 0.0;
    std::vector<Attempt> attempts;
};

// Success rate over independent end-to-end repeats (default 5 upstream).
StabilityResult run_stability(const bench::SAWPCase& c, int repeats, const RunOptions& options,
                              llm::Gateway& gateway);

enum class BenchMode { best_of_n, stability };

struct MatrixRow {
    std::string provider;
    std::string model;
    std::map<int, double> cells; // case id -> solved flag or rate
    double overall = 0.0;
    std::map<std::string, int> error_histogram;
};

struct AccuracyMatrix {
    BenchMode mode = BenchMode::best_of_n;
    int samples = 3; // N or repeat count
    std::vector<int> case_ids;
    std::vector<MatrixRow> rows;
};

struct BenchOptions {
    BenchMode mode = BenchMode::best_of_n;
    int n = 3;       // best-of-N attempts
    int repeats = 5; // stability repeats
    RunOptions run;
};

using GatewayFactory = std::function<std::unique_ptr<llm::Gateway>(const llm::ProviderConfig&)>;
using AttemptSink = std::function<void(const llm::ProviderConfig&, const Attempt&)>;

AccuracyMatrix run_benchmark(const std::vector<llm::ProviderConfig>& configs,
                             const std::vector<bench::SAWPCase>& cases,
                             const BenchOptions& options, const GatewayFactory& factory = {},
                             const AttemptSink& sink = {});

std::string serialize(const AccuracyMatrix& matrix);
std::string serialize_error_histogram(const AccuracyMatrix& matrix);

// Per-attempt artifact files (stage texts, model, solution, grade) for audit.
void write_attempt_artifacts(const std::filesystem::path& dir, const Attempt& attempt);

} // namespace sawp::pipeline
