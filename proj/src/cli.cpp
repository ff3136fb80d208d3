#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sawp/benchmark.hpp"
#include "sawp/errors.hpp"
#include "sawp/fmd.hpp"
#include "sawp/lint.hpp"
#include "sawp/numfmt.hpp"
#include "sawp/paths.hpp"
#include "sawp/pipeline.hpp"
#include "sawp/prompt.hpp"
#include "sawp/report.hpp"

namespace sawp::report::cli {
namespace {

std::string env_or(const char* variable, const std::string& fallback) {
    const char* v = std::getenv(variable);
    return (v && *v) ? v : fallback;
}

prompt::InstructionSelection parse_instructions(const std::string& text) {
    if (text == "all") return prompt::InstructionSelection::all();
    if (text == "none") return prompt::InstructionSelection::none();
    std::vector<prompt::InstructionId> ids;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token == "direction") ids.push_back(prompt::InstructionId::direction);
        else if (token == "number") ids.push_back(prompt::InstructionId::number);
        else if (token == "space") ids.push_back(prompt::InstructionId::space_rationality);
        else if (token == "distributed") ids.push_back(prompt::InstructionId::distributed_direction);
        else throw CLI::ValidationError("--instructions",
                                        "expected all, none, or a comma list of "
                                        "direction,number,space,distributed");
    }
    return prompt::InstructionSelection::of(std::move(ids));
}

std::vector<int> parse_case_list(const std::string& text) {
    std::vector<int> ids;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto dash = token.find('-');
        if (dash == std::string::npos) {
            ids.push_back(std::stoi(token));
        } else {
            const int lo = std::stoi(token.substr(0, dash));
            const int hi = std::stoi(token.substr(dash + 1));
            for (int k = lo; k <= hi; ++k) ids.push_back(k);
        }
    }
    return ids;
}

std::string run_stamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y%m%d-%H%M%S", &tm);
    return buf;
}

struct GatewayArgs {
    std::string provider;
    std::string model;
    std::string replay_dir;
    std::string record_dir;
    double temperature = 0.0;
    int rate_limit = 0;
};

void add_gateway_options(CLI::App* cmd, GatewayArgs& args) {
    cmd->add_option("--provider", args.provider, "openai | gemini | groq | replay");
    cmd->add_option("--model", args.model, "model name (SAWP_MODEL)");
    cmd->add_option("--replay", args.replay_dir, "transcript directory for the replay provider");
    cmd->add_option("--record", args.record_dir, "record live transcripts into this directory");
    cmd->add_option("--temperature", args.temperature, "sampling temperature (default 0)");
    cmd->add_option("--rate-limit", args.rate_limit, "max requests per minute (0 = unlimited)");
}

llm::ProviderConfig make_config(const GatewayArgs& args) {
    llm::ProviderConfig config;
    const std::string provider = args.provider.empty()
                                     ? env_or("SAWP_PROVIDER", "replay")
                                     : args.provider;
    config.provider = llm::provider_from_string(provider);
    config.model = args.model.empty()
                       ? env_or("SAWP_MODEL",
                                config.provider == llm::Provider::replay ? "offline" : "")
                       : args.model;
    if (config.model.empty())
        throw CLI::ValidationError("--model", "a model name is required for live providers");
    config.temperature = args.temperature;
    config.requests_per_minute = args.rate_limit;
    if (config.provider == llm::Provider::replay) {
        if (args.replay_dir.empty())
            throw CLI::ValidationError("--replay",
                                       "the replay provider needs a transcript directory");
        config.transcript_dir = args.replay_dir;
    } else if (!args.record_dir.empty()) {
        config.record = true;
        config.transcript_dir = args.record_dir;
    }
    return config;
}

void print_matrix(const pipeline::AccuracyMatrix& matrix) {
    for (const auto& row : matrix.rows) {
        std::cout << row.provider << "/" << row.model << ":";
        for (const auto& [case_id, v] : row.cells)
            std::cout << " " << case_id << "=" << format_number(v);
        std::cout << "\n  overall " << format_number(row.overall * 100.0) << "%\n";
        if (!row.error_histogram.empty()) {
            std::cout << "  errors:";
            for (const auto& [error, count] : row.error_histogram)
                std::cout << " " << error << "=" << count;
            std::cout << "\n";
        }
    }
}

void write_run_outputs(const std::filesystem::path& out_dir,
                       const pipeline::AccuracyMatrix& matrix,
                       const std::vector<std::pair<llm::ProviderConfig, pipeline::Attempt>>& log) {
    std::filesystem::create_directories(out_dir);
    {
        std::ofstream f(out_dir / "matrix.json");
        f << pipeline::serialize(matrix);
    }
    {
        std::ofstream f(out_dir / "errors.json");
        f << pipeline::serialize_error_histogram(matrix);
    }
    for (const auto& [config, attempt] : log) {
        char name[64];
        std::snprintf(name, sizeof(name), "case%02d/attempt%d", attempt.case_id, attempt.index);
        pipeline::write_attempt_artifacts(
            out_dir / (llm::to_string(config.provider) + std::string("-") + config.model) / name,
            attempt);
    }
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Declarative 2D frame analysis with an LLM generation benchmark"};
    app.require_subcommand(1);

    std::string data_dir = default_data_dir().string();
    app.add_option("--data-dir", data_dir, "root of benchmark/, prompts/, transcripts/")
        ->envname("SAWP_DATA_DIR");

    // ---- solve
    auto* solve_cmd = app.add_subcommand("solve", "solve a frame model document");
    std::string solve_model, solve_out = "out";
    solve_cmd->add_option("--model", solve_model, "FMD file")->required();
    solve_cmd->add_option("--out", solve_out, "output directory");

    // ---- validate
    auto* validate_cmd = app.add_subcommand("validate", "run the model lints");
    std::string validate_model;
    validate_cmd->add_option("--model", validate_model, "FMD file")->required();

    // ---- cases
    auto* cases_cmd = app.add_subcommand("cases", "list the bundled benchmark cases");

    // ---- prompt
    auto* prompt_cmd = app.add_subcommand("prompt", "print a rendered stage prompt");
    int prompt_case = 1, prompt_stage = 2, prompt_exemplar = 0;
    std::string prompt_instructions = "all";
    prompt_cmd->add_option("--case", prompt_case, "case id 1..20")->required();
    prompt_cmd->add_option("--stage", prompt_stage, "stage 1..3");
    prompt_cmd->add_option("--instructions", prompt_instructions, "all | none | comma list");
    prompt_cmd->add_option("--exemplar", prompt_exemplar, "exemplar case id (0 = default)");

    // ---- run
    auto* run_cmd = app.add_subcommand("run", "run one end-to-end attempt for a case");
    int run_case = 1, run_exemplar = 0;
    std::string run_instructions = "all", run_out;
    GatewayArgs run_gateway;
    run_cmd->add_option("--case", run_case, "case id 1..20")->required();
    run_cmd->add_option("--instructions", run_instructions, "all | none | comma list");
    run_cmd->add_option("--exemplar", run_exemplar, "exemplar case id (0 = default)");
    run_cmd->add_option("--out", run_out, "artifact directory (default runs/<stamp>)");
    add_gateway_options(run_cmd, run_gateway);

    // ---- bench
    auto* bench_cmd = app.add_subcommand("bench", "best-of-N benchmark over the 20 cases");
    int bench_n = 3;
    std::string bench_cases = "1-20", bench_out, bench_instructions = "all";
    GatewayArgs bench_gateway;
    bench_cmd->add_option("--n", bench_n, "attempts per case (default 3)");
    bench_cmd->add_option("--cases", bench_cases, "case list, e.g. 1,2,5 or 1-20");
    bench_cmd->add_option("--out", bench_out, "artifact directory (default runs/<stamp>)");
    bench_cmd->add_option("--instructions", bench_instructions, "all | none | comma list");
    add_gateway_options(bench_cmd, bench_gateway);

    // ---- stability
    auto* stability_cmd = app.add_subcommand("stability", "repeat one case end to end");
    int stability_case = 1, stability_repeats = 5;
    std::string stability_out, stability_instructions = "all";
    GatewayArgs stability_gateway;
    stability_cmd->add_option("--case", stability_case, "case id 1..20")->required();
    stability_cmd->add_option("--repeats", stability_repeats, "repeat count (default 5)");
    stability_cmd->add_option("--out", stability_out, "artifact directory");
    stability_cmd->add_option("--instructions", stability_instructions,
                              "all | none | comma list");
    add_gateway_options(stability_cmd, stability_gateway);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::filesystem::path root(data_dir);
    try {
        if (*solve_cmd) {
            const FrameModel model = load_model(solve_model);
            const ValidationReport lint = validate(model);
            for (const auto& f : lint.findings)
                std::cerr << "warning [" << f.lint << "] " << f.message << "\n";
            const fem::SolveResult result = fem::solve(model);
            report::ReportInputs inputs;
            inputs.model = &model;
            inputs.result = &result;
            const report::ReportBundle bundle = report::build_report(inputs, solve_out);
            if (result.condition_warning)
                std::cerr << "warning: system condition estimate "
                          << format_number(result.condition_estimate) << " exceeds 1e12\n";
            std::cout << "solved " << model.nodes.size() << " nodes / " << model.elements.size()
                      << " elements\n"
                      << "report: " << bundle.report_md.string() << "\n";
        } else if (*validate_cmd) {
            const FrameModel model = load_model(validate_model);
            const ValidationReport lint = validate(model);
            if (lint.clean()) {
                std::cout << "clean: no findings\n";
            } else {
                for (const auto& f : lint.findings)
                    std::cout << "[" << f.lint << "] " << f.message << "\n";
            }
        } else if (*cases_cmd) {
            for (const auto& c : bench::load_cases(root)) {
                std::cout << "case " << c.id << " [" << bench::to_string(c.pattern) << "] "
                          << c.truth_model.nodes.size() << " nodes, "
                          << c.truth_model.elements.size() << " elements";
                if (c.truth_model.stated_counts) {
                    const auto& sc = *c.truth_model.stated_counts;
                    std::cout << " (columns " << sc.columns << ", girders " << sc.girders
                              << ", diagonals " << sc.diagonals << ", cantilevers "
                              << sc.cantilevers << ")";
                }
                std::cout << "\n";
            }
        } else if (*prompt_cmd) {
            const bench::SAWPCase c = bench::case_by_id(prompt_case, root);
            prompt::PromptOptions options;
            options.instructions = parse_instructions(prompt_instructions);
            options.exemplar = prompt_exemplar;
            const auto bundle = prompt::build_stage_prompt(c, prompt_stage, options, root);
            for (const auto& m : prompt::render_messages(bundle).messages)
                std::cout << "--- " << m.role << " ---\n" << m.content << "\n";
        } else if (*run_cmd) {
            const bench::SAWPCase c = bench::case_by_id(run_case, root);
            llm::Gateway gateway(make_config(run_gateway));
            pipeline::RunOptions options;
            options.instructions = parse_instructions(run_instructions);
            options.exemplar = run_exemplar;
            options.data_root = root;
            const pipeline::Attempt attempt = pipeline::run_attempt(c, options, gateway, 1);
            const std::filesystem::path out =
                run_out.empty() ? std::filesystem::path("runs") / run_stamp() : run_out;
            pipeline::write_attempt_artifacts(out, attempt);
            std::cout << "case " << c.id << ": "
                      << (attempt.grade.fully_correct() ? "correct"
                                                        : grade::to_string(attempt.grade.error))
                      << "\nartifacts: " << out.string() << "\n";
            if (attempt.infrastructure_failure) {
                std::cerr << "infrastructure failure: " << attempt.infrastructure_error << "\n";
                return 1;
            }
        } else if (*bench_cmd) {
            std::vector<bench::SAWPCase> cases;
            for (int id : parse_case_list(bench_cases)) cases.push_back(bench::case_by_id(id, root));
            pipeline::BenchOptions options;
            options.mode = pipeline::BenchMode::best_of_n;
            options.n = bench_n;
            options.run.instructions = parse_instructions(bench_instructions);
            options.run.data_root = root;
            std::vector<std::pair<llm::ProviderConfig, pipeline::Attempt>> log;
            const auto matrix = pipeline::run_benchmark(
                {make_config(bench_gateway)}, cases, options, {},
                [&](const llm::ProviderConfig& cfg, const pipeline::Attempt& a) {
                    log.emplace_back(cfg, a);
                });
            const std::filesystem::path out =
                bench_out.empty() ? std::filesystem::path("runs") / run_stamp() : bench_out;
            write_run_outputs(out, matrix, log);
            print_matrix(matrix);
            std::cout << "artifacts: " << out.string() << "\n";
        } else if (*stability_cmd) {
            const bench::SAWPCase c = bench::case_by_id(stability_case, root);
            pipeline::BenchOptions options;
            options.mode = pipeline::BenchMode::stability;
            options.repeats = stability_repeats;
            options.run.instructions = parse_instructions(stability_instructions);
            options.run.data_root = root;
            std::vector<std::pair<llm::ProviderConfig, pipeline::Attempt>> log;
            const auto matrix = pipeline::run_benchmark(
                {make_config(stability_gateway)}, {c}, options, {},
                [&](const llm::ProviderConfig& cfg, const pipeline::Attempt& a) {
                    log.emplace_back(cfg, a);
                });
            const std::filesystem::path out =
                stability_out.empty() ? std::filesystem::path("runs") / run_stamp()
                                      : stability_out;
            write_run_outputs(out, matrix, log);
            print_matrix(matrix);
            std::cout << "artifacts: " << out.string() << "\n";
        }
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace sawp::report::cli
