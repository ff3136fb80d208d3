#include "sawp/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "sawp/errors.hpp"
#include "sawp/fmd.hpp"
#include "sawp/lint.hpp"
#include "sawp/numfmt.hpp"

namespace sawp::pipeline {

RunOptions::RunOptions() : data_root(default_data_dir()) {}

std::optional<std::string> extract_fenced_block(const std::string& raw) {
    std::istringstream in(raw);
    std::string line;
    std::vector<std::string> blocks;
    std::string current;
    bool inside = false;
    while (std::getline(in, line)) {
        std::string stripped = line;
        while (!stripped.empty() && (stripped.back() == '\r' || stripped.back() == ' '))
            stripped.pop_back();
        if (stripped.rfind("```", 0) == 0) {
            if (inside) {
                blocks.push_back(current);
                current.clear();
            }
            inside = !inside;
            continue;
        }
        if (inside) current += line + "\n";
    }
    if (inside) return std::nullopt; // unterminated fence
    if (blocks.size() != 1) return std::nullopt;
    return blocks.front();
}

StageOutput run_stage(const bench::SAWPCase& c, int stage, const RunOptions& options,
                      llm::Gateway& gateway, const std::optional<ParameterSet>& stage1,
                      const std::optional<FrameModel>& stage2) {
    prompt::PromptOptions popts;
    popts.instructions = options.instructions;
    popts.exemplar = options.exemplar;
    popts.stage1_parameters = stage1;
    popts.stage2_model = stage2;

    const prompt::PromptBundle bundle =
        prompt::build_stage_prompt(c, stage, popts, options.data_root);
    const MessageScript script = prompt::render_messages(bundle);

    StageOutput out;
    out.stage = stage;
    out.digest = llm::digest(script, gateway.config().provider, gateway.config().model);
    out.raw = gateway.complete(script); // gateway errors propagate to the attempt level

    const auto block = extract_fenced_block(out.raw);
    if (!block) return out; // unparseable
    try {
        switch (stage) {
        case 1: out.parameters = parse_parameters(*block); break;
        case 2: out.model = canonicalize(parse_document(*block)); break;
        case 3: out.visualization = parse_visualization_spec(*block); break;
        default: throw DomainError("stage must be 1, 2 or 3");
        }
        out.status = StageOutput::Status::ok;
    } catch (const SchemaError&) {
    } catch (const ReferenceError&) {
    } catch (const DuplicateIdError&) {
    }
    return out;
}

Attempt run_attempt(const bench::SAWPCase& c, const RunOptions& options, llm::Gateway& gateway,
                    int index) {
    Attempt attempt;
    attempt.case_id = c.id;
    attempt.index = index;
    attempt.grade.rel_tol = grade::kNumericRelTol;
    attempt.grade.abs_tol = grade::kNumericAbsTol;

    try {
        StageOutput s1 = run_stage(c, 1, options, gateway);
        attempt.stages.push_back(s1);

        std::optional<FrameModel> model;
        if (s1.status == StageOutput::Status::ok) {
            StageOutput s2 = run_stage(c, 2, options, gateway, s1.parameters);
            attempt.stages.push_back(s2);
            if (s2.status == StageOutput::Status::ok) {
                model = s2.model;
                StageOutput s3 = run_stage(c, 3, options, gateway, s1.parameters, s2.model);
                attempt.stages.push_back(s3);
            }
        }

        if (model) {
            attempt.model = model;
            for (const auto& f : validate(*model).findings)
                attempt.lint_findings.push_back(f.lint + ": " + f.message);
            try {
                attempt.result = fem::solve(*model);
            } catch (const SingularSystemError&) {
                // recorded as unsolvable via the missing result
            }
        }
    } catch (const AuthError& e) {
        attempt.infrastructure_failure = true;
        attempt.infrastructure_error = e.what();
    } catch (const TimeoutError& e) {
        attempt.infrastructure_failure = true;
        attempt.infrastructure_error = e.what();
    } catch (const RateLimitError& e) {
        attempt.infrastructure_failure = true;
        attempt.infrastructure_error = e.what();
    }

    // grade against ground truth
    if (attempt.model) {
        const FrameModel truth = canonicalize(c.truth_model);
        const grade::StructureGrade sg = grade_structure(*attempt.model, truth);
        attempt.grade.layout_match = sg.layout;
        attempt.grade.support_match = sg.supports;
        attempt.grade.load_match = sg.loads;
        attempt.grade.diff_summary = sg.diff.summary();
        if (attempt.result && sg.layout && sg.supports && sg.loads) {
            try {
                attempt.grade.numeric_match =
                    grade::grade_numeric(*attempt.result, c.truth_solution);
            } catch (const ShapeMismatchError&) {
                attempt.grade.numeric_match = false;
            }
        }
    }
    bool parsed = attempt.stages.size() == 3;
    for (const auto& s : attempt.stages)
        if (s.status != StageOutput::Status::ok) parsed = false;
    attempt.grade.error = grade::classify(parsed, attempt.result.has_value(), attempt.grade);
    return attempt;
}

BestOfN run_case_best_of_n(const bench::SAWPCase& c, int n, const RunOptions& options,
                           llm::Gateway& gateway) {
    if (n < 1) throw DomainError("best-of-N needs N >= 1");
    BestOfN result;
    for (int k = 1; k <= n; ++k) {
        Attempt a = run_attempt(c, options, gateway, k);
        if (!a.infrastructure_failure && a.grade.fully_correct()) result.solved = true;
        result.attempts.push_back(std::move(a));
    }
    return result;
}

StabilityResult run_stability(const bench::SAWPCase& c, int repeats, const RunOptions& options,
                              llm::Gateway& gateway) {
    if (repeats < 1) throw DomainError("stability needs repeats >= 1");
    StabilityResult result;
    int valid = 0, passed = 0;
    for (int k = 1; k <= repeats; ++k) {
        Attempt a = run_attempt(c, options, gateway, k);
        if (!a.infrastructure_failure) {
            ++valid;
            if (a.grade.fully_correct()) ++passed;
        }
        result.attempts.push_back(std::move(a));
    }
    result.rate = valid > 0 ? double(passed) / double(valid) : 0.0;
    return result;
}

AccuracyMatrix run_benchmark(const std::vector<llm::ProviderConfig>& configs,
                             const std::vector<bench::SAWPCase>& cases,
                             const BenchOptions& options, const GatewayFactory& factory,
                             const AttemptSink& sink) {
    AccuracyMatrix matrix;
    matrix.mode = options.mode;
    matrix.samples = options.mode == BenchMode::best_of_n ? options.n : options.repeats;
    for (const auto& c : cases) matrix.case_ids.push_back(c.id);

    for (const auto& config : configs) {
        std::unique_ptr<llm::Gateway> gateway =
            factory ? factory(config) : std::make_unique<llm::Gateway>(config);

        std::vector<Attempt> attempts;
        for (const auto& c : cases) {
            if (options.mode == BenchMode::best_of_n) {
                BestOfN r = run_case_best_of_n(c, options.n, options.run, *gateway);
                attempts.insert(attempts.end(), r.attempts.begin(), r.attempts.end());
            } else {
                StabilityResult r = run_stability(c, options.repeats, options.run, *gateway);
                attempts.insert(attempts.end(), r.attempts.begin(), r.attempts.end());
            }
        }
        const grade::AccuracyCells cells = grade::aggregate_accuracy(
            attempts, options.mode == BenchMode::stability ? "stability" : "best_of_n");

        MatrixRow row;
        row.provider = llm::to_string(config.provider);
        row.model = config.model;
        row.cells = cells.by_case;
        row.overall = cells.overall;
        row.error_histogram = cells.error_histogram;
        matrix.rows.push_back(std::move(row));

        if (sink)
            for (const auto& a : attempts) sink(config, a);
    }
    return matrix;
}

std::string serialize(const AccuracyMatrix& m) {
    std::ostringstream os;
    os << "{\n  \"mode\": \"" << (m.mode == BenchMode::best_of_n ? "best_of_n" : "stability")
       << "\",\n  \"samples\": " << m.samples << ",\n  \"cases\": [";
    for (size_t k = 0; k < m.case_ids.size(); ++k) os << (k ? ", " : "") << m.case_ids[k];
    os << "],\n  \"rows\": [";
    for (size_t r = 0; r < m.rows.size(); ++r) {
        const auto& row = m.rows[r];
        os << (r ? ",\n    " : "\n    ") << "{\"provider\": \"" << row.provider
           << "\", \"model\": \"" << row.model << "\", \"cells\": {";
        size_t k = 0;
        for (const auto& [case_id, v] : row.cells)
            os << (k++ ? ", " : "") << "\"" << case_id << "\": " << format_number(v);
        os << "}, \"overall\": " << format_number(row.overall) << "}";
    }
    os << (m.rows.empty() ? "]\n" : "\n  ]\n") << "}\n";
    return os.str();
}

std::string serialize_error_histogram(const AccuracyMatrix& m) {
    std::ostringstream os;
    os << "{\n  \"rows\": [";
    for (size_t r = 0; r < m.rows.size(); ++r) {
        const auto& row = m.rows[r];
        os << (r ? ",\n    " : "\n    ") << "{\"provider\": \"" << row.provider
           << "\", \"model\": \"" << row.model << "\", \"histogram\": {";
        size_t k = 0;
        for (const auto& [error, count] : row.error_histogram)
            os << (k++ ? ", " : "") << "\"" << error << "\": " << count;
        os << "}}";
    }
    os << (m.rows.empty() ? "]\n" : "\n  ]\n") << "}\n";
    return os.str();
}

void write_attempt_artifacts(const std::filesystem::path& dir, const Attempt& attempt) {
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& content) {
        std::ofstream out(dir / name);
        if (!out) throw IOError("cannot write " + (dir / name).string());
        out << content;
    };
    for (const auto& s : attempt.stages)
        write("stage" + std::to_string(s.stage) + ".txt", s.raw);
    if (attempt.model) write("model.fmd.json", serialize(*attempt.model));
    if (attempt.result) write("solution.json", fem::serialize(*attempt.result));
    write("grade.json", grade::serialize(attempt.grade));
    if (!attempt.lint_findings.empty()) {
        std::string lints;
        for (const auto& f : attempt.lint_findings) lints += f + "\n";
        write("lints.txt", lints);
    }
    if (attempt.infrastructure_failure) write("infrastructure_error.txt",
                                              attempt.infrastructure_error + "\n");
}

} // namespace sawp::pipeline
