#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sawp/fem/solver.hpp"
#include "sawp/grader.hpp"
#include "sawp/model.hpp"
#include "sawp/paths.hpp"

namespace sawp::bench {

// Generation patterns of the benchmark: scaling (vary bays/stories),
// asymmetry (uneven stories per bay), features (diagonals, cantilevers).
enum class Pattern { scaling, asymmetry, features };

const char* to_string(Pattern p);
Pattern pattern_from_string(const std::string& s);

struct SAWPCase {
    int id = 0;
    std::string description;        // the word problem, verbatim
    FrameModel truth_model;         // canonical form, lint-clean
    fem::SolveResult truth_solution; // pinned kernel output
    Pattern pattern = Pattern::scaling;
    VisualizationSpec visualization;
};

// Loads the 20 bundled cases from <root>/benchmark/case01..case20. Verifies
// each pinned solution against a fresh solve (AssetCorruptionError on drift).
std::vector<SAWPCase> load_cases(const std::filesystem::path& root = default_data_dir());

SAWPCase case_by_id(int id, const std::filesystem::path& root = default_data_dir());

enum class Mutation {
    drop_node,            // remove the topmost free node and its incident elements
    drop_element,         // remove the highest-numbered element
    reshape_bays,         // wrong bay count / completed asymmetric frame
    move_loads_all_floor, // point loads smeared over every first-floor node
    wrong_support,        // last support loses its rotational fixity
    flip_distributed_sign // every distributed load negated
};

const char* to_string(Mutation m);

struct MutantSpec {
    int base_case = 0;
    Mutation mutation = Mutation::drop_node;
    grade::ErrorType expected = grade::ErrorType::type1_layout;
};

// Applies a deterministic flaw of the given kind to the case's truth model.
// Throws InapplicableMutationError when the topology does not support it.
FrameModel mutate_case(const SAWPCase& c, const MutantSpec& spec);

// The fixed mutant suite used by the grader-fidelity tests: two mutants per
// mutation kind, covering cases 5, 9, 11 and 13 (distributed-sign flips live
// on their distributed-load twins 6 and 12).
std::vector<MutantSpec> mutant_suite();

} // namespace sawp::bench
