#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latpath/generators.hpp"
#include "latpath/objective.hpp"
#include "latpath/report.hpp"
#include "latpath/solvers.hpp"

// Experiment harness behind the `verify` subcommand: expands a corpus
// manifest into (instance, rule, objective, start) runs, checks every
// declared bound and every optimum against the brute-force oracle, and
// renders byte-deterministic CSV/text reports.

namespace latpath::harness {

struct RunConfig {
    std::string manifest_path;
    std::string outdir;
    std::vector<std::string> rules;
    int objective_count = 20;
    std::uint64_t objective_seed = 1;
    std::vector<std::string> objective_files;  // explicit objectives, run in addition
    std::string starts = "all";  // "all" or "sample:N"
    int sigma_sample = 10;
    std::optional<std::pair<int, long long>> lemma8;  // n, k (alpha = 2k+1)
    std::optional<int> diameter_sampled;              // per-instance sample count
};

extern const std::vector<std::string> kAllRules;

/// Flat key=value lines; '#' comments. Unknown keys are errors.
RunConfig parse_config(const std::string& text);

/// Seeds from the manifest, with LAB_SEED (when set) replacing the seed of
/// line i by LAB_SEED + i.
std::vector<GenSpec> load_manifest(const std::string& path);

bool rule_compatible(const std::string& rule, const Polytope& p, std::string* why = nullptr);

/// Dispatch a single solve. sigma is required for the sigma_max and
/// greatest_improvement rules and ignored otherwise.
SolveReport run_rule(const std::string& rule, const Polytope& p, const EdgeGraph& g,
                     const Objective& c, int start, const SignedPermutation* sigma);

struct VerifyOutcome {
    long long runs = 0;
    long long failures = 0;
    std::vector<std::string> counterexamples;
    std::string results_csv;
    std::string summary_csv;
    std::string bounds_text;
    bool ok() const { return failures == 0; }
};

VerifyOutcome run_verify(const RunConfig& cfg);

/// The seeded objective list used for an instance: `count` integer vectors in
/// [-9,9]^n, each lex-perturbed to a total order on the instance's vertices.
std::vector<Objective> instance_objectives(const Polytope& p, const std::string& instance_name,
                                           int count, std::uint64_t seed);

}  // namespace latpath::harness
