#pragma once

// Executable checks for the constructive lemmas, propositions and theorems.
// Each check enumerates (or samples with a fixed seed) small instances,
// runs the library on them and records every disagreement with a JSON
// serialisation of the instance that reproduces it.

#include <cstdint>
#include <string>
#include <vector>

#include "cnpkit/mcng.hpp"
#include "cnpkit/parallel.hpp"

namespace cnpkit {

struct CheckFailure {
    std::string instance;  // compact JSON
    std::string expected;
    std::string got;
    bool operator==(const CheckFailure&) const = default;
};

struct CheckReport {
    std::string name;
    std::size_t attempted = 0;
    std::size_t skipped = 0;
    /// Sub-cases examined (target-reaching sequences, solver calls, ...).
    std::size_t cases = 0;
    std::vector<CheckFailure> failures;
    double elapsed_seconds = 0.0;

    bool passed() const noexcept { return failures.empty(); }
};

struct CheckConfig {
    Execution execution = Execution::parallel;
    std::uint64_t node_ceiling = kDefaultNodeCeiling;
};

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr std::size_t kDefaultLemma2Trials = 200;
inline constexpr std::size_t kDefaultPropositionTrials = 100;
inline constexpr std::size_t kMaxExtractionBudget = 2;
inline constexpr std::size_t kMaxAlternationN = 3;
inline constexpr std::size_t kMaxCnpcTotal = 6;
inline constexpr std::size_t kCnpcMaxAlphabet = 4;
inline constexpr std::size_t kMaxW1Vertices = 7;

/// Planted exact covers: deletions replay to the target in exactly |cover|
/// steps and both extractors recover a cover (the deletion extractor the
/// planted one).
CheckReport check_lemma2(std::size_t trials, std::uint64_t seed, const CheckConfig& config = {});

/// Every event sequence of length <= budget on every reduced instance with
/// <= 3 sets over <= 4 elements; each target-reaching sequence must yield a
/// cover of size <= its length.
CheckReport check_extraction(std::size_t budget, const CheckConfig& config = {});

/// Genomes Y0 x1 Y1 ... xn Yn with |Yi| <= 2 over two Y symbols: distance
/// at least n, exactly n when Y0 is empty.
CheckReport check_alternation(std::size_t n_max, const CheckConfig& config = {});

/// Removing a symbol never increases d_GCNP; rewriting an unimportant
/// position never increases d_GG.
CheckReport check_propositions(std::size_t trials, std::uint64_t seed,
                               const CheckConfig& config = {});

/// Every CNP pair over alphabets of size <= 4 with totals <= max_total:
/// construction equals brute force and sits in {n*-1, n*}.
CheckReport check_cnpc(std::size_t max_total, const CheckConfig& config = {});

/// Every properly colored graph (up to color/vertex relabeling) on
/// <= vertex_max vertices with k in {2, 3}: clique iff cover of size k',
/// and the promise holds.
CheckReport check_w1_reduction(std::size_t vertex_max, const CheckConfig& config = {});

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t lemma2_trials = kDefaultLemma2Trials;
    std::size_t proposition_trials = kDefaultPropositionTrials;
    std::size_t extraction_budget = kMaxExtractionBudget;
    std::size_t alternation_n = 2;
    std::size_t cnpc_total = kMaxCnpcTotal;
    std::size_t w1_vertices = 6;
};

/// All checks, ordered by name.
std::vector<CheckReport> run_all_checks(const SuiteOptions& options, const CheckConfig& config = {});

/// Names accepted by the CLI's verify subcommand.
const std::vector<std::string>& check_names();

}  // namespace cnpkit
