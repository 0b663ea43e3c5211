#pragma once

// Set-cover machinery behind the hardness results: the set cover -> MCNG
// construction and its two solution converters, the subset-closure and
// disjointification transforms, the multicolored clique -> SET-COVER-EC
// construction, and exhaustive oracles for all of them.

#include <optional>
#include <string>
#include <vector>

#include "cnpkit/genome.hpp"
#include "cnpkit/mcng.hpp"

namespace cnpkit {

struct NamedSet {
    std::string name;
    std::vector<std::size_t> elements;  // universe indices, ascending
    bool operator==(const NamedSet&) const = default;
};

/// Universe plus an ordered collection of non-empty named subsets. Whether
/// the sets actually cover the universe is a checked property
/// (covers_universe), because some generated instances deliberately leave
/// elements uncovered.
class SetSystem {
public:
    SetSystem(std::vector<std::string> universe, std::vector<NamedSet> sets);

    /// Builds from element names; set elements are re-sorted into universe order.
    static SetSystem from_names(std::vector<std::string> universe,
                                const std::vector<std::pair<std::string, std::vector<std::string>>>& sets);

    const std::vector<std::string>& universe() const noexcept { return universe_; }
    const std::vector<NamedSet>& sets() const noexcept { return sets_; }
    std::size_t element_index(const std::string& name) const;
    std::size_t set_index(const std::string& name) const;

    /// Number of sets containing each element.
    std::vector<std::size_t> frequencies() const;
    bool covers_universe() const;

    bool operator==(const SetSystem& other) const = default;

private:
    std::vector<std::string> universe_;
    std::vector<NamedSet> sets_;
};

/// Indices of chosen sets.
using Cover = std::vector<std::size_t>;
/// Explicit sets of universe indices (e.g. a disjointified cover).
using SetList = std::vector<std::vector<std::size_t>>;

bool is_cover(const SetSystem& system, const Cover& cover);
bool is_exact_cover(const SetSystem& system, const Cover& cover);

/// Properly colored simple graph. Colors are 1..k.
struct ColoredGraph {
    std::vector<std::string> vertices;
    std::size_t k = 0;
    std::vector<std::size_t> color;  // per vertex
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    /// Throws ImproperColoring or MalformedInput.
    void validate() const;
};

struct ScEcInstance {
    SetSystem system;
    std::size_t k_prime = 0;
};

inline constexpr std::size_t kMaxExhaustiveSets = 24;
inline constexpr std::size_t kMaxClosureSetSize = 10;
inline constexpr std::size_t kMaxCliqueCandidates = 1'000'000;

/// Genome s_S1 q(S1) s_S2 q(S2) ... with q listing elements in universe
/// order; CNP keeps each separator once and one copy fewer of every element.
/// Symbols are named "s_<set>" and "e_<element>".
McngInstance sc_to_mcng(const SetSystem& system);

/// Position of each set's separator in sc_to_mcng(system).genome (1-based).
std::vector<std::size_t> separator_positions(const SetSystem& system);

/// One deletion per chosen set removing its whole q block, right to left.
EventSequence exact_cover_deletions(const SetSystem& system, const Cover& cover);

/// Sets whose block lost characters to a deletion. Deletions only.
Cover extract_cover_deletions(const McngInstance& instance, const SetSystem& system,
                              const EventSequence& events);

/// Cover from any target-reaching event sequence: for each element, the
/// leftmost original occurrence with no surviving descendant, mapped to the
/// separator on its left.
Cover extract_cover_general(const McngInstance& instance, const SetSystem& system,
                            const EventSequence& events);

/// All distinct non-empty subsets of every set. Sets are ordered by size and
/// then lexicographically by element index; names list their elements.
SetSystem subset_closure(const SetSystem& system, std::size_t t);

/// {S1, S2 \ S1, S3 \ (S1 u S2), ...} with empty residuals dropped.
SetList disjointify(const SetSystem& system, const Cover& cover);

/// Maps explicit sets to their indices in `system` (throws if any is absent).
Cover locate_sets(const SetSystem& system, const SetList& sets);

ScEcInstance mcq_to_scec(const ColoredGraph& graph);

/// Minimum-cardinality cover of size <= k_max, lexicographically first among
/// minimum ones.
std::optional<Cover> min_set_cover(const SetSystem& system, std::size_t k_max);

/// One vertex per color, ordered by color; first in lexicographic order of
/// per-class vertex choices.
std::optional<std::vector<std::size_t>> has_multicolored_clique(const ColoredGraph& graph);

/// True iff every cover of size <= k_prime is exact.
bool check_scec_promise(const ScEcInstance& instance);

}  // namespace cnpkit
