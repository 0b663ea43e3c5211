#pragma once

// Exact genome-to-CNP and genome-to-genome distances by iterative-deepening
// enumeration of event sequences. Exponential by nature; meant for small
// instances and as an oracle for the reductions.

#include <cstdint>
#include <variant>

#include "cnpkit/genome.hpp"

namespace cnpkit {

inline constexpr std::uint64_t kDefaultNodeCeiling = 10'000'000;

struct McngInstance {
    Genome genome;
    Cnp target;
};

enum class EventMode { all_events, deletions_only };

struct SearchOptions {
    std::size_t budget = 4;
    EventMode mode = EventMode::all_events;
    /// Maximum number of expanded nodes before BudgetTooLarge is raised.
    std::uint64_t node_ceiling = kDefaultNodeCeiling;
};

struct Found {
    std::size_t distance = 0;
    EventSequence witness;
    bool operator==(const Found&) const = default;
};
struct Infeasible {
    bool operator==(const Infeasible&) const = default;
};
struct ExceedsBudget {
    std::size_t budget = 0;
    bool operator==(const ExceedsBudget&) const = default;
};

using SearchResult = std::variant<Found, Infeasible, ExceedsBudget>;

/// Raised when the node ceiling is hit before the search could conclude.
class BudgetTooLarge : public GuardError {
public:
    explicit BudgetTooLarge(std::uint64_t ceiling)
        : GuardError("BudgetTooLarge", "node_ceiling",
                     "search exceeded the node ceiling of " + std::to_string(ceiling) +
                         " expansions"),
          ceiling_(ceiling) {}
    std::uint64_t ceiling() const noexcept { return ceiling_; }

private:
    std::uint64_t ceiling_;
};

/// c(s) > 0 implies s occurs in g. With deletions only, additionally
/// c <= cnp(g) componentwise.
bool feasible(const Genome& g, const Cnp& c, EventMode mode = EventMode::all_events);

/// Minimum number of events turning g into some genome with CNP c. The
/// witness is the first optimum in canonical order (deletions before
/// duplications, each by (i, j, p)).
SearchResult d_gcnp_exact(const Genome& g, const Cnp& c, const SearchOptions& options = {});

/// Minimum number of events turning g into exactly h. The mode field of
/// `options` is honoured as for d_gcnp_exact.
SearchResult d_gg_exact(const Genome& g, const Genome& h, const SearchOptions& options = {});

struct SearchStats {
    std::uint64_t expansions = 0;
};

/// Same as above, also reporting search statistics.
SearchResult d_gcnp_exact(const Genome& g, const Cnp& c, const SearchOptions& options,
                          SearchStats& stats);
SearchResult d_gg_exact(const Genome& g, const Genome& h, const SearchOptions& options,
                        SearchStats& stats);

}  // namespace cnpkit
