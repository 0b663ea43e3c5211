#pragma once

// Copy Number Profile Conforming under breakpoint distance: adjacency and
// breakpoint metrics, the maximum common sub-vector and the linear-time
// construction of two strings realising the optimum, plus a brute-force
// oracle over all multiset permutations.

#include <map>
#include <optional>
#include <utility>

#include "cnpkit/genome.hpp"

namespace cnpkit {

/// Multiplicity of each unordered adjacent pair {x, y} (x <= y) of a string.
class AdjacencyMultiset {
public:
    explicit AdjacencyMultiset(const Genome& g);

    const std::map<std::pair<SymbolId, SymbolId>, Count>& counts() const noexcept {
        return counts_;
    }
    Count total() const noexcept { return total_; }

    /// Size of a maximum matching between the two pair multisets.
    Count common_with(const AdjacencyMultiset& other) const;

private:
    std::map<std::pair<SymbolId, SymbolId>, Count> counts_;
    Count total_ = 0;
};

Count adjacencies(const Genome& a, const Genome& b);

struct Breakpoints {
    Count in_first = 0;
    Count in_second = 0;
    bool operator==(const Breakpoints&) const = default;
};

Breakpoints breakpoints(const Genome& a, const Genome& b);
Count breakpoint_distance(const Genome& a, const Genome& b);

/// Componentwise minimum.
Cnp max_common_subvector(const Cnp& c1, const Cnp& c2);

struct TransferPair {
    SymbolId x;  // surplus in c1
    SymbolId y;  // surplus in c2
    bool operator==(const TransferPair&) const = default;
};

/// Smallest x with v(x) >= 1 and c1(x) > v(x), and smallest y with
/// v(y) >= 1 and c2(y) > v(y). Throws InvalidSubvector unless v = min(c1, c2).
std::optional<TransferPair> find_transfer_pair(const Cnp& c1, const Cnp& c2, const Cnp& v);

inline constexpr Count kCnpcSizeGuard = 1'000'000;
inline constexpr Count kBruteForceGuard = 8;

struct CnpcSolution {
    Genome s1;
    Genome s2;
    Count adjacencies = 0;
    Count n_star = 0;
};

/// Throws SizeGuardExceeded when either side's total exceeds `size_guard`.
CnpcSolution cnpc_solve(const Cnp& c1, const Cnp& c2, Count size_guard = kCnpcSizeGuard);

/// Maximum adjacencies over every pair of strings with the given CNPs.
/// Totals are capped at 8 per side.
Count cnpc_brute_force(const Cnp& c1, const Cnp& c2);

}  // namespace cnpkit
