#include "cnpkit/cnpc.hpp"

#include <algorithm>
#include <set>

namespace cnpkit {
namespace {

void require_same(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (!same_alphabet(a, b)) throw alphabet_mismatch();
}

GuardError size_guard_exceeded(Count total, Count guard) {
    return GuardError("SizeGuardExceeded", "cnp_total",
                      "CNP total " + std::to_string(total) + " exceeds the size guard of " +
                          std::to_string(guard));
}

Count pair_count(std::size_t length) { return length > 0 ? length - 1 : 0; }

void append_runs(std::vector<SymbolId>& out, const std::vector<Count>& counts) {
    for (SymbolId s = 0; s < counts.size(); ++s) out.insert(out.end(), counts[s], s);
}

// Sorted codes of the adjacent pairs of `seq`, over an alphabet of size m.
std::vector<std::uint32_t> pair_codes(const std::vector<SymbolId>& seq, std::size_t m) {
    std::vector<std::uint32_t> codes;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        const auto lo = std::min(seq[k], seq[k + 1]);
        const auto hi = std::max(seq[k], seq[k + 1]);
        codes.push_back(static_cast<std::uint32_t>(lo * m + hi));
    }
    std::sort(codes.begin(), codes.end());
    return codes;
}

// Distinct adjacency multisets over all distinct permutations of the multiset.
std::set<std::vector<std::uint32_t>> all_pair_multisets(const Cnp& c) {
    std::vector<SymbolId> seq;
    append_runs(seq, c.counts());
    std::set<std::vector<std::uint32_t>> out;
    do {
        out.insert(pair_codes(seq, c.counts().size()));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

Count common_sorted(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    Count common = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++common;
            ++ia;
            ++ib;
        }
    }
    return common;
}

}  // namespace

AdjacencyMultiset::AdjacencyMultiset(const Genome& g) {
    const auto& seq = g.seq();
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        ++counts_[{std::min(seq[k], seq[k + 1]), std::max(seq[k], seq[k + 1])}];
        ++total_;
    }
}

Count AdjacencyMultiset::common_with(const AdjacencyMultiset& other) const {
    // Matches on distinct pair values never compete, so the maximum matching
    // takes the smaller multiplicity of every shared pair.
    Count common = 0;
    for (const auto& [pair, mult] : counts_) {
        const auto it = other.counts_.find(pair);
        if (it != other.counts_.end()) common += std::min(mult, it->second);
    }
    return common;
}

Count adjacencies(const Genome& a, const Genome& b) {
    require_same(a.alphabet(), b.alphabet());
    return AdjacencyMultiset(a).common_with(AdjacencyMultiset(b));
}

Breakpoints breakpoints(const Genome& a, const Genome& b) {
    const Count common = adjacencies(a, b);
    return {pair_count(a.size()) - common, pair_count(b.size()) - common};
}

Count breakpoint_distance(const Genome& a, const Genome& b) {
    const auto bp = breakpoints(a, b);
    return bp.in_first + bp.in_second;
}

Cnp max_common_subvector(const Cnp& c1, const Cnp& c2) {
    require_same(c1.alphabet(), c2.alphabet());
    std::vector<Count> v(c1.counts().size());
    for (std::size_t s = 0; s < v.size(); ++s) v[s] = std::min(c1.counts()[s], c2.counts()[s]);
    return Cnp(c1.alphabet(), std::move(v));
}

std::optional<TransferPair> find_transfer_pair(const Cnp& c1, const Cnp& c2, const Cnp& v) {
    require_same(c1.alphabet(), v.alphabet());
    if (!(max_common_subvector(c1, c2) == v))
        throw InputError("InvalidSubvector", "v is not the componentwise minimum of c1 and c2");
    std::optional<SymbolId> x;
    std::optional<SymbolId> y;
    for (SymbolId s = 0; s < v.counts().size(); ++s) {
        if (v[s] == 0) continue;
        const bool surplus1 = c1[s] > v[s];
        const bool surplus2 = c2[s] > v[s];
        if (surplus1 && surplus2)
            throw InternalInvariantViolation("symbol has surplus on both sides of the minimum");
        if (surplus1 && !x) x = s;
        if (surplus2 && !y) y = s;
    }
    if (!x || !y) return std::nullopt;
    return TransferPair{*x, *y};
}

CnpcSolution cnpc_solve(const Cnp& c1, const Cnp& c2, Count size_guard) {
    require_same(c1.alphabet(), c2.alphabet());
    if (c1.total() > size_guard) throw size_guard_exceeded(c1.total(), size_guard);
    if (c2.total() > size_guard) throw size_guard_exceeded(c2.total(), size_guard);

    const auto& alphabet = c1.alphabet();
    const Cnp v = max_common_subvector(c1, c2);
    std::vector<Count> left1(v.counts().size());
    std::vector<Count> left2(v.counts().size());
    for (std::size_t s = 0; s < left1.size(); ++s) {
        left1[s] = c1.counts()[s] - v.counts()[s];
        left2[s] = c2.counts()[s] - v.counts()[s];
    }

    std::vector<SymbolId> s1;
    std::vector<SymbolId> s2;
    if (v.total() == 0) {
        append_runs(s1, c1.counts());
        append_runs(s2, c2.counts());
    } else if (const auto pair = find_transfer_pair(c1, c2, v)) {
        // s(v) = x, rest of S(v) in alphabet order, y.
        std::vector<Count> middle = v.counts();
        --middle[pair->x];
        --middle[pair->y];
        std::vector<SymbolId> core{pair->x};
        append_runs(core, middle);
        core.push_back(pair->y);

        s1 = core;
        s1.push_back(pair->x);
        s2.push_back(pair->y);
        s2.insert(s2.end(), core.begin(), core.end());
        --left1[pair->x];
        --left2[pair->y];
        append_runs(s1, left1);
        append_runs(s2, left2);
    } else {
        append_runs(s1, v.counts());
        s2 = s1;
        append_runs(s1, left1);
        append_runs(s2, left2);
    }

    CnpcSolution out{Genome(alphabet, std::move(s1)), Genome(alphabet, std::move(s2)), 0,
                     v.total()};
    out.adjacencies = adjacencies(out.s1, out.s2);
    return out;
}

Count cnpc_brute_force(const Cnp& c1, const Cnp& c2) {
    require_same(c1.alphabet(), c2.alphabet());
    if (c1.total() > kBruteForceGuard) throw size_guard_exceeded(c1.total(), kBruteForceGuard);
    if (c2.total() > kBruteForceGuard) throw size_guard_exceeded(c2.total(), kBruteForceGuard);

    const auto first = all_pair_multisets(c1);
    const auto second = all_pair_multisets(c2);
    const Count ceiling = std::min(pair_count(c1.total()), pair_count(c2.total()));
    Count best = 0;
    for (const auto& a : first) {
        for (const auto& b : second) {
            best = std::max(best, common_sorted(a, b));
            if (best == ceiling) return best;
        }
    }
    return best;
}

}  // namespace cnpkit
