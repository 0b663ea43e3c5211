#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond its value types, so agreement is evidence rather than
// tautology.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cnpkit/genome.hpp"
#include "cnpkit/reductions.hpp"

namespace oracle {

using cnpkit::Count;
using cnpkit::Event;
using cnpkit::EventSequence;
using Seq = std::vector<cnpkit::SymbolId>;

// Every event valid on a length-n string, in canonical order. Written out
// separately from cnpkit::for_each_event.
inline std::vector<Event> events_for(std::size_t n, bool with_dups = true) {
    std::vector<Event> out;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) out.push_back(cnpkit::Deletion{i, j});
    if (!with_dups) return out;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            for (std::size_t p = 0; p <= n; ++p)
                if (p < i || p >= j) out.push_back(cnpkit::Duplication{i, j, p});
    return out;
}

inline Seq apply(const Seq& s, const Event& e) {
    if (const auto* d = std::get_if<cnpkit::Deletion>(&e)) {
        Seq out(s.begin(), s.begin() + static_cast<long>(d->i - 1));
        out.insert(out.end(), s.begin() + static_cast<long>(d->j), s.end());
        return out;
    }
    const auto& u = std::get<cnpkit::Duplication>(e);
    Seq out(s.begin(), s.begin() + static_cast<long>(u.p));
    out.insert(out.end(), s.begin() + static_cast<long>(u.i - 1), s.begin() + static_cast<long>(u.j));
    out.insert(out.end(), s.begin() + static_cast<long>(u.p), s.end());
    return out;
}

inline std::vector<Count> counts(const Seq& s, std::size_t sigma) {
    std::vector<Count> c(sigma, 0);
    for (const auto x : s) ++c[x];
    return c;
}

struct Optimum {
    std::size_t distance;
    EventSequence witness;  // first in canonical order
};

// Plain iterative deepening over every sequence, no pruning of any kind.
inline std::optional<Optimum> shortest(const Seq& start, const std::function<bool(const Seq&)>& goal,
                                       std::size_t max_depth, bool with_dups = true) {
    EventSequence path;
    std::function<bool(const Seq&, std::size_t)> dfs = [&](const Seq& s, std::size_t left) {
        if (left == 0) return goal(s);
        for (const auto& e : events_for(s.size(), with_dups)) {
            path.push_back(e);
            if (dfs(apply(s, e), left - 1)) return true;
            path.pop_back();
        }
        return false;
    };
    for (std::size_t d = 0; d <= max_depth; ++d) {
        path.clear();
        if (dfs(start, d)) return Optimum{d, path};
    }
    return std::nullopt;
}

inline std::optional<Optimum> gcnp(const cnpkit::Genome& g, const cnpkit::Cnp& c, std::size_t max_depth,
                                   bool with_dups = true) {
    const auto sigma = g.alphabet()->size();
    return shortest(g.seq(), [&](const Seq& s) { return counts(s, sigma) == c.counts(); }, max_depth,
                    with_dups);
}

inline std::optional<Optimum> gg(const cnpkit::Genome& g, const cnpkit::Genome& h, std::size_t max_depth,
                                 bool with_dups = true) {
    return shortest(g.seq(), [&](const Seq& s) { return s == h.seq(); }, max_depth, with_dups);
}

// Maximum matching of adjacent pairs, by sorting pair codes.
inline Count adjacency_count(const Seq& a, const Seq& b) {
    const auto codes = [](const Seq& s) {
        std::vector<std::pair<cnpkit::SymbolId, cnpkit::SymbolId>> out;
        for (std::size_t k = 0; k + 1 < s.size(); ++k)
            out.emplace_back(std::min(s[k], s[k + 1]), std::max(s[k], s[k + 1]));
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto ca = codes(a), cb = codes(b);
    Count common = 0;
    std::size_t x = 0, y = 0;
    while (x < ca.size() && y < cb.size()) {
        if (ca[x] == cb[y]) {
            ++common, ++x, ++y;
        } else if (ca[x] < cb[y]) {
            ++x;
        } else {
            ++y;
        }
    }
    return common;
}

inline Seq sorted_string(const std::vector<Count>& c) {
    Seq s;
    for (std::size_t x = 0; x < c.size(); ++x) s.insert(s.end(), c[x], static_cast<cnpkit::SymbolId>(x));
    return s;
}

// Best adjacency count over every pair of permutations.
inline Count cnpc(const std::vector<Count>& c1, const std::vector<Count>& c2) {
    Count best = 0;
    Seq a = sorted_string(c1);
    do {
        Seq b = sorted_string(c2);
        do {
            best = std::max(best, adjacency_count(a, b));
        } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
    return best;
}

inline std::uint64_t set_mask(const cnpkit::NamedSet& s) {
    std::uint64_t m = 0;
    for (const auto e : s.elements) m |= std::uint64_t{1} << e;
    return m;
}

// Size of a smallest cover, over all 2^n subfamilies.
inline std::optional<std::size_t> min_cover_size(const cnpkit::SetSystem& sys) {
    const std::size_t n = sys.sets().size();
    const std::uint64_t full = (std::uint64_t{1} << sys.universe().size()) - 1;
    std::optional<std::size_t> best;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
        std::uint64_t u = 0;
        for (std::size_t s = 0; s < n; ++s)
            if (pick >> s & 1) u |= set_mask(sys.sets()[s]);
        const auto size = static_cast<std::size_t>(__builtin_popcountll(pick));
        if (u == full && (!best || size < *best)) best = size;
    }
    return best;
}

// True iff every subfamily of size <= k that covers is pairwise disjoint.
inline bool promise_holds(const cnpkit::SetSystem& sys, std::size_t k) {
    const std::size_t n = sys.sets().size();
    const std::uint64_t full = (std::uint64_t{1} << sys.universe().size()) - 1;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
        if (static_cast<std::size_t>(__builtin_popcountll(pick)) > k) continue;
        std::uint64_t u = 0;
        std::size_t total = 0;
        for (std::size_t s = 0; s < n; ++s)
            if (pick >> s & 1) {
                u |= set_mask(sys.sets()[s]);
                total += sys.sets()[s].elements.size();
            }
        if (u == full && total != sys.universe().size()) return false;
    }
    return true;
}

// Distinct non-empty subsets of the sets, as bitmasks.
inline std::size_t closure_size(const cnpkit::SetSystem& sys) {
    std::set<std::uint64_t> seen;
    for (const auto& s : sys.sets()) {
        const std::uint64_t m = set_mask(s);
        for (std::uint64_t sub = m; sub != 0; sub = (sub - 1) & m) seen.insert(sub);
    }
    return seen.size();
}

// Any k-subset of vertices with distinct colors and all pairs adjacent.
inline bool has_clique(const cnpkit::ColoredGraph& g) {
    const std::size_t n = g.vertices.size();
    std::set<std::pair<std::size_t, std::size_t>> adj;
    for (const auto& [u, v] : g.edges) adj.insert({std::min(u, v), std::max(u, v)});
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
        if (static_cast<std::size_t>(__builtin_popcountll(pick)) != g.k) continue;
        std::vector<std::size_t> vs;
        for (std::size_t v = 0; v < n; ++v)
            if (pick >> v & 1) vs.push_back(v);
        bool ok = true;
        for (std::size_t a = 0; a < vs.size() && ok; ++a)
            for (std::size_t b = a + 1; b < vs.size() && ok; ++b)
                ok = g.color[vs[a]] != g.color[vs[b]] && adj.count({vs[a], vs[b]});
        if (ok) return true;
    }
    return false;
}

}  // namespace oracle
