#include "cnpkit/mcng.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <unordered_map>

namespace cnpkit {
namespace {

using Seq = std::vector<SymbolId>;
using SeqView = std::span<const SymbolId>;

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
// Failed-state memo stops growing past this many entries.
constexpr std::size_t kMemoCap = 2'000'000;

struct SeqHash {
    std::size_t operator()(const Seq& s) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (const SymbolId x : s) {
            h ^= x + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

// Target: any genome with a given CNP.
class CnpGoal {
public:
    CnpGoal(const Cnp& target, EventMode mode)
        : target_(target.counts()), mode_(mode), counts_(target_.size()), window_(target_.size()),
          wanted_(target_.size()) {}

    bool matches(SeqView g) {
        tally(g);
        return counts_ == target_;
    }

    std::size_t lower_bound(SeqView g) {
        tally(g);
        bool over = false;
        bool under = false;
        for (std::size_t s = 0; s < target_.size(); ++s) {
            if (target_[s] > 0 && counts_[s] == 0) return kUnreachable;
            over |= counts_[s] > target_[s];
            under |= counts_[s] < target_[s];
        }
        if (under && mode_ == EventMode::deletions_only) return kUnreachable;
        return static_cast<std::size_t>(over) + static_cast<std::size_t>(under);
    }

    // First event, in canonical order, taking g straight to the target.
    std::optional<Event> first_single_event(SeqView g) {
        tally(g);
        bool over = false;
        bool under = false;
        Count length = 0;
        for (std::size_t s = 0; s < target_.size(); ++s) {
            if (counts_[s] > target_[s]) {
                over = true;
                wanted_[s] = counts_[s] - target_[s];
            } else {
                under |= counts_[s] < target_[s];
                wanted_[s] = target_[s] - counts_[s];
            }
            length += wanted_[s];
        }
        if (over == under) return std::nullopt;  // mixed, or already on target
        if (under && mode_ == EventMode::deletions_only) return std::nullopt;
        const auto i = find_window(g, static_cast<std::size_t>(length));
        if (!i) return std::nullopt;
        const std::size_t j = *i + static_cast<std::size_t>(length) - 1;
        if (over) return Event{Deletion{*i, j}};
        return Event{Duplication{*i, j, 0}};
    }

private:
    void tally(SeqView g) {
        std::fill(counts_.begin(), counts_.end(), 0);
        for (const SymbolId s : g) ++counts_[s];
    }

    // Smallest 1-based start of a window of `length` whose CNP equals wanted_.
    std::optional<std::size_t> find_window(SeqView g, std::size_t length) {
        if (length == 0 || length > g.size()) return std::nullopt;
        std::fill(window_.begin(), window_.end(), 0);
        for (std::size_t k = 0; k < length; ++k) ++window_[g[k]];
        for (std::size_t start = 0;; ++start) {
            if (window_ == wanted_) return start + 1;
            if (start + length >= g.size()) return std::nullopt;
            --window_[g[start]];
            ++window_[g[start + length]];
        }
    }

    std::vector<Count> target_;
    EventMode mode_;
    std::vector<Count> counts_;
    std::vector<Count> window_;
    std::vector<Count> wanted_;
};

// Target: one exact genome.
class StringGoal {
public:
    StringGoal(const Genome& target, EventMode mode)
        : target_(target.seq()), mode_(mode), target_counts_(cnp_of(target).counts()),
          counts_(target_counts_.size()) {}

    bool matches(SeqView g) const { return std::equal(g.begin(), g.end(), target_.begin(), target_.end()); }

    std::size_t lower_bound(SeqView g) {
        if (matches(g)) return 0;
        std::fill(counts_.begin(), counts_.end(), 0);
        for (const SymbolId s : g) ++counts_[s];
        bool over = false;
        bool under = false;
        for (std::size_t s = 0; s < counts_.size(); ++s) {
            if (target_counts_[s] > 0 && counts_[s] == 0) return kUnreachable;
            over |= counts_[s] > target_counts_[s];
            under |= counts_[s] < target_counts_[s];
        }
        if (under && mode_ == EventMode::deletions_only) return kUnreachable;
        std::size_t bound = static_cast<std::size_t>(over) + static_cast<std::size_t>(under);
        // Every event changes the length, so equal-length distinct strings need two.
        if (g.size() == target_.size()) bound = std::max<std::size_t>(bound, 2);
        return std::max<std::size_t>(bound, 1);
    }

    std::optional<Event> first_single_event(SeqView g) const {
        const std::size_t n = g.size();
        const std::size_t m = target_.size();
        std::size_t lcp = 0;
        while (lcp < n && lcp < m && g[lcp] == target_[lcp]) ++lcp;
        std::size_t lcs = 0;
        while (lcs < n && lcs < m && g[n - 1 - lcs] == target_[m - 1 - lcs]) ++lcs;

        if (m < n) {
            const std::size_t length = n - m;
            // Deleting [i, i+length-1] leaves g[1..i-1] + g[i+length..n].
            const std::size_t first = m > lcs ? m - lcs + 1 : 1;
            if (first <= lcp + 1) return Event{Deletion{first, first + length - 1}};
            return std::nullopt;
        }
        if (m > n && mode_ == EventMode::all_events) {
            const std::size_t length = m - n;
            if (length > n) return std::nullopt;
            for (std::size_t i = 1; i + length - 1 <= n; ++i) {
                const std::size_t j = i + length - 1;
                const auto fits = [&](std::size_t p) {
                    if (p > lcp || n - p > lcs) return false;
                    return std::equal(g.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                      g.begin() + static_cast<std::ptrdiff_t>(j),
                                      target_.begin() + static_cast<std::ptrdiff_t>(p));
                };
                for (std::size_t p = 0; p < i; ++p)
                    if (fits(p)) return Event{Duplication{i, j, p}};
                for (std::size_t p = j; p <= n; ++p)
                    if (fits(p)) return Event{Duplication{i, j, p}};
            }
        }
        return std::nullopt;
    }

private:
    Seq target_;
    EventMode mode_;
    std::vector<Count> target_counts_;
    std::vector<Count> counts_;
};

// Depth-bounded DFS over event sequences in canonical order. Prunes only
// states that provably cannot reach the goal in the remaining depth, so the
// first hit at the optimal depth is the canonical-order-first optimum.
template <class Goal>
class DepthBoundedSearch {
public:
    DepthBoundedSearch(Goal& goal, const SearchOptions& options, SearchStats& stats)
        : goal_(goal), with_duplications_(options.mode == EventMode::all_events),
          ceiling_(options.node_ceiling), stats_(stats) {}

    SearchResult run(const Seq& root, std::size_t budget) {
        buffers_.resize(budget + 1);
        for (std::size_t depth = 0; depth <= budget; ++depth) {
            path_.clear();
            if (dfs(root, depth)) return Found{depth, path_};
        }
        return ExceedsBudget{budget};
    }

private:
    bool dfs(const Seq& g, std::size_t remaining) {
        if (remaining == 0) return goal_.matches(g);
        if (goal_.lower_bound(g) > remaining) return false;
        expand();
        if (remaining == 1) {
            const auto e = goal_.first_single_event(g);
            if (!e) return false;
            path_.push_back(*e);
            return true;
        }
        if (const auto it = failed_.find(g); it != failed_.end() && it->second >= remaining)
            return false;

        Seq& child = buffers_[remaining];
        bool found = false;
        for_each_event(g.size(), with_duplications_, [&](const Event& e) {
            apply_event_into<SymbolId>(g, e, child);
            path_.push_back(e);
            if (dfs(child, remaining - 1)) {
                found = true;
                return false;
            }
            path_.pop_back();
            return true;
        });
        if (!found) {
            if (auto it = failed_.find(g); it != failed_.end())
                it->second = std::max(it->second, remaining);
            else if (failed_.size() < kMemoCap)
                failed_.emplace(g, remaining);
        }
        return found;
    }

    void expand() {
        if (++stats_.expansions > ceiling_) throw BudgetTooLarge(ceiling_);
    }

    Goal& goal_;
    bool with_duplications_;
    std::uint64_t ceiling_;
    SearchStats& stats_;
    std::vector<Seq> buffers_;
    std::unordered_map<Seq, std::size_t, SeqHash> failed_;
    EventSequence path_;
};

bool is_subsequence(const Seq& needle, const Seq& hay) {
    std::size_t k = 0;
    for (const SymbolId s : hay)
        if (k < needle.size() && needle[k] == s) ++k;
    return k == needle.size();
}

}  // namespace

bool feasible(const Genome& g, const Cnp& c, EventMode mode) {
    if (!same_alphabet(g.alphabet(), c.alphabet())) throw alphabet_mismatch();
    const Cnp have = cnp_of(g);
    for (SymbolId s = 0; s < c.counts().size(); ++s) {
        if (c[s] > 0 && have[s] == 0) return false;
        if (mode == EventMode::deletions_only && c[s] > have[s]) return false;
    }
    return true;
}

SearchResult d_gcnp_exact(const Genome& g, const Cnp& c, const SearchOptions& options,
                          SearchStats& stats) {
    if (!feasible(g, c, options.mode)) return Infeasible{};
    CnpGoal goal(c, options.mode);
    DepthBoundedSearch<CnpGoal> search(goal, options, stats);
    return search.run(g.seq(), options.budget);
}

SearchResult d_gcnp_exact(const Genome& g, const Cnp& c, const SearchOptions& options) {
    SearchStats stats;
    return d_gcnp_exact(g, c, options, stats);
}

SearchResult d_gg_exact(const Genome& g, const Genome& h, const SearchOptions& options,
                        SearchStats& stats) {
    if (!same_alphabet(g.alphabet(), h.alphabet())) throw alphabet_mismatch();
    if (!feasible(g, cnp_of(h), options.mode)) return Infeasible{};
    if (options.mode == EventMode::deletions_only && !is_subsequence(h.seq(), g.seq()))
        return Infeasible{};
    StringGoal goal(h, options.mode);
    DepthBoundedSearch<StringGoal> search(goal, options, stats);
    return search.run(g.seq(), options.budget);
}

SearchResult d_gg_exact(const Genome& g, const Genome& h, const SearchOptions& options) {
    SearchStats stats;
    return d_gg_exact(g, h, options, stats);
}

}  // namespace cnpkit
