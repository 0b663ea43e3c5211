#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cnpkit/genome.hpp"
#include "cnpkit/reductions.hpp"

namespace testing {

// Kind of the E thrown by f, or "no error".
template <class E = cnpkit::Error, class F>
std::string kind_of(F&& f) {
    try {
        f();
    } catch (const E& e) {
        return e.kind();
    }
    return "no error";
}

// Alphabet of the first n lowercase letters.
inline cnpkit::AlphabetPtr letters(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.emplace_back(1, static_cast<char>('a' + k));
    return cnpkit::Alphabet::make(std::move(names));
}

inline cnpkit::Genome str(const cnpkit::AlphabetPtr& a, const std::string& s) {
    return cnpkit::Genome::from_chars(a, s);
}

inline cnpkit::Genome random_genome(std::mt19937_64& rng, const cnpkit::AlphabetPtr& a,
                                    std::size_t min_len, std::size_t max_len) {
    std::vector<cnpkit::SymbolId> seq(std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng));
    for (auto& s : seq)
        s = static_cast<cnpkit::SymbolId>(std::uniform_int_distribution<std::size_t>(0, a->size() - 1)(rng));
    return cnpkit::Genome(a, std::move(seq));
}

inline cnpkit::SetSystem three_set_system() {
    return cnpkit::SetSystem::from_names({"1", "2", "3", "4", "5"}, {{"S1", {"1", "2", "3"}},
                                                                      {"S2", {"1", "3", "4"}},
                                                                      {"S3", {"2", "3", "5"}}});
}

// Random system over m elements with `sets` random non-empty sets, every
// element covered.
inline cnpkit::SetSystem random_system(std::mt19937_64& rng, std::size_t m, std::size_t sets) {
    std::vector<std::string> universe;
    for (std::size_t e = 1; e <= m; ++e) universe.push_back(std::to_string(e));
    std::vector<cnpkit::NamedSet> out;
    std::vector<bool> covered(m, false);
    for (std::size_t s = 0; s < sets; ++s) {
        cnpkit::NamedSet set{"S" + std::to_string(s + 1), {}};
        while (set.elements.empty())
            for (std::size_t e = 0; e < m; ++e)
                if (rng() % 2) set.elements.push_back(e);
        for (const auto e : set.elements) covered[e] = true;
        out.push_back(std::move(set));
    }
    for (std::size_t e = 0; e < m; ++e)
        if (!covered[e]) out[rng() % sets].elements.push_back(e);
    for (auto& s : out) std::sort(s.elements.begin(), s.elements.end());
    return cnpkit::SetSystem(std::move(universe), std::move(out));
}

}  // namespace testing
