#include "cnpkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "cnpkit/cnpc.hpp"
#include "cnpkit/json_io.hpp"
#include "cnpkit/reductions.hpp"

namespace cnpkit {
namespace {

using io::Json;

// Per-instance result, merged in index order so reports do not depend on
// scheduling.
struct Outcome {
    std::size_t cases = 0;
    bool skipped = false;
    std::vector<CheckFailure> failures;

    void fail(const Json& instance, std::string expected, std::string got) {
        failures.push_back({instance.dump(), std::move(expected), std::move(got)});
    }
};

template <class Body>
CheckReport sweep(std::string name, std::size_t n, const CheckConfig& config, Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Outcome> outcomes(n);
    for_each_index(n, config.execution, [&](std::size_t k) { body(k, outcomes[k]); });

    CheckReport report;
    report.name = std::move(name);
    report.attempted = n;
    for (auto& o : outcomes) {
        report.cases += o.cases;
        if (o.skipped) ++report.skipped;
        for (auto& f : o.failures) report.failures.push_back(std::move(f));
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(trial)));
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string describe(const SearchResult& r) { return io::to_json(r).dump(); }

std::string cover_str(const SetSystem& system, const Cover& cover) {
    return io::cover_to_json(system, cover).dump();
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= n; ++k) out.push_back(prefix + std::to_string(k));
    return out;
}

// ---------------------------------------------------------------- lemma2

struct PlantedSystem {
    SetSystem system;
    Cover planted;  // sorted
};

PlantedSystem planted_system(std::mt19937_64& rng) {
    const std::size_t m = uniform(rng, 0, 6);
    std::vector<std::size_t> label(m);
    for (auto& l : label) l = uniform(rng, 0, m - 1);

    std::vector<std::vector<std::size_t>> blocks(m);
    for (std::size_t e = 0; e < m; ++e) blocks[label[e]].push_back(e);
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    const std::size_t n_planted = blocks.size();

    const std::size_t extra = m == 0 ? 0 : uniform(rng, 0, 3);
    for (std::size_t s = 0; s < extra; ++s) {
        std::vector<std::size_t> set;
        while (set.empty())
            for (std::size_t e = 0; e < m; ++e)
                if (uniform(rng, 0, 1) == 1) set.push_back(e);
        blocks.push_back(std::move(set));
    }

    std::vector<std::size_t> order(blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<NamedSet> sets;
    Cover planted;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        sets.push_back({"S" + std::to_string(pos + 1), blocks[order[pos]]});
        if (order[pos] < n_planted) planted.push_back(pos);
    }
    return {SetSystem(numbered("", m), std::move(sets)), planted};
}

// ------------------------------------------------------------ extraction

// Ordered tuples of 1..3 non-empty subsets of {1..m}, m = 1..4, covering
// the universe.
std::vector<SetSystem> small_reduction_inputs() {
    std::vector<SetSystem> out;
    for (std::size_t m = 1; m <= 4; ++m) {
        const std::uint32_t full = (1u << m) - 1;
        const auto make = [&](const std::vector<std::uint32_t>& masks) {
            std::vector<NamedSet> sets;
            for (std::size_t s = 0; s < masks.size(); ++s) {
                NamedSet set{"S" + std::to_string(s + 1), {}};
                for (std::size_t e = 0; e < m; ++e)
                    if (masks[s] & (1u << e)) set.elements.push_back(e);
                sets.push_back(std::move(set));
            }
            out.emplace_back(numbered("", m), std::move(sets));
        };
        for (std::size_t count = 1; count <= 3; ++count) {
            std::vector<std::uint32_t> masks(count, 1);
            while (true) {
                std::uint32_t u = 0;
                for (const auto mk : masks) u |= mk;
                if (u == full) make(masks);
                std::size_t d = count;
                while (d > 0 && masks[d - 1] == full) masks[--d] = 1;
                if (d == 0) break;
                ++masks[d - 1];
            }
        }
    }
    return out;
}

// Calls visit(event) for every event turning `seq` into a genome with
// counts `target`. Only one event is ever needed: a deletion removes an
// exact window surplus, a duplication copies an exact window deficit.
template <class Visit>
void closing_events(const std::vector<SymbolId>& seq, const std::vector<Count>& target,
                    Visit&& visit) {
    std::vector<Count> have(target.size(), 0);
    for (const auto s : seq) ++have[s];
    bool surplus = false, deficit = false;
    std::vector<Count> window(target.size(), 0);
    Count length = 0;
    for (std::size_t s = 0; s < target.size(); ++s) {
        if (have[s] > target[s]) {
            surplus = true;
            window[s] = have[s] - target[s];
        } else if (have[s] < target[s]) {
            deficit = true;
            window[s] = target[s] - have[s];
        }
        length += window[s];
    }
    if (surplus == deficit || length > seq.size()) return;

    const std::size_t n = seq.size();
    std::vector<Count> current(target.size(), 0);
    for (std::size_t k = 0; k < length; ++k) ++current[seq[k]];
    for (std::size_t i = 1; i + length - 1 <= n; ++i) {
        if (i > 1) {
            --current[seq[i - 2]];
            ++current[seq[i + length - 2]];
        }
        if (current != window) continue;
        const std::size_t j = i + length - 1;
        if (surplus) {
            visit(Event{Deletion{i, j}});
        } else {
            for (std::size_t p = 0; p < i; ++p) visit(Event{Duplication{i, j, p}});
            for (std::size_t p = j; p <= n; ++p) visit(Event{Duplication{i, j, p}});
        }
    }
}

void check_extracted(const McngInstance& instance, const SetSystem& system,
                     const EventSequence& events, Outcome& out) {
    ++out.cases;
    const auto record = [&](const char* extractor, const std::string& got) {
        out.fail(Json{{"system", io::to_json(system)},
                      {"events", io::to_json(events)},
                      {"extractor", extractor}},
                 "cover of size <= " + std::to_string(events.size()), got);
    };
    const auto run = [&](const char* extractor, auto&& extract) {
        try {
            const Cover cover = extract();
            if (!is_cover(system, cover) || cover.size() > events.size())
                record(extractor, cover_str(system, cover));
        } catch (const Error& e) {
            record(extractor, e.kind() + ": " + e.what());
        }
    };
    run("general", [&] { return extract_cover_general(instance, system, events); });
    if (std::all_of(events.begin(), events.end(), is_deletion))
        run("deletions", [&] { return extract_cover_deletions(instance, system, events); });
}

// ----------------------------------------------------------- alternation

struct AlternationCase {
    std::size_t n;
    std::vector<std::vector<SymbolId>> blocks;  // Y_0 .. Y_n as y-offsets (0/1)
};

// Every Y string over {y1, y2} with length in [lo, 2].
std::vector<std::vector<SymbolId>> y_strings(std::size_t lo) {
    std::vector<std::vector<SymbolId>> out;
    if (lo == 0) out.push_back({});
    for (SymbolId a = 0; a < 2; ++a) out.push_back({a});
    for (SymbolId a = 0; a < 2; ++a)
        for (SymbolId b = 0; b < 2; ++b) out.push_back({a, b});
    return out;
}

std::vector<AlternationCase> alternation_cases(std::size_t n_max) {
    std::vector<AlternationCase> out;
    const auto y0 = y_strings(0);
    const auto yi = y_strings(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<std::size_t> pick(n + 1, 0);
        while (true) {
            AlternationCase c{n, {y0[pick[0]]}};
            for (std::size_t b = 1; b <= n; ++b) c.blocks.push_back(yi[pick[b]]);
            out.push_back(std::move(c));
            std::size_t d = n + 1;
            while (d > 0 && pick[d - 1] + 1 == (d == 1 ? y0.size() : yi.size())) pick[--d] = 0;
            if (d == 0) break;
            ++pick[d - 1];
        }
    }
    return out;
}

// ----------------------------------------------------------- propositions

struct TinyInstance {
    Genome genome;
    Genome derived;
};

TinyInstance tiny_instance(std::mt19937_64& rng) {
    const std::size_t sigma = uniform(rng, 2, 3);
    std::vector<std::string> names{"a", "b", "c"};
    names.resize(sigma);
    auto alphabet = Alphabet::make(std::move(names));
    std::vector<SymbolId> seq(uniform(rng, 1, 5));
    for (auto& s : seq) s = static_cast<SymbolId>(uniform(rng, 0, sigma - 1));
    Genome g(alphabet, seq);

    Genome derived = g;
    const std::size_t n_events = uniform(rng, 0, 2);
    for (std::size_t k = 0; k < n_events && !derived.empty(); ++k) {
        std::vector<Event> options;
        for_each_event(derived.size(), true, [&](const Event& e) {
            options.push_back(e);
            return true;
        });
        derived = apply_event(derived, options[uniform(rng, 0, options.size() - 1)]);
    }
    return {std::move(g), std::move(derived)};
}

// ----------------------------------------------------------------- cnpc

std::vector<std::vector<Count>> bounded_vectors(std::size_t dims, Count max_total) {
    std::vector<std::vector<Count>> out;
    std::vector<Count> v(dims, 0);
    const auto rec = [&](auto&& self, std::size_t d, Count left) -> void {
        if (d == dims) {
            out.push_back(v);
            return;
        }
        for (Count x = 0; x <= left; ++x) {
            v[d] = x;
            self(self, d + 1, left - x);
        }
        v[d] = 0;
    };
    rec(rec, 0, max_total);
    return out;
}

// ----------------------------------------------------------------- W[1]

// Canonical up to relabeling: class sizes are nondecreasing (empty classes
// allowed), and every subset of cross-class vertex pairs is an edge set.
std::vector<ColoredGraph> colored_graphs(std::size_t vertex_max) {
    std::vector<ColoredGraph> out;
    for (std::size_t k = 2; k <= 3; ++k) {
        std::vector<std::size_t> sizes(k, 0);
        const auto emit = [&] {
            ColoredGraph base;
            base.k = k;
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t v = 0; v < sizes[c]; ++v) {
                    base.vertices.push_back(std::string(1, static_cast<char>('a' + c)) +
                                            std::to_string(v + 1));
                    base.color.push_back(c + 1);
                }
            std::vector<std::pair<std::size_t, std::size_t>> cross;
            for (std::size_t u = 0; u < base.vertices.size(); ++u)
                for (std::size_t v = u + 1; v < base.vertices.size(); ++v)
                    if (base.color[u] != base.color[v]) cross.emplace_back(u, v);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cross.size()); ++mask) {
                ColoredGraph g = base;
                for (std::size_t e = 0; e < cross.size(); ++e)
                    if (mask & (std::uint64_t{1} << e)) g.edges.push_back(cross[e]);
                out.push_back(std::move(g));
            }
        };
        const auto rec = [&](auto&& self, std::size_t c, std::size_t lo, std::size_t left) -> void {
            if (c == k) {
                emit();
                return;
            }
            for (std::size_t s = lo; s <= left; ++s) {
                sizes[c] = s;
                self(self, c + 1, s, left - s);
            }
        };
        rec(rec, 0, 0, vertex_max);
    }
    return out;
}

Cover clique_cover(const ColoredGraph& graph, const SetSystem& system,
                   const std::vector<std::size_t>& clique) {
    Cover cover;
    for (const auto v : clique) cover.push_back(system.set_index("V:" + graph.vertices[v]));
    for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b)
            cover.push_back(system.set_index("E:" + graph.vertices[clique[a]] + ":" +
                                             graph.vertices[clique[b]]));
    std::sort(cover.begin(), cover.end());
    return cover;
}

GuardError precondition(const std::string& what) {
    return GuardError("CheckTooLarge", "check_parameters", what);
}

}  // namespace

CheckReport check_lemma2(std::size_t trials, std::uint64_t seed, const CheckConfig& config) {
    return sweep("lemma2", trials, config, [&](std::size_t trial, Outcome& out) {
        auto rng = trial_rng(seed, trial);
        const auto [system, planted] = planted_system(rng);
        const Json where{{"seed", seed}, {"trial", trial}, {"system", io::to_json(system)},
                         {"planted", io::cover_to_json(system, planted)}};
        out.cases = 1;
        try {
            const McngInstance instance = sc_to_mcng(system);
            const EventSequence events = exact_cover_deletions(system, planted);
            if (events.size() != planted.size())
                out.fail(where, std::to_string(planted.size()) + " deletions",
                         std::to_string(events.size()));
            const Cnp reached = cnp_of(apply_sequence(instance.genome, events));
            if (!(reached == instance.target))
                out.fail(where, instance.target.str(), reached.str());

            const Cover back = extract_cover_deletions(instance, system, events);
            if (back != planted)
                out.fail(where, cover_str(system, planted), cover_str(system, back));
            const Cover general = extract_cover_general(instance, system, events);
            if (!is_cover(system, general) || general.size() > planted.size())
                out.fail(where, "cover of size <= " + std::to_string(planted.size()),
                         cover_str(system, general));
        } catch (const Error& e) {
            out.fail(where, "no error", e.kind() + ": " + e.what());
        }
    });
}

CheckReport check_extraction(std::size_t budget, const CheckConfig& config) {
    if (budget > kMaxExtractionBudget)
        throw precondition("extraction budget " + std::to_string(budget) + " exceeds " +
                           std::to_string(kMaxExtractionBudget));
    const auto systems = small_reduction_inputs();
    return sweep("extraction", systems.size(), config, [&](std::size_t k, Outcome& out) {
        const SetSystem& system = systems[k];
        const McngInstance instance = sc_to_mcng(system);
        const auto& target = instance.target.counts();
        const auto& seq = instance.genome.seq();

        if (cnp_of(instance.genome) == instance.target) check_extracted(instance, system, {}, out);
        if (budget == 0) return;

        std::vector<SymbolId> next;
        std::vector<Count> counts(target.size());
        for_each_event(seq.size(), true, [&](const Event& first) {
            apply_event_into<SymbolId>(seq, first, next);
            std::fill(counts.begin(), counts.end(), 0);
            for (const auto s : next) ++counts[s];
            if (counts == target) check_extracted(instance, system, {first}, out);
            if (budget >= 2)
                closing_events(next, target, [&](const Event& second) {
                    check_extracted(instance, system, {first, second}, out);
                });
            return true;
        });
    });
}

CheckReport check_alternation(std::size_t n_max, const CheckConfig& config) {
    if (n_max > kMaxAlternationN)
        throw precondition("alternation n " + std::to_string(n_max) + " exceeds " +
                           std::to_string(kMaxAlternationN));
    const auto cases = alternation_cases(n_max);
    return sweep("alternation", cases.size(), config, [&](std::size_t k, Outcome& out) {
        const AlternationCase& c = cases[k];
        auto names = numbered("x", c.n);
        names.push_back("y1");
        names.push_back("y2");
        auto alphabet = Alphabet::make(names);
        const auto y = [&](SymbolId off) { return static_cast<SymbolId>(c.n + off); };

        std::vector<SymbolId> seq;
        for (const auto s : c.blocks[0]) seq.push_back(y(s));
        for (std::size_t i = 1; i <= c.n; ++i) {
            seq.push_back(static_cast<SymbolId>(i - 1));
            for (const auto s : c.blocks[i]) seq.push_back(y(s));
        }
        const Genome g(alphabet, seq);
        std::vector<Count> counts(alphabet->size(), 0);
        for (std::size_t i = 0; i < c.n; ++i) counts[i] = 1;
        const Cnp target(alphabet, counts);
        const Json where = io::to_json(McngInstance{g, target});

        try {
            SearchOptions below;
            below.budget = c.n - 1;
            below.node_ceiling = config.node_ceiling;
            ++out.cases;
            const SearchResult lower = d_gcnp_exact(g, target, below);
            if (!std::holds_alternative<ExceedsBudget>(lower))
                out.fail(where, "distance >= " + std::to_string(c.n), describe(lower));
            if (c.blocks[0].empty()) {
                SearchOptions at = below;
                at.budget = c.n;
                ++out.cases;
                const SearchResult exact = d_gcnp_exact(g, target, at);
                const auto* found = std::get_if<Found>(&exact);
                if (!found || found->distance != c.n)
                    out.fail(where, "distance " + std::to_string(c.n), describe(exact));
            }
        } catch (const BudgetTooLarge&) {
            out.skipped = true;
        }
    });
}

CheckReport check_propositions(std::size_t trials, std::uint64_t seed, const CheckConfig& config) {
    return sweep("propositions", trials, config, [&](std::size_t trial, Outcome& out) {
        auto rng = trial_rng(seed, trial);
        const auto [g, derived] = tiny_instance(rng);
        const Cnp c = cnp_of(derived);
        const Json where{{"seed", seed},
                         {"trial", trial},
                         {"genome", io::to_json(g)},
                         {"derived", io::to_json(derived)}};
        SearchOptions options;
        options.budget = 2;
        options.node_ceiling = config.node_ceiling;
        try {
            // Removing a symbol never increases the distance to the CNP.
            ++out.cases;
            const SearchResult base = d_gcnp_exact(g, c, options);
            const auto* found = std::get_if<Found>(&base);
            if (!found) {
                out.fail(where, "distance <= 2", describe(base));
                return;
            }
            for (const auto& s : g.alphabet()->symbols()) {
                SearchOptions within = options;
                within.budget = found->distance;
                ++out.cases;
                const SearchResult reduced =
                    d_gcnp_exact(remove_symbol(g, s), zero_symbol(c, s), within);
                if (!std::holds_alternative<Found>(reduced))
                    out.fail(Json{{"proposition", 1}, {"instance", where}, {"symbol", s}},
                             "distance <= " + std::to_string(found->distance), describe(reduced));
            }

            // Rewriting an unimportant position never increases d_GG.
            ++out.cases;
            const SearchResult gg = d_gg_exact(g, derived, options);
            const auto* witness = std::get_if<Found>(&gg);
            if (!witness) {
                out.fail(where, "d_GG <= 2", describe(gg));
                return;
            }
            const auto alive = surviving_origins(g, witness->witness);
            SearchOptions within = options;
            within.budget = witness->distance;
            for (std::size_t p = 1; p <= g.size(); ++p) {
                if (std::binary_search(alive.begin(), alive.end(), p)) continue;
                for (SymbolId h = 0; h < g.alphabet()->size(); ++h) {
                    if (h == g.at(p)) continue;
                    auto seq = g.seq();
                    seq[p - 1] = h;
                    const Genome rewritten(g.alphabet(), std::move(seq));
                    ++out.cases;
                    const SearchResult r = d_gg_exact(rewritten, derived, within);
                    if (!std::holds_alternative<Found>(r))
                        out.fail(Json{{"proposition", 2},
                                      {"instance", where},
                                      {"position", p},
                                      {"symbol", g.alphabet()->name(h)}},
                                 "d_GG <= " + std::to_string(witness->distance), describe(r));
                }
            }
        } catch (const BudgetTooLarge&) {
            out.skipped = true;
        }
    });
}

CheckReport check_cnpc(std::size_t max_total, const CheckConfig& config) {
    if (max_total > kMaxCnpcTotal)
        throw precondition("cnpc total " + std::to_string(max_total) + " exceeds " +
                           std::to_string(kMaxCnpcTotal));
    struct Pair {
        AlphabetPtr alphabet;
        const std::vector<Count>* first;
        const std::vector<Count>* second;
    };
    std::vector<std::vector<std::vector<Count>>> vectors;
    std::vector<AlphabetPtr> alphabets;
    for (std::size_t dims = 1; dims <= kCnpcMaxAlphabet; ++dims) {
        vectors.push_back(bounded_vectors(dims, max_total));
        std::vector<std::string> names;
        for (std::size_t s = 0; s < dims; ++s) names.emplace_back(1, static_cast<char>('a' + s));
        alphabets.push_back(Alphabet::make(names));
    }
    std::vector<Pair> pairs;
    for (std::size_t d = 0; d < vectors.size(); ++d)
        for (const auto& a : vectors[d])
            for (const auto& b : vectors[d]) pairs.push_back({alphabets[d], &a, &b});

    return sweep("cnpc", pairs.size(), config, [&](std::size_t k, Outcome& out) {
        const Cnp c1(pairs[k].alphabet, *pairs[k].first);
        const Cnp c2(pairs[k].alphabet, *pairs[k].second);
        const Json where{{"c1", io::to_json(c1)}, {"c2", io::to_json(c2)}};
        out.cases = 1;
        try {
            const CnpcSolution sol = cnpc_solve(c1, c2);
            const Count best = cnpc_brute_force(c1, c2);
            if (sol.adjacencies != best)
                out.fail(where, "optimum " + std::to_string(best), std::to_string(sol.adjacencies));
            if (adjacencies(sol.s1, sol.s2) != sol.adjacencies)
                out.fail(where, "reported count " + std::to_string(sol.adjacencies),
                         "recount " + std::to_string(adjacencies(sol.s1, sol.s2)));
            if (!(cnp_of(sol.s1) == c1) || !(cnp_of(sol.s2) == c2))
                out.fail(where, c1.str() + " " + c2.str(),
                         cnp_of(sol.s1).str() + " " + cnp_of(sol.s2).str());

            const Cnp v = max_common_subvector(c1, c2);
            const Count n_star = v.total();
            Count band = 0;
            if (n_star > 0) band = find_transfer_pair(c1, c2, v) ? n_star : n_star - 1;
            if (sol.n_star != n_star || sol.adjacencies != band)
                out.fail(where, "n* " + std::to_string(n_star) + ", value " + std::to_string(band),
                         "n* " + std::to_string(sol.n_star) + ", value " +
                             std::to_string(sol.adjacencies));
        } catch (const Error& e) {
            out.fail(where, "no error", e.kind() + ": " + e.what());
        }
    });
}

CheckReport check_w1_reduction(std::size_t vertex_max, const CheckConfig& config) {
    if (vertex_max > kMaxW1Vertices)
        throw precondition("vertex count " + std::to_string(vertex_max) + " exceeds " +
                           std::to_string(kMaxW1Vertices));
    const auto graphs = colored_graphs(vertex_max);
    return sweep("w1", graphs.size(), config, [&](std::size_t k, Outcome& out) {
        const ColoredGraph& graph = graphs[k];
        const Json where = io::to_json(graph);
        out.cases = 1;
        try {
            const ScEcInstance inst = mcq_to_scec(graph);
            const auto clique = has_multicolored_clique(graph);
            const auto cover = min_set_cover(inst.system, inst.k_prime);
            if (clique.has_value() != cover.has_value())
                out.fail(where, clique ? "cover of size k'" : "no cover of size k'",
                         cover ? cover_str(inst.system, *cover) : "none");
            if (clique) {
                const Cover induced = clique_cover(graph, inst.system, *clique);
                if (induced.size() != inst.k_prime || !is_exact_cover(inst.system, induced))
                    out.fail(where, "exact cover of size " + std::to_string(inst.k_prime),
                             cover_str(inst.system, induced));
            }
            if (!check_scec_promise(inst))
                out.fail(where, "every cover of size <= k' is exact", "non-exact cover found");
        } catch (const Error& e) {
            out.fail(where, "no error", e.kind() + ": " + e.what());
        }
    });
}

std::vector<CheckReport> run_all_checks(const SuiteOptions& options, const CheckConfig& config) {
    std::vector<CheckReport> reports;
    reports.push_back(check_alternation(options.alternation_n, config));
    reports.push_back(check_cnpc(options.cnpc_total, config));
    reports.push_back(check_extraction(options.extraction_budget, config));
    reports.push_back(check_lemma2(options.lemma2_trials, options.seed, config));
    reports.push_back(check_propositions(options.proposition_trials, options.seed, config));
    reports.push_back(check_w1_reduction(options.w1_vertices, config));
    return reports;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"alternation", "cnpc",         "extraction",
                                                "lemma2",      "propositions", "w1"};
    return names;
}

}  // namespace cnpkit
