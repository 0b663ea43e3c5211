#include "cnpkit/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cnpkit {
namespace {

// Fixed-width bitset over universe indices.
class ElementMask {
public:
    explicit ElementMask(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

    static ElementMask of(std::size_t bits, const std::vector<std::size_t>& elements) {
        ElementMask m(bits);
        for (const auto e : elements) m.words_[e / 64] |= std::uint64_t{1} << (e % 64);
        return m;
    }
    static ElementMask full(std::size_t bits) {
        ElementMask m(bits);
        for (std::size_t e = 0; e < bits; ++e) m.words_[e / 64] |= std::uint64_t{1} << (e % 64);
        return m;
    }

    ElementMask& operator|=(const ElementMask& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    bool intersects(const ElementMask& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }
    bool operator==(const ElementMask&) const = default;

private:
    std::vector<std::uint64_t> words_;
};

std::vector<ElementMask> set_masks(const SetSystem& system) {
    std::vector<ElementMask> masks;
    masks.reserve(system.sets().size());
    for (const auto& s : system.sets())
        masks.push_back(ElementMask::of(system.universe().size(), s.elements));
    return masks;
}

void check_indices(const SetSystem& system, const Cover& cover) {
    for (const auto idx : cover)
        if (idx >= system.sets().size())
            throw InputError("MalformedInput", "cover refers to set #" + std::to_string(idx) +
                                                   " of " + std::to_string(system.sets().size()));
}

GuardError too_many_sets(std::size_t n) {
    return GuardError("TooManySets", "exhaustive_sets",
                      std::to_string(n) + " sets exceed the exhaustive-search guard of " +
                          std::to_string(kMaxExhaustiveSets));
}

// Set index owning each original genome position, separators included.
std::vector<std::size_t> block_owner(const SetSystem& system) {
    std::vector<std::size_t> owner{0};  // index 0 unused (1-based positions)
    for (std::size_t s = 0; s < system.sets().size(); ++s)
        owner.insert(owner.end(), system.sets()[s].elements.size() + 1, s);
    return owner;
}

void require_reduced_instance(const McngInstance& instance, const SetSystem& system) {
    const McngInstance expected = sc_to_mcng(system);
    if (!(expected.genome == instance.genome) || !(expected.target == instance.target))
        throw InputError("InstanceMismatch",
                         "instance is not the set-cover reduction of the given system");
}

void require_solution(const McngInstance& instance, const EventSequence& events) {
    if (!(cnp_of(apply_sequence(instance.genome, events)) == instance.target))
        throw InputError("NotASolution", "event sequence does not reach the target CNP");
}

Cover sorted_unique(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string join_names(const SetSystem& system, const std::vector<std::size_t>& elements) {
    std::string out = "{";
    for (std::size_t k = 0; k < elements.size(); ++k) {
        if (k > 0) out += ',';
        out += system.universe()[elements[k]];
    }
    return out + "}";
}

}  // namespace

SetSystem::SetSystem(std::vector<std::string> universe, std::vector<NamedSet> sets)
    : universe_(std::move(universe)), sets_(std::move(sets)) {
    std::set<std::string> seen(universe_.begin(), universe_.end());
    if (seen.size() != universe_.size())
        throw InputError("MalformedInput", "duplicate universe element");
    std::set<std::string> names;
    for (auto& s : sets_) {
        if (!names.insert(s.name).second)
            throw InputError("MalformedInput", "duplicate set name '" + s.name + "'");
        if (s.elements.empty())
            throw InputError("MalformedInput", "set '" + s.name + "' is empty");
        std::sort(s.elements.begin(), s.elements.end());
        if (std::adjacent_find(s.elements.begin(), s.elements.end()) != s.elements.end())
            throw InputError("MalformedInput", "set '" + s.name + "' repeats an element");
        if (s.elements.back() >= universe_.size())
            throw InputError("MalformedInput", "set '" + s.name + "' references unknown element");
    }
}

SetSystem SetSystem::from_names(
    std::vector<std::string> universe,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& sets) {
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < universe.size(); ++k) index.emplace(universe[k], k);
    std::vector<NamedSet> named;
    for (const auto& [name, members] : sets) {
        NamedSet s{name, {}};
        for (const auto& m : members) {
            const auto it = index.find(m);
            if (it == index.end())
                throw InputError("MalformedInput",
                                 "set '" + name + "' references unknown element '" + m + "'");
            s.elements.push_back(it->second);
        }
        named.push_back(std::move(s));
    }
    return SetSystem(std::move(universe), std::move(named));
}

std::size_t SetSystem::element_index(const std::string& name) const {
    const auto it = std::find(universe_.begin(), universe_.end(), name);
    if (it == universe_.end()) throw InputError("MalformedInput", "unknown element '" + name + "'");
    return static_cast<std::size_t>(it - universe_.begin());
}

std::size_t SetSystem::set_index(const std::string& name) const {
    for (std::size_t k = 0; k < sets_.size(); ++k)
        if (sets_[k].name == name) return k;
    throw InputError("MalformedInput", "unknown set '" + name + "'");
}

std::vector<std::size_t> SetSystem::frequencies() const {
    std::vector<std::size_t> f(universe_.size(), 0);
    for (const auto& s : sets_)
        for (const auto e : s.elements) ++f[e];
    return f;
}

bool SetSystem::covers_universe() const {
    const auto f = frequencies();
    return std::all_of(f.begin(), f.end(), [](std::size_t x) { return x > 0; });
}

bool is_cover(const SetSystem& system, const Cover& cover) {
    check_indices(system, cover);
    std::vector<bool> hit(system.universe().size(), false);
    for (const auto idx : cover)
        for (const auto e : system.sets()[idx].elements) hit[e] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_exact_cover(const SetSystem& system, const Cover& cover) {
    check_indices(system, cover);
    std::vector<std::size_t> hits(system.universe().size(), 0);
    for (const auto idx : cover)
        for (const auto e : system.sets()[idx].elements) ++hits[e];
    return std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 1; });
}

void ColoredGraph::validate() const {
    if (k < 2) throw InputError("MalformedInput", "k must be at least 2");
    if (color.size() != vertices.size())
        throw InputError("MalformedInput", "every vertex needs exactly one color");
    if (std::set<std::string>(vertices.begin(), vertices.end()).size() != vertices.size())
        throw InputError("MalformedInput", "duplicate vertex name");
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (color[v] < 1 || color[v] > k)
            throw InputError("ImproperColoring",
                             "vertex '" + vertices[v] + "' has color outside 1.." + std::to_string(k));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [u, v] : edges) {
        if (u >= vertices.size() || v >= vertices.size())
            throw InputError("MalformedInput", "edge references unknown vertex");
        if (color[u] == color[v])
            throw InputError("ImproperColoring", "edge " + vertices[u] + "-" + vertices[v] +
                                                     " joins two vertices of color " +
                                                     std::to_string(color[u]));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw InputError("MalformedInput",
                             "duplicate edge " + vertices[u] + "-" + vertices[v]);
    }
}

std::vector<std::size_t> separator_positions(const SetSystem& system) {
    std::vector<std::size_t> pos;
    std::size_t next = 1;
    for (const auto& s : system.sets()) {
        pos.push_back(next);
        next += s.elements.size() + 1;
    }
    return pos;
}

McngInstance sc_to_mcng(const SetSystem& system) {
    const auto f = system.frequencies();
    for (std::size_t e = 0; e < f.size(); ++e)
        if (f[e] == 0)
            throw InputError("UncoveredElement",
                             "element '" + system.universe()[e] + "' belongs to no set");

    const std::size_t n_sets = system.sets().size();
    std::vector<std::string> names;
    for (const auto& s : system.sets()) names.push_back("s_" + s.name);
    for (const auto& u : system.universe()) names.push_back("e_" + u);
    auto alphabet = Alphabet::make(std::move(names));

    std::vector<SymbolId> seq;
    std::vector<Count> counts(alphabet->size(), 0);
    for (std::size_t s = 0; s < n_sets; ++s) {
        seq.push_back(static_cast<SymbolId>(s));
        counts[s] = 1;
        for (const auto e : system.sets()[s].elements)
            seq.push_back(static_cast<SymbolId>(n_sets + e));
    }
    for (std::size_t e = 0; e < f.size(); ++e) counts[n_sets + e] = f[e] - 1;
    return {Genome(alphabet, std::move(seq)), Cnp(alphabet, std::move(counts))};
}

EventSequence exact_cover_deletions(const SetSystem& system, const Cover& cover) {
    check_indices(system, cover);
    if (!is_exact_cover(system, cover)) {
        std::vector<std::size_t> hits(system.universe().size(), 0);
        for (const auto idx : cover)
            for (const auto e : system.sets()[idx].elements) ++hits[e];
        for (std::size_t e = 0; e < hits.size(); ++e) {
            if (hits[e] == 0)
                throw InputError("NotExactCover", "element '" + system.universe()[e] + "' is uncovered");
            if (hits[e] > 1)
                throw InputError("NotExactCover", "element '" + system.universe()[e] +
                                                      "' is covered " + std::to_string(hits[e]) +
                                                      " times");
        }
    }
    const auto separators = separator_positions(system);
    Cover order = cover;
    std::sort(order.begin(), order.end(), std::greater<>());
    EventSequence events;
    for (const auto idx : order) {
        const std::size_t start = separators[idx] + 1;
        events.push_back(Deletion{start, start + system.sets()[idx].elements.size() - 1});
    }
    return events;
}

Cover extract_cover_deletions(const McngInstance& instance, const SetSystem& system,
                              const EventSequence& events) {
    require_reduced_instance(instance, system);
    if (std::any_of(events.begin(), events.end(), [](const Event& e) { return !is_deletion(e); }))
        throw InputError("HasDuplication", "event sequence contains a duplication");
    require_solution(instance, events);

    const auto owner = block_owner(system);
    OriginTaggedGenome tagged(instance.genome);
    std::vector<std::size_t> affected;
    for (const auto& e : events) {
        const auto& del = std::get<Deletion>(e);
        // Separators cannot be deleted in a solution, so a span stays inside
        // one block; its first character names the block.
        affected.push_back(owner[tagged.chars()[del.i - 1].origin]);
        tagged.apply(e);
    }
    Cover cover = sorted_unique(std::move(affected));
    if (!is_cover(system, cover))
        throw InternalInvariantViolation("affected separators do not form a cover");
    return cover;
}

Cover extract_cover_general(const McngInstance& instance, const SetSystem& system,
                            const EventSequence& events) {
    require_reduced_instance(instance, system);
    require_solution(instance, events);

    const auto alive = surviving_origins(instance.genome, events);
    std::vector<bool> important(instance.genome.size() + 1, false);
    for (const auto p : alive) important[p] = true;

    const auto owner = block_owner(system);
    const std::size_t n_sets = system.sets().size();
    std::vector<std::size_t> chosen;
    for (std::size_t u = 0; u < system.universe().size(); ++u) {
        const SymbolId symbol = static_cast<SymbolId>(n_sets + u);
        std::optional<std::size_t> pick;
        for (std::size_t p = 1; p <= instance.genome.size() && !pick; ++p)
            if (instance.genome.at(p) == symbol && !important[p]) pick = p;
        if (!pick)
            throw InternalInvariantViolation("element '" + system.universe()[u] +
                                             "' has no unimportant occurrence");
        chosen.push_back(owner[*pick]);
    }
    Cover cover = sorted_unique(std::move(chosen));
    if (!is_cover(system, cover))
        throw InternalInvariantViolation("extracted sets do not form a cover");
    if (cover.size() > events.size())
        throw InternalInvariantViolation("extracted cover has " + std::to_string(cover.size()) +
                                         " sets for " + std::to_string(events.size()) + " events");
    return cover;
}

SetSystem subset_closure(const SetSystem& system, std::size_t t) {
    if (t > kMaxClosureSetSize)
        throw GuardError("SetTooLarge", "closure_t",
                         "t = " + std::to_string(t) + " exceeds the closure guard of " +
                             std::to_string(kMaxClosureSetSize));
    std::set<std::vector<std::size_t>> subsets;
    for (const auto& s : system.sets()) {
        if (s.elements.size() > t)
            throw GuardError("SetTooLarge", "closure_t",
                             "set '" + s.name + "' has " + std::to_string(s.elements.size()) +
                                 " elements, more than t = " + std::to_string(t));
        const std::size_t n = s.elements.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<std::size_t> sub;
            for (std::size_t b = 0; b < n; ++b)
                if (mask & (1u << b)) sub.push_back(s.elements[b]);
            subsets.insert(std::move(sub));
        }
    }
    std::vector<std::vector<std::size_t>> ordered(subsets.begin(), subsets.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<NamedSet> sets;
    for (auto& sub : ordered) sets.push_back({join_names(system, sub), std::move(sub)});
    return SetSystem(system.universe(), std::move(sets));
}

SetList disjointify(const SetSystem& system, const Cover& cover) {
    if (!is_cover(system, cover)) throw InputError("NotACover", "chosen sets do not cover the universe");
    std::vector<bool> taken(system.universe().size(), false);
    SetList out;
    for (const auto idx : cover) {
        std::vector<std::size_t> residual;
        for (const auto e : system.sets()[idx].elements)
            if (!taken[e]) {
                taken[e] = true;
                residual.push_back(e);
            }
        if (!residual.empty()) out.push_back(std::move(residual));
    }
    return out;
}

Cover locate_sets(const SetSystem& system, const SetList& sets) {
    Cover out;
    for (const auto& wanted : sets) {
        const auto it = std::find_if(system.sets().begin(), system.sets().end(),
                                     [&](const NamedSet& s) { return s.elements == wanted; });
        if (it == system.sets().end())
            throw InputError("MalformedInput", join_names(system, wanted) + " is not in the system");
        out.push_back(static_cast<std::size_t>(it - system.sets().begin()));
    }
    return out;
}

ScEcInstance mcq_to_scec(const ColoredGraph& graph) {
    graph.validate();
    const std::size_t k = graph.k;
    const auto& name = graph.vertices;

    // Orient every edge from its smaller color.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto [u, v] : graph.edges) {
        if (graph.color[u] > graph.color[v]) std::swap(u, v);
        edges.emplace_back(u, v);
    }

    std::vector<std::string> universe;
    for (std::size_t i = 1; i <= k; ++i) universe.push_back("col:" + std::to_string(i));
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_element;
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j) {
            pair_element[{i, j}] = universe.size();
            universe.push_back("pair:" + std::to_string(i) + ":" + std::to_string(j));
        }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> arc_element;
    for (const auto& [u, v] : edges) {
        arc_element[{u, v}] = universe.size();
        universe.push_back("arc:" + name[u] + ":" + name[v]);
        arc_element[{v, u}] = universe.size();
        universe.push_back("arc:" + name[v] + ":" + name[u]);
    }

    std::vector<NamedSet> sets;
    for (std::size_t u = 0; u < name.size(); ++u) {
        NamedSet s{"V:" + name[u], {graph.color[u] - 1}};
        for (const auto& [arc, element] : arc_element)
            if (arc.first == u) s.elements.push_back(element);
        sets.push_back(std::move(s));
    }
    for (const auto& [u, v] : edges) {
        const std::size_t ci = graph.color[u];
        const std::size_t cj = graph.color[v];
        NamedSet s{"E:" + name[u] + ":" + name[v], {pair_element.at({ci, cj})}};
        for (const auto& [x, y] : edges) {
            if (graph.color[x] != ci || graph.color[y] != cj) continue;
            if (x != u && x != v) s.elements.push_back(arc_element.at({x, y}));
            if (y != u && y != v) s.elements.push_back(arc_element.at({y, x}));
        }
        sets.push_back(std::move(s));
    }
    return {SetSystem(std::move(universe), std::move(sets)), k + k * (k - 1) / 2};
}

std::optional<Cover> min_set_cover(const SetSystem& system, std::size_t k_max) {
    const std::size_t n = system.sets().size();
    if (n > kMaxExhaustiveSets) throw too_many_sets(n);
    if (!system.covers_universe()) return std::nullopt;

    const auto masks = set_masks(system);
    const ElementMask full = ElementMask::full(system.universe().size());
    Cover chosen;
    // Lexicographic combinations of exactly `size` sets starting at `from`.
    const auto search = [&](auto&& self, std::size_t from, std::size_t size,
                            const ElementMask& covered) -> bool {
        if (chosen.size() == size) return covered == full;
        for (std::size_t s = from; s + (size - chosen.size()) <= n; ++s) {
            ElementMask next = covered;
            next |= masks[s];
            chosen.push_back(s);
            if (self(self, s + 1, size, next)) return true;
            chosen.pop_back();
        }
        return false;
    };
    for (std::size_t size = 0; size <= std::min(k_max, n); ++size) {
        chosen.clear();
        if (search(search, 0, size, ElementMask(system.universe().size()))) return chosen;
    }
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> has_multicolored_clique(const ColoredGraph& graph) {
    graph.validate();
    std::vector<std::vector<std::size_t>> classes(graph.k);
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) classes[graph.color[v] - 1].push_back(v);
    std::size_t candidates = 1;
    for (const auto& cls : classes) {
        if (cls.empty()) return std::nullopt;
        if (candidates > kMaxCliqueCandidates / cls.size())
            throw GuardError("TooLarge", "clique_candidates",
                             "color-class size product exceeds " +
                                 std::to_string(kMaxCliqueCandidates));
        candidates *= cls.size();
    }
    const std::size_t n = graph.vertices.size();
    std::vector<bool> adjacent(n * n, false);
    for (const auto& [u, v] : graph.edges) adjacent[u * n + v] = adjacent[v * n + u] = true;

    std::vector<std::size_t> clique;
    const auto extend = [&](auto&& self, std::size_t c) -> bool {
        if (c == graph.k) return true;
        for (const auto v : classes[c]) {
            if (!std::all_of(clique.begin(), clique.end(),
                             [&](std::size_t u) { return adjacent[u * n + v]; }))
                continue;
            clique.push_back(v);
            if (self(self, c + 1)) return true;
            clique.pop_back();
        }
        return false;
    };
    if (extend(extend, 0)) return clique;
    return std::nullopt;
}

bool check_scec_promise(const ScEcInstance& instance) {
    const auto& system = instance.system;
    const std::size_t n = system.sets().size();
    if (n > kMaxExhaustiveSets) throw too_many_sets(n);

    const std::size_t bits = system.universe().size();
    const auto masks = set_masks(system);
    const ElementMask full = ElementMask::full(bits);
    std::vector<ElementMask> suffix(n + 1, ElementMask(bits));
    for (std::size_t s = n; s-- > 0;) {
        suffix[s] = suffix[s + 1];
        suffix[s] |= masks[s];
    }
    // Searches for a non-exact cover of size <= k_prime.
    const auto violated = [&](auto&& self, std::size_t from, std::size_t used,
                              const ElementMask& covered, bool overlap) -> bool {
        if (overlap && covered == full) return true;
        if (used == instance.k_prime) return false;
        ElementMask reachable = covered;
        reachable |= suffix[from];
        if (!(reachable == full)) return false;
        for (std::size_t s = from; s < n; ++s) {
            ElementMask next = covered;
            next |= masks[s];
            if (self(self, s + 1, used + 1, next, overlap || covered.intersects(masks[s])))
                return true;
        }
        return false;
    };
    return !violated(violated, 0, 0, ElementMask(bits), false);
}

}  // namespace cnpkit
