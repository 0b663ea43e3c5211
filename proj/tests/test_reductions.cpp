#include "doctest.h"

#include "cnpkit/reductions.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cnpkit;
using testing::three_set_system;
using testing::kind_of;

namespace {

ColoredGraph graph(std::size_t k, std::vector<std::pair<std::string, std::size_t>> vertices,
                   std::vector<std::pair<std::string, std::string>> edges) {
    ColoredGraph g;
    g.k = k;
    for (auto& [name, c] : vertices) {
        g.vertices.push_back(name);
        g.color.push_back(c);
    }
    const auto at = [&](const std::string& n) {
        return static_cast<std::size_t>(std::find(g.vertices.begin(), g.vertices.end(), n) -
                                        g.vertices.begin());
    };
    for (const auto& [u, v] : edges) g.edges.emplace_back(at(u), at(v));
    return g;
}

std::vector<std::string> element_names(const SetSystem& s, const NamedSet& set) {
    std::vector<std::string> out;
    for (const auto e : set.elements) out.push_back(s.universe()[e]);
    return out;
}

}  // namespace

TEST_CASE("set system validation") {
    CHECK(kind_of([] { SetSystem({"1"}, {{"S", {}}}); }) == "MalformedInput");
    CHECK(kind_of([] { SetSystem({"1"}, {{"S", {0, 0}}}); }) == "MalformedInput");
    CHECK(kind_of([] { SetSystem({"1"}, {{"S", {1}}}); }) == "MalformedInput");
    CHECK(kind_of([] { SetSystem({"1"}, {{"S", {0}}, {"S", {0}}}); }) == "MalformedInput");
    CHECK(kind_of([] { SetSystem({"1", "1"}, {}); }) == "MalformedInput");
    const SetSystem s = SetSystem::from_names({"1", "2", "3"}, {{"A", {"3", "1"}}});
    CHECK(s.sets()[0].elements == std::vector<std::size_t>{0, 2});
    CHECK_FALSE(s.covers_universe());
    CHECK(three_set_system().frequencies() == std::vector<std::size_t>{2, 2, 3, 1, 1});
}

TEST_CASE("set cover to MCNG construction") {
    const McngInstance inst = sc_to_mcng(three_set_system());
    CHECK(inst.genome.str() == "s_S1 e_1 e_2 e_3 s_S2 e_1 e_3 e_4 s_S3 e_2 e_3 e_5");
    CHECK(inst.target.counts() == std::vector<Count>{1, 1, 1, 1, 1, 2, 0, 0});
    CHECK(inst.target.str() == "⟨1,1,1,1,1,2,0,0⟩");
    CHECK(separator_positions(three_set_system()) == std::vector<std::size_t>{1, 5, 9});

    const McngInstance single = sc_to_mcng(SetSystem::from_names({"u"}, {{"S1", {"u"}}}));
    CHECK(single.genome.str() == "s_S1 e_u");
    CHECK(single.target.counts() == std::vector<Count>{1, 0});

    const McngInstance two =
        sc_to_mcng(SetSystem::from_names({"u1", "u2"}, {{"S1", {"u1"}}, {"S2", {"u2"}}}));
    CHECK(two.genome.str() == "s_S1 e_u1 s_S2 e_u2");
    CHECK(two.target.counts() == std::vector<Count>{1, 1, 0, 0});

    CHECK(kind_of([] { sc_to_mcng(SetSystem({"1", "2"}, {{"S1", {0}}})); }) == "UncoveredElement");
}

TEST_CASE("exact cover to deletions and back") {
    const SetSystem s = SetSystem::from_names({"1", "2", "3"}, {{"S1", {"1", "2"}}, {"S2", {"3"}}});
    const McngInstance inst = sc_to_mcng(s);
    const EventSequence events = exact_cover_deletions(s, {0, 1});
    CHECK(events == EventSequence{Deletion{5, 5}, Deletion{2, 3}});
    CHECK(cnp_of(apply_sequence(inst.genome, events)) == inst.target);
    CHECK(extract_cover_deletions(inst, s, events) == Cover{0, 1});
    CHECK(extract_cover_general(inst, s, events) == Cover{0, 1});

    const SetSystem empty({}, {});
    CHECK(exact_cover_deletions(empty, {}).empty());
    CHECK(extract_cover_deletions(sc_to_mcng(empty), empty, {}).empty());

    CHECK(kind_of([] { exact_cover_deletions(three_set_system(), {1, 2}); }) == "NotExactCover");
    CHECK(kind_of([] { exact_cover_deletions(three_set_system(), {1}); }) == "NotExactCover");

    const SetSystem one = SetSystem::from_names({"a", "b"}, {{"S1", {"a", "b"}}});
    const McngInstance one_inst = sc_to_mcng(one);
    CHECK(extract_cover_deletions(one_inst, one, exact_cover_deletions(one, {0})) == Cover{0});
}

TEST_CASE("cover extraction from a hand-made deletion sequence") {
    const SetSystem s = three_set_system();
    const McngInstance inst = sc_to_mcng(s);
    // Whole q(S2), then e2 and e5 from the third block.
    const EventSequence events{Deletion{6, 8}, Deletion{7, 7}, Deletion{8, 8}};
    REQUIRE(cnp_of(apply_sequence(inst.genome, events)) == inst.target);
    CHECK(extract_cover_deletions(inst, s, events) == Cover{1, 2});
    const Cover general = extract_cover_general(inst, s, events);
    CHECK(is_cover(s, general));
    CHECK(general.size() <= 3);

    CHECK(kind_of([&] { extract_cover_deletions(inst, s, {Deletion{6, 8}}); }) == "NotASolution");
    CHECK(kind_of([&] {
              extract_cover_deletions(inst, s, {Duplication{1, 1, 0}, Deletion{1, 1}});
          }) == "HasDuplication");
    const SetSystem other = SetSystem::from_names({"1"}, {{"S1", {"1"}}});
    CHECK(kind_of([&] { extract_cover_general(inst, other, events); }) == "InstanceMismatch");
}

TEST_CASE("cover extraction from a solver witness with the full repertoire") {
    const SetSystem s = three_set_system();
    const McngInstance inst = sc_to_mcng(s);
    SearchOptions o;
    o.budget = 3;
    const auto r = d_gcnp_exact(inst.genome, inst.target, o);
    REQUIRE(std::holds_alternative<Found>(r));
    const auto& events = std::get<Found>(r).witness;
    const Cover cover = extract_cover_general(inst, s, events);
    CHECK(is_cover(s, cover));
    CHECK(cover.size() <= events.size());

    // A sequence that starts with a duplication and still reaches the target.
    const EventSequence with_dup{Duplication{1, 1, 0}, Deletion{2, 2}, Deletion{6, 8}, Deletion{7, 7},
                                 Deletion{8, 8}};
    REQUIRE(cnp_of(apply_sequence(inst.genome, with_dup)) == inst.target);
    const Cover c2 = extract_cover_general(inst, s, with_dup);
    CHECK(is_cover(s, c2));
    CHECK(c2.size() <= with_dup.size());
}

TEST_CASE("subset closure") {
    const SetSystem pair = SetSystem::from_names({"1", "2"}, {{"S1", {"1", "2"}}});
    const SetSystem closed = subset_closure(pair, 2);
    REQUIRE(closed.sets().size() == 3);
    CHECK(closed.sets()[0].name == "{1}");
    CHECK(closed.sets()[1].name == "{2}");
    CHECK(closed.sets()[2].name == "{1,2}");

    const SetSystem singles = SetSystem::from_names({"1", "2"}, {{"A", {"1"}}, {"B", {"2"}}});
    const SetSystem closed_singles = subset_closure(singles, 1);
    REQUIRE(closed_singles.sets().size() == 2);
    CHECK(closed_singles.sets()[0].elements == singles.sets()[0].elements);
    CHECK(closed_singles.sets()[1].elements == singles.sets()[1].elements);

    // 3 triples give 21 non-empty subsets; 6 of them are shared.
    CHECK(oracle::closure_size(three_set_system()) == 15);
    CHECK(subset_closure(three_set_system(), 3).sets().size() == 15);

    CHECK(kind_of([] { subset_closure(three_set_system(), 2); }) == "SetTooLarge");
    CHECK(kind_of([] { subset_closure(three_set_system(), 11); }) == "SetTooLarge");
}

TEST_CASE("disjointify") {
    const SetSystem s = three_set_system();
    const SetList chain = disjointify(s, {1, 2});
    CHECK(chain == SetList{{0, 2, 3}, {1, 4}});
    const SetSystem part = SetSystem::from_names({"1", "2"}, {{"A", {"1"}}, {"B", {"2"}}});
    CHECK(disjointify(part, {0, 1}) == SetList{{0}, {1}});
    const SetSystem whole = SetSystem::from_names({"1", "2"}, {{"A", {"1", "2"}}});
    CHECK(disjointify(whole, {0}) == SetList{{0, 1}});
    CHECK(kind_of([&] { disjointify(s, {1}); }) == "NotACover");

    const SetSystem closed = subset_closure(s, 3);
    const Cover located = locate_sets(closed, chain);
    CHECK(is_exact_cover(closed, located));
    CHECK(kind_of([&] { locate_sets(s, chain); }) == "MalformedInput");
}

TEST_CASE("exhaustive set cover oracle") {
    const SetSystem s = three_set_system();
    CHECK(min_set_cover(s, 3) == Cover{1, 2});
    CHECK(oracle::min_cover_size(s) == 2u);
    CHECK_FALSE(min_set_cover(s, 1).has_value());
    CHECK(is_cover(s, {1, 2}));
    CHECK_FALSE(is_exact_cover(s, {1, 2}));

    const SetSystem whole = SetSystem::from_names({"1", "2"}, {{"A", {"1"}}, {"U", {"1", "2"}}});
    CHECK(min_set_cover(whole, 5) == Cover{1});
    CHECK_FALSE(min_set_cover(SetSystem({"1", "2"}, {{"A", {0}}}), 5).has_value());
    CHECK(is_exact_cover(SetSystem({}, {}), {}));
    CHECK(min_set_cover(SetSystem({}, {}), 0) == Cover{});

    std::vector<NamedSet> many;
    for (std::size_t k = 0; k < 25; ++k) many.push_back({"S" + std::to_string(k), {0}});
    CHECK(kind_of([&] { min_set_cover(SetSystem({"1"}, many), 2); }) == "TooManySets");
}

TEST_CASE("exactness promise on the set cover example") {
    const SetSystem s = three_set_system();
    // {S2, S3} covers with overlap on 3, so even k' = 2 breaks the promise.
    CHECK(oracle::promise_holds(s, 2) == false);
    CHECK_FALSE(check_scec_promise({s, 2}));
    CHECK_FALSE(check_scec_promise({s, 3}));
    CHECK(check_scec_promise({s, 1}));
    const SetSystem disjoint = SetSystem::from_names({"1", "2"}, {{"A", {"1"}}, {"B", {"2"}}});
    for (std::size_t k = 0; k <= 3; ++k) CHECK(check_scec_promise({disjoint, k}));
}

TEST_CASE("multicolored clique reduction: edge-set construction") {
    const ColoredGraph g = graph(2, {{"u1", 1}, {"u2", 1}, {"v1", 2}, {"v2", 2}, {"v3", 2}},
                                 {{"u1", "v1"}, {"u1", "v2"}, {"u2", "v3"}});
    const ScEcInstance inst = mcq_to_scec(g);
    CHECK(inst.k_prime == 3);
    const auto& sys = inst.system;
    const auto& s = sys.sets()[sys.set_index("E:u1:v1")];
    CHECK(element_names(sys, s) ==
          std::vector<std::string>{"pair:1:2", "arc:v2:u1", "arc:u2:v3", "arc:v3:u2"});
    CHECK(element_names(sys, sys.sets()[sys.set_index("V:u1")]) ==
          std::vector<std::string>{"col:1", "arc:u1:v1", "arc:u1:v2"});
    CHECK(check_scec_promise(inst));
}

TEST_CASE("multicolored clique reduction: single edge") {
    const ColoredGraph g = graph(2, {{"u", 1}, {"v", 2}}, {{"v", "u"}});
    const ScEcInstance inst = mcq_to_scec(g);
    CHECK(inst.system.universe() ==
          std::vector<std::string>{"col:1", "col:2", "pair:1:2", "arc:u:v", "arc:v:u"});
    CHECK(inst.k_prime == 3);
    const auto cover = min_set_cover(inst.system, inst.k_prime);
    REQUIRE(cover.has_value());
    CHECK(cover->size() == 3);
    CHECK(is_exact_cover(inst.system, *cover));
    CHECK(has_multicolored_clique(g) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("multicolored clique reduction: triangle and degenerate graphs") {
    const ColoredGraph tri = graph(3, {{"a", 1}, {"b", 2}, {"c", 3}}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    const ScEcInstance inst = mcq_to_scec(tri);
    CHECK(inst.k_prime == 6);
    CHECK(has_multicolored_clique(tri) == std::vector<std::size_t>{0, 1, 2});
    CHECK(min_set_cover(inst.system, 6)->size() == 6);
    CHECK(check_scec_promise(inst));

    const ColoredGraph edgeless = graph(2, {{"u", 1}, {"v", 2}}, {});
    CHECK_FALSE(has_multicolored_clique(edgeless).has_value());
    CHECK_FALSE(min_set_cover(mcq_to_scec(edgeless).system, 3).has_value());

    const ColoredGraph missing = graph(3, {{"u", 1}, {"v", 2}}, {{"u", "v"}});
    const ScEcInstance m = mcq_to_scec(missing);
    CHECK(m.system.frequencies()[2] == 0);
    CHECK_FALSE(min_set_cover(m.system, m.k_prime).has_value());
    CHECK_FALSE(has_multicolored_clique(missing).has_value());
}

TEST_CASE("colored graph validation") {
    CHECK(kind_of([] { graph(2, {{"u", 1}, {"v", 1}}, {{"u", "v"}}).validate(); }) == "ImproperColoring");
    CHECK(kind_of([] { graph(2, {{"u", 1}, {"v", 3}}, {}).validate(); }) == "ImproperColoring");
    CHECK(kind_of([] { graph(2, {{"u", 1}, {"v", 2}}, {{"u", "v"}, {"v", "u"}}).validate(); }) ==
          "MalformedInput");
    CHECK(kind_of([] { graph(1, {{"u", 1}}, {}).validate(); }) != "no error");
}

TEST_CASE("clique search agrees with subset enumeration on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t k = 2 + rng() % 3;
        ColoredGraph g;
        g.k = k;
        const std::size_t n = 2 + rng() % 6;
        for (std::size_t v = 0; v < n; ++v) {
            g.vertices.push_back("v" + std::to_string(v));
            g.color.push_back(1 + rng() % k);
        }
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (g.color[u] != g.color[v] && rng() % 3 != 0) g.edges.emplace_back(u, v);
        CAPTURE(trial);
        CHECK(has_multicolored_clique(g).has_value() == oracle::has_clique(g));
    }
}
