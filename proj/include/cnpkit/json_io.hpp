#pragma once

// JSON documents for every type that crosses the CLI boundary. Object key
// order is preserved, both when reading (set order in set systems, vertex
// order in graphs) and when writing, so output is byte-stable.

#include <string_view>

#include "json.hpp"

#include "cnpkit/cnpc.hpp"
#include "cnpkit/genome.hpp"
#include "cnpkit/mcng.hpp"
#include "cnpkit/reductions.hpp"
#include "cnpkit/verify.hpp"

namespace cnpkit::io {

using Json = nlohmann::ordered_json;

/// Throws InputError("MalformedJson") carrying the parser's position.
Json parse(std::string_view text);

// {"alphabet": [...], "seq": [...]}
Json to_json(const Genome& g);
Genome genome_from_json(const Json& doc);

// {"alphabet": [...], "counts": [...]}
Json to_json(const Cnp& c);
Cnp cnp_from_json(const Json& doc);

// {"op": "del", "i": 5, "j": 7} / {"op": "dup", "i": 2, "j": 5, "p": 6}
Json to_json(const Event& e);
Json to_json(const EventSequence& events);
EventSequence events_from_json(const Json& doc);

// {"universe": [...], "sets": {"S1": [...], ...}}
Json to_json(const SetSystem& system);
SetSystem set_system_from_json(const Json& doc);
Json cover_to_json(const SetSystem& system, const Cover& cover);

// {"k": 3, "colors": {"u1": 1, ...}, "edges": [["u1", "v1"], ...]}
Json to_json(const ColoredGraph& graph);
ColoredGraph colored_graph_from_json(const Json& doc);

Json to_json(const McngInstance& instance);
Json to_json(const ScEcInstance& instance);

// {"status": "found", "distance": k, "witness": [...]} | {"status": "infeasible"} | {"status": "budget"}
Json to_json(const SearchResult& result);

// {"s1": [...], "s2": [...], "adjacencies": k, "n_star": m}
Json to_json(const CnpcSolution& solution);

/// Elapsed time is included only when `timing` is set.
Json to_json(const CheckReport& report, bool timing = false);

}  // namespace cnpkit::io
