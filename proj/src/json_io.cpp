#include "cnpkit/json_io.hpp"

#include <map>

namespace cnpkit::io {
namespace {

InputError malformed(const std::string& what) { return InputError("MalformedInput", what); }

const Json& field(const Json& doc, const char* key) {
    if (!doc.is_object()) throw malformed("expected a JSON object");
    const auto it = doc.find(key);
    if (it == doc.end()) throw malformed(std::string("missing field '") + key + "'");
    return *it;
}

std::vector<std::string> string_list(const Json& doc, const char* what) {
    if (!doc.is_array()) throw malformed(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : doc) {
        if (!item.is_string()) throw malformed(std::string(what) + " must be an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::size_t unsigned_field(const Json& doc, const char* key) {
    const Json& v = field(doc, key);
    if (!v.is_number_unsigned())
        throw malformed(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

Json names_of(const Genome& g) {
    Json seq = Json::array();
    for (const SymbolId s : g.seq()) seq.push_back(g.alphabet()->name(s));
    return seq;
}

}  // namespace

Json parse(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw InputError("MalformedJson", std::string(e.what()) + " (byte " +
                                              std::to_string(e.byte) + ")");
    }
}

Json to_json(const Genome& g) {
    return Json{{"alphabet", g.alphabet()->symbols()}, {"seq", names_of(g)}};
}

Genome genome_from_json(const Json& doc) {
    auto alphabet = Alphabet::make(string_list(field(doc, "alphabet"), "alphabet"));
    return Genome::from_names(std::move(alphabet), string_list(field(doc, "seq"), "seq"));
}

Json to_json(const Cnp& c) {
    return Json{{"alphabet", c.alphabet()->symbols()}, {"counts", c.counts()}};
}

Cnp cnp_from_json(const Json& doc) {
    auto alphabet = Alphabet::make(string_list(field(doc, "alphabet"), "alphabet"));
    const Json& counts = field(doc, "counts");
    if (!counts.is_array()) throw malformed("counts must be an array");
    std::vector<Count> values;
    for (const auto& c : counts) {
        if (!c.is_number_unsigned()) throw malformed("counts must be non-negative integers");
        values.push_back(c.get<Count>());
    }
    return Cnp(std::move(alphabet), std::move(values));
}

Json to_json(const Event& e) {
    if (const auto* del = std::get_if<Deletion>(&e))
        return Json{{"op", "del"}, {"i", del->i}, {"j", del->j}};
    const auto& dup = std::get<Duplication>(e);
    return Json{{"op", "dup"}, {"i", dup.i}, {"j", dup.j}, {"p", dup.p}};
}

Json to_json(const EventSequence& events) {
    Json out = Json::array();
    for (const auto& e : events) out.push_back(to_json(e));
    return out;
}

EventSequence events_from_json(const Json& doc) {
    if (!doc.is_array()) throw malformed("event list must be an array");
    EventSequence events;
    for (const auto& item : doc) {
        const Json& op = field(item, "op");
        if (op == "del") {
            events.push_back(Deletion{unsigned_field(item, "i"), unsigned_field(item, "j")});
        } else if (op == "dup") {
            events.push_back(Duplication{unsigned_field(item, "i"), unsigned_field(item, "j"),
                                         unsigned_field(item, "p")});
        } else {
            throw malformed("unknown event op " + op.dump());
        }
    }
    return events;
}

Json to_json(const SetSystem& system) {
    Json sets = Json::object();
    for (const auto& s : system.sets()) {
        Json members = Json::array();
        for (const auto e : s.elements) members.push_back(system.universe()[e]);
        sets[s.name] = std::move(members);
    }
    return Json{{"universe", system.universe()}, {"sets", std::move(sets)}};
}

SetSystem set_system_from_json(const Json& doc) {
    auto universe = string_list(field(doc, "universe"), "universe");
    const Json& sets = field(doc, "sets");
    if (!sets.is_object()) throw malformed("sets must be an object of name -> element list");
    std::vector<std::pair<std::string, std::vector<std::string>>> named;
    for (const auto& [name, members] : sets.items())
        named.emplace_back(name, string_list(members, "set members"));
    return SetSystem::from_names(std::move(universe), named);
}

Json cover_to_json(const SetSystem& system, const Cover& cover) {
    Json out = Json::array();
    for (const auto idx : cover) out.push_back(system.sets().at(idx).name);
    return out;
}

Json to_json(const ColoredGraph& graph) {
    Json colors = Json::object();
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) colors[graph.vertices[v]] = graph.color[v];
    Json edges = Json::array();
    for (const auto& [u, v] : graph.edges) edges.push_back({graph.vertices[u], graph.vertices[v]});
    return Json{{"k", graph.k}, {"colors", std::move(colors)}, {"edges", std::move(edges)}};
}

ColoredGraph colored_graph_from_json(const Json& doc) {
    ColoredGraph graph;
    graph.k = unsigned_field(doc, "k");
    const Json& colors = field(doc, "colors");
    if (!colors.is_object()) throw malformed("colors must be an object of vertex -> color");
    std::map<std::string, std::size_t> index;
    for (const auto& [name, c] : colors.items()) {
        if (!c.is_number_unsigned()) throw malformed("colors must be positive integers");
        index.emplace(name, graph.vertices.size());
        graph.vertices.push_back(name);
        graph.color.push_back(c.get<std::size_t>());
    }
    const Json& edges = field(doc, "edges");
    if (!edges.is_array()) throw malformed("edges must be an array of vertex pairs");
    for (const auto& e : edges) {
        const auto ends = string_list(e, "edge");
        if (ends.size() != 2) throw malformed("each edge must have exactly two endpoints");
        const auto u = index.find(ends[0]);
        const auto v = index.find(ends[1]);
        if (u == index.end() || v == index.end())
            throw malformed("edge references unknown vertex");
        if (u->second == v->second) throw InputError("ImproperColoring", "self-loop on " + ends[0]);
        graph.edges.emplace_back(u->second, v->second);
    }
    graph.validate();
    return graph;
}

Json to_json(const McngInstance& instance) {
    return Json{{"genome", to_json(instance.genome)}, {"cnp", to_json(instance.target)}};
}

Json to_json(const ScEcInstance& instance) {
    return Json{{"system", to_json(instance.system)}, {"k_prime", instance.k_prime}};
}

Json to_json(const SearchResult& result) {
    if (const auto* found = std::get_if<Found>(&result))
        return Json{{"status", "found"},
                    {"distance", found->distance},
                    {"witness", to_json(found->witness)}};
    if (std::holds_alternative<Infeasible>(result)) return Json{{"status", "infeasible"}};
    return Json{{"status", "budget"}};
}

Json to_json(const CnpcSolution& solution) {
    return Json{{"s1", names_of(solution.s1)},
                {"s2", names_of(solution.s2)},
                {"adjacencies", solution.adjacencies},
                {"n_star", solution.n_star}};
}

Json to_json(const CheckReport& report, bool timing) {
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json instance;
        try {
            instance = Json::parse(f.instance);
        } catch (const Json::parse_error&) {
            instance = f.instance;
        }
        failures.push_back(
            Json{{"instance", std::move(instance)}, {"expected", f.expected}, {"got", f.got}});
    }
    Json out{{"check", report.name},
             {"passed", report.passed()},
             {"attempted", report.attempted},
             {"skipped", report.skipped},
             {"cases", report.cases},
             {"failures", std::move(failures)}};
    if (timing) out["elapsed_seconds"] = report.elapsed_seconds;
    return out;
}

}  // namespace cnpkit::io
