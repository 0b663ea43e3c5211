#include "cnpkit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "cnpkit/cnpc.hpp"
#include "cnpkit/json_io.hpp"
#include "cnpkit/mcng.hpp"
#include "cnpkit/reductions.hpp"
#include "cnpkit/verify.hpp"

namespace cnpkit::cli {
namespace {

using io::Json;

enum class Format { text, json };

struct Globals {
    Format format = Format::text;
    std::string alphabet;  // comma-separated, for shorthand operands
    std::string output;
};

InputError malformed(const std::string& what) { return InputError("MalformedInput", what); }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

bool looks_like_json(const std::string& arg) {
    return !arg.empty() && (arg.front() == '{' || arg.front() == '[');
}

// Inline JSON, else the contents of an existing file, else nothing.
std::optional<Json> json_operand(const std::string& arg) {
    if (looks_like_json(arg)) return io::parse(arg);
    std::error_code ec;
    if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg, std::ios::binary);
        if (!in) throw InputError("MalformedInput", "cannot read '" + arg + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return io::parse(buffer.str());
    }
    return std::nullopt;
}

Json require_json(const std::string& arg, const char* what) {
    auto doc = json_operand(arg);
    if (!doc) throw malformed(std::string(what) + " must be inline JSON or a JSON file: '" + arg + "'");
    return *doc;
}

// Resolves genome operands. Shorthand strings share one single-character
// alphabet: --alphabet if given, else that of a JSON operand, else the
// sorted distinct characters of all shorthand operands.
class OperandAlphabet {
public:
    explicit OperandAlphabet(const Globals& g) {
        if (!g.alphabet.empty()) explicit_ = Alphabet::make(split(g.alphabet, ','));
    }

    void saw(const AlphabetPtr& a) {
        if (!from_json_) from_json_ = a;
    }
    void saw_text(const std::string& s) { chars_.insert(s.begin(), s.end()); }

    AlphabetPtr get() const {
        if (explicit_) return explicit_;
        if (from_json_) return from_json_;
        std::vector<std::string> names;
        for (const char c : chars_) names.emplace_back(1, c);
        return Alphabet::make(std::move(names));
    }

private:
    AlphabetPtr explicit_;
    AlphabetPtr from_json_;
    std::set<char> chars_;
};

std::vector<Genome> genomes(const Globals& globals, const std::vector<std::string>& args) {
    OperandAlphabet alphabet(globals);
    std::vector<std::optional<Genome>> parsed;
    for (const auto& a : args) {
        if (auto doc = json_operand(a)) {
            parsed.push_back(io::genome_from_json(*doc));
            alphabet.saw(parsed.back()->alphabet());
        } else {
            parsed.emplace_back();
            alphabet.saw_text(a);
        }
    }
    std::vector<Genome> out;
    for (std::size_t k = 0; k < args.size(); ++k)
        out.push_back(parsed[k] ? *parsed[k] : Genome::from_chars(alphabet.get(), args[k]));
    return out;
}

std::vector<Count> parse_counts(const std::string& text) {
    std::vector<Count> counts;
    for (const auto& item : split(text, ',')) {
        Count value = 0;
        const auto* end = item.data() + item.size();
        const auto [ptr, ec] = std::from_chars(item.data(), end, value);
        if (ec != std::errc() || ptr != end || item.empty())
            throw malformed("CNP shorthand must be comma-separated counts: '" + text + "'");
        counts.push_back(value);
    }
    return counts;
}

// Shorthand CNPs use `alphabet` when known, else a, b, c, ...
Cnp cnp_operand(const std::string& arg, AlphabetPtr alphabet) {
    if (auto doc = json_operand(arg)) return io::cnp_from_json(*doc);
    auto counts = parse_counts(arg);
    if (!alphabet) {
        if (counts.size() > 26) throw malformed("CNP shorthand longer than 26 needs --alphabet");
        std::vector<std::string> names;
        for (std::size_t s = 0; s < counts.size(); ++s) names.emplace_back(1, static_cast<char>('a' + s));
        alphabet = Alphabet::make(std::move(names));
    }
    return Cnp(std::move(alphabet), std::move(counts));
}

EventSequence events_operand(const std::string& arg) {
    if (auto doc = json_operand(arg)) return io::events_from_json(*doc);
    static const std::regex token(R"(\s*(del|dup)\((\d+),(\d+)(?:,(\d+))?\)\s*,?)");
    EventSequence events;
    auto it = arg.cbegin();
    std::smatch m;
    while (it != arg.cend()) {
        if (!std::regex_search(it, arg.cend(), m, token, std::regex_constants::match_continuous))
            throw malformed("cannot parse events at '" + std::string(it, arg.cend()) + "'");
        const auto num = [&](int g) { return static_cast<std::size_t>(std::stoull(m[g].str())); };
        if (m[1] == "del") {
            if (m[4].matched) throw malformed("del takes two positions");
            events.push_back(Deletion{num(2), num(3)});
        } else {
            if (!m[4].matched) throw malformed("dup takes three positions");
            events.push_back(Duplication{num(2), num(3), num(4)});
        }
        it = m[0].second;
    }
    return events;
}

std::uint64_t node_ceiling() {
    const char* env = std::getenv("CNPKIT_NODE_CEILING");
    if (!env) return kDefaultNodeCeiling;
    std::uint64_t value = 0;
    const std::string text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
        throw malformed("CNPKIT_NODE_CEILING must be a positive integer");
    return value;
}

std::string events_text(const EventSequence& events) {
    std::string out;
    for (std::size_t k = 0; k < events.size(); ++k) out += (k ? " " : "") + to_string(events[k]);
    return out;
}

int search_result(const SearchResult& result, Format format, std::ostream& out) {
    if (format == Format::json) {
        out << io::to_json(result).dump() << '\n';
    } else if (const auto* found = std::get_if<Found>(&result)) {
        out << "distance " << found->distance << '\n';
        if (!found->witness.empty()) out << "witness " << events_text(found->witness) << '\n';
    } else if (std::holds_alternative<Infeasible>(result)) {
        out << "infeasible\n";
    } else {
        out << "exceeds budget " << std::get<ExceedsBudget>(result).budget << '\n';
    }
    return std::holds_alternative<ExceedsBudget>(result) ? kGuard : kOk;
}

void report_text(const CheckReport& r, bool timing, std::ostream& out) {
    out << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (attempted " << r.attempted
        << ", skipped " << r.skipped << ", cases " << r.cases << ", failures " << r.failures.size()
        << ")";
    if (timing) out << " in " << r.elapsed_seconds << " s";
    out << '\n';
    for (const auto& f : r.failures)
        out << "  instance " << f.instance << "\n    expected " << f.expected << "\n    got "
            << f.got << '\n';
}

std::string set_text(const SetSystem& system, const NamedSet& s) {
    std::string out = s.name + " = {";
    for (std::size_t k = 0; k < s.elements.size(); ++k)
        out += (k ? "," : "") + system.universe()[s.elements[k]];
    return out + "}";
}

void system_text(const SetSystem& system, std::ostream& out) {
    out << "universe";
    for (const auto& u : system.universe()) out << ' ' << u;
    out << '\n';
    for (const auto& s : system.sets()) out << set_text(system, s) << '\n';
}

struct Verify {
    std::string check;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> max;
    bool timing = false;
    bool serial = false;
};

std::vector<CheckReport> run_verify(const Verify& v) {
    CheckConfig config;
    config.execution = v.serial ? Execution::serial : Execution::parallel;
    config.node_ceiling = node_ceiling();
    const auto max_or = [&](std::size_t fallback) { return v.max.value_or(fallback); };
    const auto trials_or = [&](std::size_t fallback) { return v.trials.value_or(fallback); };
    const SuiteOptions defaults;

    if (v.check == "all") {
        SuiteOptions options;
        options.seed = v.seed;
        if (v.trials) options.lemma2_trials = options.proposition_trials = *v.trials;
        return run_all_checks(options, config);
    }
    if (v.check == "lemma2") return {check_lemma2(trials_or(defaults.lemma2_trials), v.seed, config)};
    if (v.check == "propositions")
        return {check_propositions(trials_or(defaults.proposition_trials), v.seed, config)};
    if (v.check == "extraction") return {check_extraction(max_or(defaults.extraction_budget), config)};
    if (v.check == "alternation") return {check_alternation(max_or(defaults.alternation_n), config)};
    if (v.check == "cnpc") return {check_cnpc(max_or(defaults.cnpc_total), config)};
    return {check_w1_reduction(max_or(defaults.w1_vertices), config)};
}

int dispatch(CLI::App& app, const Globals& g, const std::vector<std::string>& operands,
             std::size_t budget, bool deletions_only, bool oracle, std::size_t t, const Verify& verify,
             std::ostream& out) {
    const bool json = g.format == Format::json;
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    if (name == "cnp") {
        const Cnp c = cnp_of(genomes(g, operands).at(0));
        out << (json ? io::to_json(c).dump() : c.str()) << '\n';
        return kOk;
    }
    if (name == "apply") {
        const Genome result = apply_sequence(genomes(g, {operands.at(0)}).at(0), events_operand(operands.at(1)));
        out << (json ? io::to_json(result).dump() : result.str()) << '\n';
        return kOk;
    }
    if (name == "mcng" || name == "dgg") {
        SearchOptions options;
        options.budget = budget;
        options.mode = deletions_only ? EventMode::deletions_only : EventMode::all_events;
        options.node_ceiling = node_ceiling();
        if (name == "dgg") {
            const auto gs = genomes(g, operands);
            return search_result(d_gg_exact(gs.at(0), gs.at(1), options), g.format, out);
        }
        const Genome genome = genomes(g, {operands.at(0)}).at(0);
        const Cnp target = cnp_operand(operands.at(1), genome.alphabet());
        return search_result(d_gcnp_exact(genome, target, options), g.format, out);
    }
    if (name == "cnpc") {
        AlphabetPtr alphabet;
        if (!g.alphabet.empty()) alphabet = Alphabet::make(split(g.alphabet, ','));
        const Cnp c1 = cnp_operand(operands.at(0), alphabet);
        const Cnp c2 = cnp_operand(operands.at(1), alphabet ? alphabet : c1.alphabet());
        const CnpcSolution sol = cnpc_solve(c1, c2);
        std::optional<Count> best;
        if (oracle) best = cnpc_brute_force(c1, c2);
        if (json) {
            Json doc = io::to_json(sol);
            if (best) doc["oracle"] = *best;
            out << doc.dump() << '\n';
        } else {
            out << "s1 " << sol.s1.str() << "\ns2 " << sol.s2.str() << "\nadjacencies "
                << sol.adjacencies << "\nn_star " << sol.n_star << '\n';
            if (best) out << "oracle " << *best << '\n';
        }
        return best && *best != sol.adjacencies ? kCheckFailed : kOk;
    }
    if (name == "adjacency") {
        const auto gs = genomes(g, operands);
        const Count a = adjacencies(gs.at(0), gs.at(1));
        const Breakpoints b = breakpoints(gs.at(0), gs.at(1));
        if (json)
            out << Json{{"adjacencies", a},
                        {"breakpoints", {b.in_first, b.in_second}},
                        {"distance", b.in_first + b.in_second}}
                       .dump()
                << '\n';
        else
            out << "adjacencies " << a << "\nbreakpoints (" << b.in_first << "," << b.in_second
                << ")\n";
        return kOk;
    }
    if (name == "reduce") {
        const auto* kind = sub->get_subcommands().front();
        const std::string which = kind->get_name();
        const Json doc = require_json(operands.at(0), which == "mcq-scec" ? "graph" : "set system");
        if (which == "sc-mcng") {
            const McngInstance inst = sc_to_mcng(io::set_system_from_json(doc));
            if (json)
                out << io::to_json(inst).dump() << '\n';
            else
                out << "genome " << inst.genome.str() << "\ncnp " << inst.target.str() << '\n';
        } else if (which == "mcq-scec") {
            const ScEcInstance inst = mcq_to_scec(io::colored_graph_from_json(doc));
            if (json) {
                out << io::to_json(inst).dump() << '\n';
            } else {
                system_text(inst.system, out);
                out << "k' " << inst.k_prime << '\n';
            }
        } else {
            const SetSystem closed = subset_closure(io::set_system_from_json(doc), t);
            if (json)
                out << io::to_json(closed).dump() << '\n';
            else
                system_text(closed, out);
        }
        return kOk;
    }

    // verify
    const auto reports = run_verify(verify);
    if (json) {
        if (reports.size() == 1) {
            out << io::to_json(reports.front(), verify.timing).dump() << '\n';
        } else {
            Json all = Json::array();
            for (const auto& r : reports) all.push_back(io::to_json(r, verify.timing));
            out << all.dump() << '\n';
        }
    } else {
        for (const auto& r : reports) report_text(r, verify.timing, out);
    }
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Genome and copy-number profile distances, conforming and reductions", "cnpkit"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}}))
        ->option_text("text|json [text]");
    app.add_option("--alphabet", g.alphabet, "Comma-separated alphabet for shorthand operands");
    app.add_option("-o,--output", g.output, "Write output to this file instead of stdout");

    std::vector<std::string> operands;
    std::size_t budget = 4;
    bool deletions_only = false;
    bool oracle = false;
    std::size_t t = 0;
    Verify verify;

    auto* cnp = app.add_subcommand("cnp", "Copy-number profile of a genome");
    cnp->add_option("genome", operands, "Genome (JSON, file or string)")->required()->allow_extra_args(false)->expected(1);

    auto* apply = app.add_subcommand("apply", "Apply an event sequence to a genome");
    apply->add_option("operands", operands, "<genome> <events>")->required()->allow_extra_args(false)->expected(2);

    auto* mcng = app.add_subcommand("mcng", "Exact genome-to-CNP distance");
    mcng->add_option("operands", operands, "<genome> <cnp>")->required()->allow_extra_args(false)->expected(2);
    mcng->add_option("--budget", budget, "Maximum number of events")->capture_default_str();
    mcng->add_flag("--deletions-only", deletions_only, "Restrict to deletions");

    auto* dgg = app.add_subcommand("dgg", "Exact genome-to-genome distance");
    dgg->add_option("operands", operands, "<genome> <genome>")->required()->allow_extra_args(false)->expected(2);
    dgg->add_option("--budget", budget, "Maximum number of events")->capture_default_str();
    dgg->add_flag("--deletions-only", deletions_only, "Restrict to deletions");

    auto* cnpc = app.add_subcommand("cnpc", "Strings with given CNPs maximising adjacencies");
    cnpc->add_option("operands", operands, "<cnp> <cnp>")->required()->allow_extra_args(false)->expected(2);
    cnpc->add_flag("--oracle", oracle, "Cross-check against brute force");

    auto* adjacency = app.add_subcommand("adjacency", "Adjacencies and breakpoints of two strings");
    adjacency->add_option("operands", operands, "<s1> <s2>")->required()->allow_extra_args(false)->expected(2);

    auto* reduce = app.add_subcommand("reduce", "Hardness reductions");
    reduce->require_subcommand(1, 1);
    reduce->add_subcommand("sc-mcng", "Set cover to MCNG")
        ->add_option("setsystem", operands, "Set system (JSON or file)")
        ->required()
        ->allow_extra_args(false)
        ->expected(1);
    reduce->add_subcommand("mcq-scec", "Multicolored clique to SET-COVER-EC")
        ->add_option("graph", operands, "Colored graph (JSON or file)")
        ->required()
        ->allow_extra_args(false)
        ->expected(1);
    auto* closure = reduce->add_subcommand("subset-closure", "All subsets of sets of size <= t");
    closure->add_option("setsystem", operands, "Set system (JSON or file)")
        ->required()
        ->allow_extra_args(false)
        ->expected(1);
    closure->add_option("--t", t, "Maximum set size")->required();

    auto* ver = app.add_subcommand("verify", "Run a property check");
    std::vector<std::string> checks = check_names();
    checks.push_back("all");
    ver->add_option("check", verify.check, "Check name")->required()->check(CLI::IsMember(checks));
    ver->add_option("--seed", verify.seed, "Seed for randomized checks")->capture_default_str();
    ver->add_option("--trials", verify.trials, "Trials for randomized checks");
    ver->add_option("--max", verify.max, "Size parameter for exhaustive checks");
    ver->add_flag("--timing", verify.timing, "Include wall time in reports");
    ver->add_flag("--serial", verify.serial, "Run the serial reference path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    std::ofstream file;
    if (!g.output.empty()) {
        file.open(g.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << g.output << "' for writing\n";
            return kUsage;
        }
    }
    std::ostream& sink = g.output.empty() ? out : file;

    try {
        return dispatch(app, g, operands, budget, deletions_only, oracle, t, verify, sink);
    } catch (const GuardError& e) {
        err << "error: " << e.kind() << " (guard " << e.guard() << "): " << e.what() << '\n';
        return kGuard;
    } catch (const InputError& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kCheckFailed;
    }
}

}  // namespace cnpkit::cli
