#include "cnpkit/genome.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cnpkit {

void EventError::set_event_index(std::size_t index) {
    index_ = index;
    decorated_ = "event " + std::to_string(index) + ": " + std::runtime_error::what();
}

const char* EventError::what() const noexcept {
    return index_ ? decorated_.c_str() : std::runtime_error::what();
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
        if (symbols_[k].empty())
            throw InputError("MalformedInput", "symbol names must be non-empty");
        if (!index_.emplace(symbols_[k], static_cast<SymbolId>(k)).second)
            throw InputError("DuplicateSymbol", "duplicate symbol '" + symbols_[k] + "'");
    }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> symbols) {
    return std::make_shared<const Alphabet>(std::move(symbols));
}

SymbolId Alphabet::id(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw unknown_symbol(name);
    return it->second;
}

bool Alphabet::single_char() const noexcept {
    return std::all_of(symbols_.begin(), symbols_.end(),
                       [](const std::string& s) { return s.size() == 1; });
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    return a == b || (a && b && *a == *b);
}

Genome::Genome(AlphabetPtr alphabet, std::vector<SymbolId> seq)
    : alphabet_(std::move(alphabet)), seq_(std::move(seq)) {
    for (const SymbolId s : seq_)
        if (s >= alphabet_->size())
            throw InputError("UnknownSymbol", "symbol index " + std::to_string(s) + " out of range");
}

Genome Genome::from_names(AlphabetPtr alphabet, const std::vector<std::string>& names) {
    std::vector<SymbolId> seq;
    seq.reserve(names.size());
    for (const auto& n : names) seq.push_back(alphabet->id(n));
    return Genome(std::move(alphabet), std::move(seq));
}

Genome Genome::from_chars(AlphabetPtr alphabet, std::string_view text) {
    std::vector<SymbolId> seq;
    seq.reserve(text.size());
    for (const char ch : text) seq.push_back(alphabet->id(std::string(1, ch)));
    return Genome(std::move(alphabet), std::move(seq));
}

SymbolId Genome::at(std::size_t pos) const {
    if (pos < 1 || pos > seq_.size())
        throw IndexError("position " + std::to_string(pos) + " outside [1, " +
                         std::to_string(seq_.size()) + "]");
    return seq_[pos - 1];
}

std::string Genome::str() const {
    const bool compact = alphabet_->single_char();
    std::string out;
    for (std::size_t k = 0; k < seq_.size(); ++k) {
        if (!compact && k > 0) out += ' ';
        out += alphabet_->name(seq_[k]);
    }
    return out;
}

Cnp::Cnp(AlphabetPtr alphabet, std::vector<Count> counts)
    : alphabet_(std::move(alphabet)), counts_(std::move(counts)) {
    if (counts_.size() != alphabet_->size())
        throw InputError("MalformedInput", "CNP has " + std::to_string(counts_.size()) +
                                               " components but the alphabet has " +
                                               std::to_string(alphabet_->size()) + " symbols");
}

Cnp Cnp::zero(AlphabetPtr alphabet) {
    const auto n = alphabet->size();
    return Cnp(std::move(alphabet), std::vector<Count>(n, 0));
}

Count Cnp::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

std::string Cnp::str() const {
    std::string out = "⟨";
    for (std::size_t k = 0; k < counts_.size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(counts_[k]);
    }
    return out + "⟩";
}

std::string to_string(const Event& e) {
    if (const auto* del = std::get_if<Deletion>(&e))
        return "del(" + std::to_string(del->i) + "," + std::to_string(del->j) + ")";
    const auto& dup = std::get<Duplication>(e);
    return "dup(" + std::to_string(dup.i) + "," + std::to_string(dup.j) + "," +
           std::to_string(dup.p) + ")";
}

std::string to_string(const EventSequence& events) {
    std::string out = "(";
    for (std::size_t k = 0; k < events.size(); ++k) {
        if (k > 0) out += ", ";
        out += to_string(events[k]);
    }
    return out + ")";
}

void validate_event(const Event& e, std::size_t n) {
    std::visit(
        [n](const auto& ev) {
            if (ev.i < 1 || ev.i > ev.j || ev.j > n)
                throw IndexError("span [" + std::to_string(ev.i) + ", " + std::to_string(ev.j) +
                                 "] invalid for genome of length " + std::to_string(n));
        },
        e);
    if (const auto* dup = std::get_if<Duplication>(&e)) {
        if (dup->p > n)
            throw IndexError("insertion point " + std::to_string(dup->p) + " beyond length " +
                             std::to_string(n));
        if (dup->p + 1 > dup->i && dup->p < dup->j)
            throw InsideCopyError("insertion point " + std::to_string(dup->p) +
                                  " lies inside the copied span [" + std::to_string(dup->i) +
                                  ", " + std::to_string(dup->j) + "]");
    }
}

Cnp cnp_of(const Genome& g) {
    std::vector<Count> counts(g.alphabet()->size(), 0);
    for (const SymbolId s : g.seq()) ++counts[s];
    return Cnp(g.alphabet(), std::move(counts));
}

Genome apply_event(const Genome& g, const Event& e) {
    std::vector<SymbolId> seq = g.seq();
    apply_event_in_place(seq, e);
    return Genome(g.alphabet(), std::move(seq));
}

Genome apply_deletion(const Genome& g, std::size_t i, std::size_t j) {
    return apply_event(g, Deletion{i, j});
}

Genome apply_duplication(const Genome& g, std::size_t i, std::size_t j, std::size_t p) {
    return apply_event(g, Duplication{i, j, p});
}

Genome apply_sequence(const Genome& g, const EventSequence& events) {
    std::vector<SymbolId> seq = g.seq();
    for (std::size_t k = 0; k < events.size(); ++k) {
        try {
            apply_event_in_place(seq, events[k]);
        } catch (EventError& err) {
            err.set_event_index(k);
            throw;
        }
    }
    return Genome(g.alphabet(), std::move(seq));
}

Genome remove_symbol(const Genome& g, const std::string& symbol) {
    const SymbolId s = g.alphabet()->id(symbol);
    std::vector<SymbolId> seq;
    std::copy_if(g.seq().begin(), g.seq().end(), std::back_inserter(seq),
                 [s](SymbolId x) { return x != s; });
    return Genome(g.alphabet(), std::move(seq));
}

Cnp zero_symbol(const Cnp& c, const std::string& symbol) {
    std::vector<Count> counts = c.counts();
    counts[c.alphabet()->id(symbol)] = 0;
    return Cnp(c.alphabet(), std::move(counts));
}

OriginTaggedGenome::OriginTaggedGenome(const Genome& g) : alphabet_(g.alphabet()) {
    chars_.reserve(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) chars_.push_back({g.seq()[k], k + 1});
}

void OriginTaggedGenome::apply(const EventSequence& events) {
    for (std::size_t k = 0; k < events.size(); ++k) {
        try {
            apply_event_in_place(chars_, events[k]);
        } catch (EventError& err) {
            err.set_event_index(k);
            throw;
        }
    }
}

Genome OriginTaggedGenome::erase_origins() const {
    std::vector<SymbolId> seq;
    seq.reserve(chars_.size());
    for (const auto& c : chars_) seq.push_back(c.symbol);
    return Genome(alphabet_, std::move(seq));
}

OriginTaggedGenome with_origins(const Genome& g) { return OriginTaggedGenome(g); }

std::vector<std::size_t> surviving_origins(const Genome& g, const EventSequence& events) {
    OriginTaggedGenome tagged(g);
    tagged.apply(events);
    std::vector<bool> alive(g.size() + 1, false);
    for (const auto& c : tagged.chars()) alive[c.origin] = true;
    std::vector<std::size_t> out;
    for (std::size_t p = 1; p <= g.size(); ++p)
        if (alive[p]) out.push_back(p);
    return out;
}

}  // namespace cnpkit
