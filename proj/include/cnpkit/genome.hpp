#pragma once

// Alphabets, genomes, copy-number profiles and the two string events
// (deletion, duplication). Positions are 1-based and inclusive throughout.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "cnpkit/errors.hpp"

namespace cnpkit {

using SymbolId = std::uint32_t;
using Count = std::uint64_t;

/// Ordered list of distinct symbol names. The order fixes CNP component
/// order and every lexicographic tie-break.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    static std::shared_ptr<const Alphabet> make(std::vector<std::string> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& name(SymbolId id) const { return symbols_.at(id); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }

    /// Throws UnknownSymbol.
    SymbolId id(const std::string& name) const;
    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    /// True when every symbol name is exactly one byte long.
    bool single_char() const noexcept;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, SymbolId> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

class Genome {
public:
    Genome(AlphabetPtr alphabet, std::vector<SymbolId> seq);

    /// Parses a sequence of symbol names.
    static Genome from_names(AlphabetPtr alphabet, const std::vector<std::string>& names);
    /// Parses a string over a single-character alphabet, one symbol per byte.
    static Genome from_chars(AlphabetPtr alphabet, std::string_view text);

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    const std::vector<SymbolId>& seq() const noexcept { return seq_; }
    std::size_t size() const noexcept { return seq_.size(); }
    bool empty() const noexcept { return seq_.empty(); }

    /// 1-based access.
    SymbolId at(std::size_t pos) const;

    /// Symbols concatenated for single-character alphabets, space-separated
    /// otherwise.
    std::string str() const;

    bool operator==(const Genome& other) const {
        return same_alphabet(alphabet_, other.alphabet_) && seq_ == other.seq_;
    }

private:
    AlphabetPtr alphabet_;
    std::vector<SymbolId> seq_;
};

class Cnp {
public:
    Cnp(AlphabetPtr alphabet, std::vector<Count> counts);
    static Cnp zero(AlphabetPtr alphabet);

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    const std::vector<Count>& counts() const noexcept { return counts_; }
    Count operator[](SymbolId id) const { return counts_.at(id); }
    Count total() const noexcept;

    /// "⟨2,4,3⟩".
    std::string str() const;

    bool operator==(const Cnp& other) const {
        return same_alphabet(alphabet_, other.alphabet_) && counts_ == other.counts_;
    }

private:
    AlphabetPtr alphabet_;
    std::vector<Count> counts_;
};

struct Deletion {
    std::size_t i = 0;
    std::size_t j = 0;
    auto operator<=>(const Deletion&) const = default;
};

/// Copies [i, j] and inserts the copy after position p (p = 0 prepends).
struct Duplication {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t p = 0;
    auto operator<=>(const Duplication&) const = default;
};

using Event = std::variant<Deletion, Duplication>;
using EventSequence = std::vector<Event>;

std::string to_string(const Event& e);
std::string to_string(const EventSequence& events);

inline bool is_deletion(const Event& e) { return std::holds_alternative<Deletion>(e); }

/// Number of characters the event removes or inserts.
inline std::size_t span_length(const Event& e) {
    return std::visit([](const auto& ev) { return ev.j - ev.i + 1; }, e);
}

/// Throws IndexError / InsideCopyError when `e` is not applicable to a genome
/// of length `n`.
void validate_event(const Event& e, std::size_t n);

/// Applies an event to any sequence type in place. Used for plain and
/// origin-tagged genomes alike, so both follow the same index semantics.
template <class T>
void apply_event_in_place(std::vector<T>& seq, const Event& e) {
    validate_event(e, seq.size());
    if (const auto* del = std::get_if<Deletion>(&e)) {
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(del->i - 1),
                  seq.begin() + static_cast<std::ptrdiff_t>(del->j));
        return;
    }
    const auto& dup = std::get<Duplication>(e);
    std::vector<T> copy(seq.begin() + static_cast<std::ptrdiff_t>(dup.i - 1),
                        seq.begin() + static_cast<std::ptrdiff_t>(dup.j));
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(dup.p), copy.begin(), copy.end());
}

/// Writes seq<e> into `out` (reusing its capacity). No validation.
template <class T>
void apply_event_into(std::span<const T> seq, const Event& e, std::vector<T>& out) {
    out.clear();
    if (const auto* del = std::get_if<Deletion>(&e)) {
        out.insert(out.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(del->i - 1));
        out.insert(out.end(), seq.begin() + static_cast<std::ptrdiff_t>(del->j), seq.end());
        return;
    }
    const auto& dup = std::get<Duplication>(e);
    const auto at = [&](std::size_t k) { return seq.begin() + static_cast<std::ptrdiff_t>(k); };
    out.insert(out.end(), seq.begin(), at(dup.p));
    out.insert(out.end(), at(dup.i - 1), at(dup.j));
    out.insert(out.end(), at(dup.p), seq.end());
}

/// Visits every event applicable to a genome of length n in canonical order:
/// all deletions by (i, j), then all duplications by (i, j, p). The visitor
/// returns false to stop early.
template <class Visitor>
bool for_each_event(std::size_t n, bool with_duplications, Visitor&& visit) {
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            if (!visit(Event{Deletion{i, j}})) return false;
    if (!with_duplications) return true;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            for (std::size_t p = 0; p < i; ++p)
                if (!visit(Event{Duplication{i, j, p}})) return false;
            for (std::size_t p = j; p <= n; ++p)
                if (!visit(Event{Duplication{i, j, p}})) return false;
        }
    }
    return true;
}

Cnp cnp_of(const Genome& g);
Genome apply_deletion(const Genome& g, std::size_t i, std::size_t j);
Genome apply_duplication(const Genome& g, std::size_t i, std::size_t j, std::size_t p);
Genome apply_event(const Genome& g, const Event& e);
/// Left fold of `events`; the first invalid event is reported with its index.
Genome apply_sequence(const Genome& g, const EventSequence& events);

Genome remove_symbol(const Genome& g, const std::string& symbol);
Cnp zero_symbol(const Cnp& c, const std::string& symbol);

/// Genome whose characters remember the original position they descend from.
class OriginTaggedGenome {
public:
    struct Char {
        SymbolId symbol;
        std::size_t origin;
        bool operator==(const Char&) const = default;
    };

    explicit OriginTaggedGenome(const Genome& g);

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    const std::vector<Char>& chars() const noexcept { return chars_; }
    std::size_t size() const noexcept { return chars_.size(); }

    void apply(const Event& e) { apply_event_in_place(chars_, e); }
    void apply(const EventSequence& events);

    Genome erase_origins() const;

private:
    AlphabetPtr alphabet_;
    std::vector<Char> chars_;
};

OriginTaggedGenome with_origins(const Genome& g);

/// Original positions (sorted) that still have a descendant after `events`.
std::vector<std::size_t> surviving_origins(const Genome& g, const EventSequence& events);

}  // namespace cnpkit
