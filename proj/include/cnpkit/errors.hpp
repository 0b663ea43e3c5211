#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cnpkit {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    /// Stable error name (e.g. "IndexError"), used by the CLI and tests.
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Input that violates a precondition: bad indices, unknown symbols,
/// mismatched alphabets, malformed documents.
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured size guard or search ceiling was hit. Never a wrong answer,
/// only a refusal to answer.
class GuardError : public Error {
public:
    GuardError(std::string kind, std::string guard, const std::string& message)
        : Error(std::move(kind), message), guard_(std::move(guard)) {}

    const std::string& guard() const noexcept { return guard_; }

private:
    std::string guard_;
};

/// Invalid event. When raised from a sequence replay, carries the offending
/// event's 0-based index within the sequence.
class EventError : public InputError {
public:
    using InputError::InputError;

    void set_event_index(std::size_t index);
    std::optional<std::size_t> event_index() const noexcept { return index_; }
    const char* what() const noexcept override;

private:
    std::optional<std::size_t> index_;
    std::string decorated_;
};

class IndexError : public EventError {
public:
    explicit IndexError(const std::string& message) : EventError("IndexError", message) {}
};

class InsideCopyError : public EventError {
public:
    explicit InsideCopyError(const std::string& message)
        : EventError("InsideCopyError", message) {}
};

inline InputError unknown_symbol(const std::string& name) {
    return InputError("UnknownSymbol", "unknown symbol '" + name + "'");
}

inline InputError alphabet_mismatch() {
    return InputError("AlphabetMismatch", "operands are defined over different alphabets");
}

/// Broken internal invariant; reaching it is a bug.
class InternalInvariantViolation : public Error {
public:
    explicit InternalInvariantViolation(const std::string& message)
        : Error("InternalInvariantViolation", message) {}
};

}  // namespace cnpkit
