#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddc {

/// Malformed input text (model file, .odd file, CSV). `line` is 1-based,
/// 0 when no line is known.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message
                                  : std::move(message)),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A model (or model document) violating its invariants.
class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two inputs whose attribute specs or orders do not match.
class IncompatibilityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Refusal to run an enumeration whose instance space exceeds the guard.
class GuardError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace oddc
