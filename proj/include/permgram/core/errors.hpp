#pragma once

#include <stdexcept>
#include <string>

namespace permgram {

// Operands built over different variable sets were combined.
class VariableSetMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was asked for a value it cannot represent exactly
// (half-integer power at an evaluation point, zero to a negative power, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Brute-force enumeration requested past the configured size cap.
class CapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

} // namespace permgram
