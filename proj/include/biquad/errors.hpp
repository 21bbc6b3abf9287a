#pragma once

#include <stdexcept>
#include <string>

namespace biquad {

// Invalid value for the domain (zero denominator, q_i = 0, violated side
// constraint, missing assignment symbol, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was invoked outside its stated precondition (classification of
// a non-PBW presentation, calculus construction on a non-smooth one, ...).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed presentation file.  Positions are 1-based.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}
};

}  // namespace biquad
