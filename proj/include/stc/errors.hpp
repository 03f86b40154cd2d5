#pragma once

#include <stdexcept>
#include <string>

namespace stc {

// Malformed input: out-of-range ids, self-loops, duplicate edges, bad lists.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text document could not be parsed; line is 1-based (0 when unknown).
class ParseError : public ValidationError {
public:
    ParseError(int line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// An exact solver hit its configured enumeration cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (e.g. a non-satisfying assignment).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace stc
