#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphtensor {

/// Malformed graph text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Invalid argument to a library call (bad permutation, index out of range, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input is well formed but outside an operation's domain
/// (non-cubic graph for Tait colorings, graph too large for exhaustive planning).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A result that can only arise from a bug, e.g. a cyclotomic Hamiltonian
/// evaluation that is not a constant multiple of n.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace graphtensor
