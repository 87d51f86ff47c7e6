#pragma once

#include <stdexcept>
#include <string>

namespace flowroots {

// Input text could not be parsed (bad graph file, bad rational, ...).
// The CLI maps this to exit code 2 (usage error).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input is well-formed but outside an operation's domain
// (bridged graph where a flow root profile was requested, separable
// graph passed to a Phi test, ...).  CLI exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration budget was exceeded.  CLI exit code 3.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace flowroots
