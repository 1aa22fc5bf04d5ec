#pragma once

#include <stdexcept>
#include <string>

namespace phlab {

// Bad parameters supplied by a caller (n < 2, k >= 1, non-positive-definite metric, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// An input that is well-formed but violates an operation's geometric precondition.
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

// Two independent derivations of the same quantity disagree beyond tolerance.
class RouteMismatch : public std::runtime_error {
public:
    explicit RouteMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace phlab
