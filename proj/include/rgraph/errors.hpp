#pragma once

#include <stdexcept>
#include <string>

namespace rgraph {

/// Bad argument to an operation (empty cut side, unknown vertex, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called on an input outside its contract, e.g. a
/// reduction asked to run on a graph that is not an r-graph.
class PreconditionViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A lifting plan does not match the graph it is applied to.
class InvalidPlan : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact search ran out of its node budget before deciding.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph or certificate text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Something that a proven structural statement rules out happened anyway.
class InternalDefect : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace rgraph
