#pragma once

#include <stdexcept>
#include <string>

namespace compnum {

/// Input that could not be parsed (edge list, graph6, certificate, JSON).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural precondition of an operation does not hold for the input.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration or search hit its configured budget and gave up.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace compnum
