#pragma once

#include <stdexcept>
#include <string>

namespace rapsolve {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file: bad JSON, missing keys, wrong JSON types.
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally valid input whose values violate the model invariants
// (shape mismatches, out-of-range reliabilities, non-integer costs, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// The maximum configuration u is not reliable enough, so no configuration is.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

// A subsystem whose upper bounds sum to zero can never be non-empty.
class EmptySubsystemError : public Error {
public:
    using Error::Error;
};

// A user-supplied budget below the cost of the cheapest admissible system.
class BudgetError : public Error {
public:
    using Error::Error;
};

// The brute-force enumeration would exceed its point budget.
class EnumerationLimitError : public Error {
public:
    using Error::Error;
};

// Broken internal invariant: search-order violation, counter overflow.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace rapsolve
