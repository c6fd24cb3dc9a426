#pragma once

#include <stdexcept>
#include <string>

namespace rslab {

/// Operands live in different rings (variables or cutoffs differ).
struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Input outside an operation's domain (non-dominant weight, bad constant term, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Requested degree or index beyond what was computed.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Two routes that must agree did not. Always a bug or a bad input table.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Formula does not exist for this family (e.g. index of an odd-dimensional manifold).
struct NotApplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Holonomy representation tables produced a negative multiplicity.
struct ModelDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rslab
