#pragma once

#include <stdexcept>
#include <string>

namespace coloc {

/// Raised when inputs violate a documented precondition or invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Confidence of a rule whose antecedent has zero support. Distinct from a
/// confidence of zero: the quotient does not exist.
class UndefinedConfidenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace coloc
