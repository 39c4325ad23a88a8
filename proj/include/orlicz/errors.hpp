#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

/// Argument outside the mathematical domain of an operation (e.g. t < 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed or inconsistent configuration: bad grids, unresolved atoms,
/// unknown families, unparseable scenario files.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold for the inputs.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// rho(f/r) stayed infinite for every tested r.
class NotInSpaceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No admissible lambda_n was found while building a dominating function.
class CriterionNotAchievedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical identity that must hold on every run was violated.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace orlicz
