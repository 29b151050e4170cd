#pragma once

#include <stdexcept>
#include <string>

namespace hmf {

// Input / domain validation failures (CLI exit code 2).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedField : DomainError {
  using DomainError::DomainError;
};
struct ZeroElement : DomainError {
  using DomainError::DomainError;
};
struct NotCoprime : DomainError {
  using DomainError::DomainError;
};
struct NotTotallyPositive : DomainError {
  using DomainError::DomainError;
};
struct NotInInverseDifferent : DomainError {
  using DomainError::DomainError;
};

// Numeric failures (CLI exit code 3).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleAtNonPositiveInteger : NumericError {
  using NumericError::NumericError;
};
struct NonConvergence : NumericError {
  using NumericError::NumericError;
};
struct QuadratureNonConvergence : NonConvergence {
  using NonConvergence::NonConvergence;
};
struct TruncationTooSmall : NumericError {
  using NumericError::NumericError;
};
struct DegenerateDenominator : NumericError {
  using NumericError::NumericError;
};

}  // namespace hmf
