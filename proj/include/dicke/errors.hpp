#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

// Argument outside the domain of a formula or operator (negative radicand,
// out-of-range Dicke label, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iterative numerics failed to reach the requested accuracy.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// RWA subspace scan hit its n_max cap before the stopping rule was satisfied.
class UnboundedSearchError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Photon-cutoff doubling exceeded its cap without converging.
class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace dicke
