#pragma once

#include <stdexcept>
#include <string>

namespace holecap {

// Bad input: violated precondition, schema error, geometry that does not fit.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical step could not produce a trustworthy answer.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hole touches or crosses the outer boundary.
struct ContainmentError : DomainError {
  using DomainError::DomainError;
};

// A singular value fell inside the rank guard band.
struct RankAmbiguityError : SolverError {
  using SolverError::SolverError;
};

}  // namespace holecap
