#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cusp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A record violates one of its invariants (bounds, signs, missing fields).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of an operation (parity, minimum size, non-finite input).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A target value lies outside the open range an operation can attain.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The belted-sum cusp formula requires both summands to be free of poking.
class PokingUnverifiedError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A chain graph that was required to be a forest contains a cycle.
class ChainCycleError : public Error {
 public:
  ChainCycleError(std::string message, std::vector<std::size_t> cycle)
      : Error(std::move(message)), cycle_(std::move(cycle)) {}

  /// Vertex ids along one cycle, in traversal order.
  const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::size_t> cycle_;
};

}  // namespace cusp
