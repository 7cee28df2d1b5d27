#pragma once

#include <stdexcept>
#include <string>

namespace netent {

/// Invalid user input: bad graph, partition, coupling or flag.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a formula (e.g. d >= 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A decomposition failed or produced values inconsistent with a
/// positive-definite potential matrix.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netent
