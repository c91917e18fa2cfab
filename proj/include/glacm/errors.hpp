#pragma once

#include <stdexcept>
#include <string>

namespace glacm {

/// An input lies outside the domain of an operation (e.g. a label whose
/// extension parameter is not in the box [0, delta]).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value was produced under a different weight quadruple than the one
/// passed to the operation.
class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation has no formula for this input (stable Homs out of
/// non-Auslander sources).
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace glacm
