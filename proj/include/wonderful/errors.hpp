#pragma once

#include <stdexcept>
#include <string>

namespace wonderful {

/// Malformed input object (a block out of range, a non-partition, ...).
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside the domain of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed. Always a bug in this library
/// (or a counterexample to a combinatorial claim it relies on).
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wonderful
