#pragma once

#include <stdexcept>
#include <string>

namespace lie2 {

/// Precondition violation on caller-supplied data (dimension mismatch, bad degree tag, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Algebra name unknown, file unreadable, or table malformed.
class AlgebraLoadError : public InputError {
 public:
  using InputError::InputError;
};

/// A structural axiom failed on concrete data; the message carries the witness.
class AxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lie2
