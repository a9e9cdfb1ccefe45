#pragma once

#include <stdexcept>
#include <string>

namespace gammalab {

/// Malformed or out-of-range input (bad index, inconsistent table sizes).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction could not be completed for mathematical reasons
/// (ill-defined induced operation, missing common denominator, ...).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A post-construction verification failed; indicates a bug or a violated
/// hypothesis on the input.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gammalab
