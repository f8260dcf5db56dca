#pragma once

#include <stdexcept>
#include <string>

namespace keller {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched variable counts, wrong tuple lengths, non-square inputs.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its mathematical hypothesis
/// (non-dominant map where dominance is required, non-Keller input, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: parse errors, relations that do not hold.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but carries no information (an all-zero
/// annihilating relation).
class DegenerateInputError : public InputError {
 public:
  using InputError::InputError;
};

/// The computation is outside what the toolkit handles (general cubic
/// recovery, symbolic paths beyond their size limits, infinite quotients).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Random specialization landed on a non-generic point too many times, or
/// the draws could not be reconciled by majority.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

/// A Gröbner pair/term cap or a rejection-sampling budget was hit.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not. Always a bug in this code
/// (or, for the conjecture checks, a counterexample candidate).
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace keller
