#pragma once

#include <stdexcept>
#include <string>

namespace bispec {

// Base of every error thrown by the library. The CLI maps the subclasses
// onto exit codes (input error vs. mathematical inconsistency).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad dimensions, unparsable values.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// The input is well-formed but mathematically inconsistent with the
// requested computation.
class MathError : public Error {
 public:
  using Error::Error;
};

class QuadraticRelationViolated : public MathError {
 public:
  using MathError::MathError;
};

class SeedInconsistent : public MathError {
 public:
  using MathError::MathError;
};

class KNotInvertible : public MathError {
 public:
  using MathError::MathError;
};

class NotNilpotent : public MathError {
 public:
  using MathError::MathError;
};

class HypothesisViolated : public MathError {
 public:
  using MathError::MathError;
};

class EvalAtPole : public MathError {
 public:
  using MathError::MathError;
};

class TruncationExceeded : public MathError {
 public:
  using MathError::MathError;
};

class SingularMatrix : public MathError {
 public:
  using MathError::MathError;
};

class PotentialNotAutonomous : public MathError {
 public:
  using MathError::MathError;
};

// Negative verdicts. Kept apart from MathError so callers can tell "your
// input is broken" from "the answer is no".
class NotAMember : public Error {
 public:
  using Error::Error;
};

class SignConventionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace bispec
