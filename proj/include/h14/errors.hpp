#pragma once

#include <stdexcept>
#include <string>

namespace h14 {

/// Base of every error raised by the toolkit. The CLI maps the two
/// families below onto its exit codes (usage → 2, precondition → 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller handed in something malformed: mismatched shapes, mixed fields,
/// a non-monomial substitution image, a bad config entry.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public UsageError {
 public:
  using UsageError::UsageError;
};

class FieldMismatchError : public UsageError {
 public:
  using UsageError::UsageError;
};

class ValidationError : public UsageError {
 public:
  using UsageError::UsageError;
};

class GradingError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Input is well formed but a mathematical hypothesis of the operation fails.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class LinealityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class IndependenceError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ConditionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace h14
