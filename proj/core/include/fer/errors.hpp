#pragma once

#include <stdexcept>
#include <string>

namespace fer {

/// Base class for all pipeline errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad user input that validation should have caught: malformed files,
/// out-of-range parameters, unknown names. CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A manifest row or referenced file could not be ingested.
class IngestionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A record carries a label that cannot be mapped to an emotion.
class LabeledDataError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Manifest composition failed (duplicate ids across parts).
class CompositionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A stage was configured with inputs it cannot meaningfully run on.
class ConfigurationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// No face detection reached the confidence threshold.
class FaceNotFoundError : public Error {
 public:
  FaceNotFoundError(const std::string& record_id, const std::string& msg)
      : Error(msg), record_id_(record_id) {}
  const std::string& record_id() const { return record_id_; }

 private:
  std::string record_id_;
};

/// Values outside a documented numeric range.
class RangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A model spec whose arithmetic does not close.
class SpecError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Training aborted (non-finite loss, unusable data).
class TrainingError : public Error {
 public:
  using Error::Error;
};

/// Weights and architecture do not match.
class AssemblyError : public Error {
 public:
  using Error::Error;
};

/// Checkpoint incompatible with the requested spec.
class IncompatibilityError : public Error {
 public:
  using Error::Error;
};

/// Evaluation could not run (empty test set and the like).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// A k-fold partition cannot be built.
class PartitionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace fer
