#pragma once

#include <stdexcept>
#include <string>

namespace automdt {

/// Invalid scenario/utility/training configuration (bad field values).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite or malformed runtime inputs (e.g. NaN observations).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exploration log that never exercised some stage with >= 1 thread.
class InsufficientExplorationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Live environment failures (worker startup, inconsistent state).
class EnvironmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Training aborted (non-finite loss); the message names the diagnostic dump.
class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CheckpointFault {
  MissingFile,
  Corrupt,
  VersionMismatch,
  DimensionMismatch,
};

class CheckpointError : public std::runtime_error {
 public:
  CheckpointError(CheckpointFault fault, const std::string& message)
      : std::runtime_error(message), fault_(fault) {}
  CheckpointFault fault() const { return fault_; }

 private:
  CheckpointFault fault_;
};

}  // namespace automdt
