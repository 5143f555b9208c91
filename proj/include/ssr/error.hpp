#pragma once

#include <stdexcept>
#include <string>

namespace ssr {

// Error kinds shared across modules. The CLI maps them onto exit codes.

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but numerically unusable (e.g. a constant signal).
struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported file content (WAV, manifest, checkpoint).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Configuration inconsistent with itself or with a checkpoint.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite values appeared during training or inference.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ssr
