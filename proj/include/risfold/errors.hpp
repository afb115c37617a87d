#pragma once

#include <stdexcept>
#include <string>

namespace risfold {

/// Bad or inconsistent configuration input (file contents, CLI values).
/// Mapped to process exit code 2 by the CLI.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The effective channel collapsed to zero where a nonzero vector is required.
/// Mapped to process exit code 3 by the CLI.
class DegenerateChannelError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A value violates one of the optimization problem's constraints (fold angle
/// outside the feasible set, activation budget mismatch, ...).
class ConstraintViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace risfold
