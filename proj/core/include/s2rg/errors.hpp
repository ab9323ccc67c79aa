#pragma once

#include <stdexcept>
#include <string>

namespace s2rg {

// Exit codes used by the CLI. Library code throws the matching exception
// type; tools/main.cpp translates them.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfigError = 2,
  kExitIoError = 3,
  kExitIncompatibleArtifact = 4,
};

// Bad run configuration: unknown keys, invalid values, unresolvable names.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failure: missing file, unwritable path, short read.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Artifact exists but cannot be used: unsupported format version,
// schema violation, or dimension mismatch between artifacts.
class ArtifactError : public std::runtime_error {
 public:
  enum class Kind { version_mismatch, schema_violation, dimension_mismatch };

  ArtifactError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Training diverged (NaN loss) or another numerical invariant broke.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace s2rg
