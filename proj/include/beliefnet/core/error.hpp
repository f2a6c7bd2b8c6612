#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace beliefnet {

enum class ErrorKind {
  InvalidArgument,
  CycleDetected,
  UnknownVariable,
  UnknownLevel,
  IncompleteAssignment,
  MalformedFile,
  VersionMismatch,
  Io,
  RaggedRow,
  MissingColumn,
  UnmappedToken,
  NonBinaryMember,
  UnassignedVariable,
  UnsatisfiableConstraints,
  EmptyStrengths,
  ZeroProbabilityEvidence,
  DegenerateTarget,
  SaturatedParameter,
  Config,
  Workspace,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library. `index()` carries the row index for
// RaggedRow and the byte offset for MalformedFile when one is known.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace beliefnet
