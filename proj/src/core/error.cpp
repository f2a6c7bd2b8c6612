#include "beliefnet/core/error.hpp"

namespace beliefnet {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::UnknownLevel: return "UnknownLevel";
    case ErrorKind::IncompleteAssignment: return "IncompleteAssignment";
    case ErrorKind::MalformedFile: return "MalformedFile";
    case ErrorKind::VersionMismatch: return "VersionMismatch";
    case ErrorKind::Io: return "Io";
    case ErrorKind::RaggedRow: return "RaggedRow";
    case ErrorKind::MissingColumn: return "MissingColumn";
    case ErrorKind::UnmappedToken: return "UnmappedToken";
    case ErrorKind::NonBinaryMember: return "NonBinaryMember";
    case ErrorKind::UnassignedVariable: return "UnassignedVariable";
    case ErrorKind::UnsatisfiableConstraints: return "UnsatisfiableConstraints";
    case ErrorKind::EmptyStrengths: return "EmptyStrengths";
    case ErrorKind::ZeroProbabilityEvidence: return "ZeroProbabilityEvidence";
    case ErrorKind::DegenerateTarget: return "DegenerateTarget";
    case ErrorKind::SaturatedParameter: return "SaturatedParameter";
    case ErrorKind::Config: return "Config";
    case ErrorKind::Workspace: return "Workspace";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      index_(index) {}

}  // namespace beliefnet
