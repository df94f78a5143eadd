#include "posetflow/error.hpp"

namespace posetflow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::EdgeMismatch: return "EdgeMismatch";
    case ErrorCode::ConservationViolated: return "ConservationViolated";
    case ErrorCode::NoSourceOrSink: return "NoSourceOrSink";
    case ErrorCode::UnsatisfiableLowerBound: return "UnsatisfiableLowerBound";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::MorphismUnverified: return "MorphismUnverified";
    case ErrorCode::NotAntichain: return "NotAntichain";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace posetflow
