#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetflow {

enum class ErrorCode {
  CycleDetected,
  NotGraded,
  NonPositiveWeight,
  UnknownElement,
  TooLargeForOracle,
  SizeLimit,
  SizeMismatch,
  EdgeMismatch,
  ConservationViolated,
  NoSourceOrSink,
  UnsatisfiableLowerBound,
  NotBipartite,
  MorphismUnverified,
  NotAntichain,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace posetflow
