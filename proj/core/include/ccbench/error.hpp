#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccbench {

enum class ErrorCode {
  ZeroVector,
  NonPositiveComponent,
  EmptySample,
  InvalidFraction,
  MissingFile,
  CorruptRaster,
  SchemaMismatch,
  GroundTruthInvalid,
  DuplicateId,
  EmptyUsableRegion,
  DegenerateGradient,
  InvalidConfig,
  UnknownEstimator,
  ArityMismatch,
  MissingImageId,
  ExtraImageId,
  MalformedInput,
  NoRecords,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ccbench
