#include "ccbench/error.hpp"

namespace ccbench {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NonPositiveComponent: return "NonPositiveComponent";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::InvalidFraction: return "InvalidFraction";
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::CorruptRaster: return "CorruptRaster";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::GroundTruthInvalid: return "GroundTruthInvalid";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::EmptyUsableRegion: return "EmptyUsableRegion";
    case ErrorCode::DegenerateGradient: return "DegenerateGradient";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::UnknownEstimator: return "UnknownEstimator";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::MissingImageId: return "MissingImageId";
    case ErrorCode::ExtraImageId: return "ExtraImageId";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NoRecords: return "NoRecords";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ccbench
