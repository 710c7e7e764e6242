#include "wst/errors.hpp"

namespace wst {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_weights: return "InvalidWeights";
    case ErrorCode::invalid_config: return "InvalidConfig";
    case ErrorCode::backend_unavailable: return "BackendUnavailable";
    case ErrorCode::script_miss: return "ScriptMiss";
    case ErrorCode::malformed_response: return "MalformedResponse";
    case ErrorCode::category_out_of_range: return "CategoryOutOfRange";
    case ErrorCode::action_out_of_range: return "ActionOutOfRange";
    case ErrorCode::group_too_small: return "GroupTooSmall";
    case ErrorCode::empty_batch: return "EmptyBatch";
    case ErrorCode::non_finite_gradient: return "NonFiniteGradient";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::duplicate_id: return "DuplicateId";
    case ErrorCode::missing_field: return "MissingField";
    case ErrorCode::version_mismatch: return "VersionMismatch";
    case ErrorCode::corrupt_checkpoint: return "CorruptCheckpoint";
    case ErrorCode::missing_direct_baseline: return "MissingDirectBaseline";
    case ErrorCode::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace wst
