#pragma once

#include <stdexcept>
#include <string>

namespace wst {

enum class ErrorCode {
  invalid_weights,
  invalid_config,
  backend_unavailable,
  script_miss,
  malformed_response,
  category_out_of_range,
  action_out_of_range,
  group_too_small,
  empty_batch,
  non_finite_gradient,
  empty_input,
  parse_error,
  duplicate_id,
  missing_field,
  version_mismatch,
  corrupt_checkpoint,
  missing_direct_baseline,
  io_error,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the whole library; the code carries the
/// machine-checkable error kind, the message the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wst
