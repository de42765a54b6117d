#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linwidth {

enum class ErrorCode {
  size_limit_exceeded,
  invalid_label,
  duplicate_label,
  unknown_vertex,
  duplicate_edge_label,
  negative_weight,
  unknown_element,
  unknown_label,
  ground_set_mismatch,
  non_efficient_seed,
  not_validated,
  invalid_ordering,
  syntax_error,
  missing_value_line,
  validation_failed,
  system_name_mismatch,
  unknown_system,
  malformed_certificate,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const noexcept { return code_; }
  // 1-based source line for parse errors, 0 otherwise.
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace linwidth
