#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace etagap {

enum class ErrorCode {
  foreign_element,
  enumeration_too_large,
  not_normal,
  invalid_parameter,
  unsupported_role,
  group_mismatch,
  precondition_violated,
  not_central,
  not_a_p_group,
  even_prime,
  invalid_prime,
  parse_error,
  unknown_generator,
  format_error,
  not_invariant,
};

/// Stable machine-readable name, e.g. "foreign-element".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace etagap
