#include "etagap/errors.hpp"

namespace etagap {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::foreign_element: return "foreign-element";
    case ErrorCode::enumeration_too_large: return "enumeration-too-large";
    case ErrorCode::not_normal: return "not-normal";
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::unsupported_role: return "unsupported-role";
    case ErrorCode::group_mismatch: return "group-mismatch";
    case ErrorCode::precondition_violated: return "precondition-violated";
    case ErrorCode::not_central: return "not-central";
    case ErrorCode::not_a_p_group: return "not-a-p-group";
    case ErrorCode::even_prime: return "even-prime";
    case ErrorCode::invalid_prime: return "invalid-prime";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::unknown_generator: return "unknown-generator";
    case ErrorCode::format_error: return "format-error";
    case ErrorCode::not_invariant: return "not-invariant";
  }
  return "unknown";
}

}  // namespace etagap
