#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace faithrep {

enum class ErrorCode {
  invalid_parameters,
  cap_exceeded,
  not_generic,
  char2_unsupported,
  not_two_step,
  commutator_not_cyclic,
  non_square_index,
  pool_does_not_span,
  constraint_violation,
  not_subgroup,
  chi_not_homomorphism,
  modular_prime_not_found,
  overflow,
  parse_error,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace faithrep
