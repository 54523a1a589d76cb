#pragma once

#include <stdexcept>
#include <string>

namespace lieper {

// Domain-level failure with a stable machine-readable code.
// Codes are what the CLI reports in its structured error JSON, so they stay
// short and snake_case: not_invariant, not_derivation, not_skew, not_closed,
// not_morphism, singular_twist, twist_mismatch, incompatible_kappa,
// order_bound_exceeded, boundary_mismatch, grid_too_coarse, step_out_of_patch,
// bad_input, degree_overflow.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

} // namespace lieper
