#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace anharmonic {

enum class ErrorKind {
  invalid_range,
  invalid_count,
  invalid_params,
  invalid_input,
  domain_violation,
  divergence,
  unsupported_form,
  inadmissible_alpha,
  truncation_insufficient,
  underdetermined,
  singular_jacobian,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_range: return "invalid-range";
    case ErrorKind::invalid_count: return "invalid-count";
    case ErrorKind::invalid_params: return "invalid-params";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::domain_violation: return "domain-violation";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::unsupported_form: return "unsupported-form";
    case ErrorKind::inadmissible_alpha: return "inadmissible-alpha";
    case ErrorKind::truncation_insufficient: return "truncation-insufficient";
    case ErrorKind::underdetermined: return "underdetermined";
    case ErrorKind::singular_jacobian: return "singular-jacobian";
  }
  return "unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace anharmonic
