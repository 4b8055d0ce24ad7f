#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opineq {

enum class ErrorKind {
  not_hermitian,
  spectrum_out_of_interval,
  invalid_interval,
  domain_violation,
  dimension_mismatch,
  interval_mismatch,
  normalization_violation,
  not_unit_state,
  argument_order,
  non_positive_spectrum,
  not_similarly_ordered,
  config_invalid,
  unknown_theorem,
  parse_error,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace opineq
