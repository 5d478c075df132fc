#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gcf {

enum class Errc {
  zero_denominator,
  negative_radicand,
  singular_matrix,
  projective_pole,
  no_root_in_interval,
  rational_root,
  not_sorted,
  bad_endpoints,
  too_few_points,
  not_unimodular,
  length_mismatch,
  bad_sign,
  out_of_domain,
  invalid_digit,
  step_budget_exceeded,
  no_valid_root,
  rational_fixed_point,
  not_quadratic,
  parse_error,
  file_error,
};

/// Stable identifier used in machine-readable output.
constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::zero_denominator: return "ZeroDenominator";
    case Errc::negative_radicand: return "NegativeRadicand";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::projective_pole: return "ProjectivePole";
    case Errc::no_root_in_interval: return "NoRootInInterval";
    case Errc::rational_root: return "RationalRoot";
    case Errc::not_sorted: return "NotSorted";
    case Errc::bad_endpoints: return "BadEndpoints";
    case Errc::too_few_points: return "TooFewPoints";
    case Errc::not_unimodular: return "NotUnimodular";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::bad_sign: return "BadSign";
    case Errc::out_of_domain: return "OutOfDomain";
    case Errc::invalid_digit: return "InvalidDigit";
    case Errc::step_budget_exceeded: return "StepBudgetExceeded";
    case Errc::no_valid_root: return "NoValidRoot";
    case Errc::rational_fixed_point: return "RationalFixedPoint";
    case Errc::not_quadratic: return "NotQuadratic";
    case Errc::parse_error: return "ParseError";
    case Errc::file_error: return "FileError";
  }
  return "Unknown";
}

/// Library exception. `index` locates the offending element when the error
/// refers to a position (partition point, input column, digit position);
/// `detail` carries an auxiliary exact value such as a determinant.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt,
        std::optional<std::string> detail = std::nullopt)
      : std::runtime_error(message),
        code_(code),
        index_(index),
        detail_(std::move(detail)) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }
  const std::optional<std::string>& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
  std::optional<std::string> detail_;
};

}  // namespace gcf
