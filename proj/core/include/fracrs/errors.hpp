#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace fracrs {

enum class Errc {
  not_prime,
  not_irreducible,
  basis_not_independent,
  field_mismatch,
  division_by_zero,
  zero_polynomial,
  duplicate_abscissa,
  inexact_division,
  degree_too_high,
  length_exceeds_field,
  bad_evaluation_set,
  sets_not_disjoint,
  insufficient_sets,
  row_dimension_overflow,
  length_mismatch,
  alpha_out_of_range,
  too_many_errors,
  bad_config,
  unsupported,
};

const char* errc_name(Errc c);

/// Thrown for construction and precondition violations. Decoding failures are
/// not exceptional; they travel as Outcome values below.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

enum class FailureReason {
  no_solution,
  not_t_valid,
  row_underdetermined,
  inconsistent,
  degree_bound,
  inexact_division,
  self_check_mismatch,
};

/// Stable string tag for reports and CLI output.
const char* failure_tag(FailureReason r);

struct DecodeFailure {
  FailureReason reason;
  std::string detail;
};

/// Either a result or a reason-tagged decoding failure.
template <class T>
class Outcome {
 public:
  Outcome(T value) : v_(std::move(value)) {}
  Outcome(DecodeFailure f) : v_(std::move(f)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }
  const T& value() const { return std::get<T>(v_); }
  T& value() { return std::get<T>(v_); }
  const DecodeFailure& failure() const { return std::get<DecodeFailure>(v_); }

 private:
  std::variant<T, DecodeFailure> v_;
};

}  // namespace fracrs
