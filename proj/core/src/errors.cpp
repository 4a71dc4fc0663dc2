#include "fracrs/errors.hpp"

namespace fracrs {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_prime: return "NotPrime";
    case Errc::not_irreducible: return "NotIrreducible";
    case Errc::basis_not_independent: return "BasisNotLinearlyIndependent";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::duplicate_abscissa: return "DuplicateAbscissa";
    case Errc::inexact_division: return "InexactDivision";
    case Errc::degree_too_high: return "DegreeTooHigh";
    case Errc::length_exceeds_field: return "LengthExceedsField";
    case Errc::bad_evaluation_set: return "BadEvaluationSet";
    case Errc::sets_not_disjoint: return "SetsNotDisjoint";
    case Errc::insufficient_sets: return "InsufficientSets";
    case Errc::row_dimension_overflow: return "RowDimensionOverflow";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::alpha_out_of_range: return "AlphaOutOfRange";
    case Errc::too_many_errors: return "TooManyErrors";
    case Errc::bad_config: return "BadConfig";
    case Errc::unsupported: return "Unsupported";
  }
  return "UnknownError";
}

const char* failure_tag(FailureReason r) {
  switch (r) {
    case FailureReason::no_solution: return "no_solution";
    case FailureReason::not_t_valid: return "not_t_valid";
    case FailureReason::row_underdetermined: return "row_underdetermined";
    case FailureReason::inconsistent: return "inconsistent";
    case FailureReason::degree_bound: return "degree_bound";
    case FailureReason::inexact_division: return "inexact_division";
    case FailureReason::self_check_mismatch: return "self_check_mismatch";
  }
  return "unknown";
}

}  // namespace fracrs
