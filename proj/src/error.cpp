#include "instanton/error.hpp"

namespace instanton {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::NonInvertibleDenominator: return "non_invertible_denominator";
    case ErrorCode::PoleAtExpansionPoint: return "pole_at_expansion_point";
    case ErrorCode::InvalidBrieskornData: return "invalid_brieskorn_data";
    case ErrorCode::NonFreeAction: return "non_free_action";
    case ErrorCode::InvalidSeifertPair: return "invalid_seifert_pair";
    case ErrorCode::NotInstantonEnergy: return "not_instanton_energy";
    case ErrorCode::InconsistentInvariants: return "inconsistent_invariants";
    case ErrorCode::LevelNotCoprime: return "level_not_coprime";
    case ErrorCode::NotIsolatedFixedPoint: return "not_isolated_fixed_point";
    case ErrorCode::SingularTerm: return "singular_term";
    case ErrorCode::RhoTableIncomplete: return "rho_table_incomplete";
    case ErrorCode::DegenerateRotationPair: return "degenerate_rotation_pair";
    case ErrorCode::SphereFixedFiberwise: return "sphere_fixed_fiberwise";
    case ErrorCode::LiftWeightsRequired: return "lift_weights_required";
    case ErrorCode::HypothesesViolated: return "hypotheses_violated";
    case ErrorCode::SearchOverBudget: return "search_over_budget";
    case ErrorCode::ReconstructionFailed: return "reconstruction_failed";
    case ErrorCode::Internal: return "internal";
  }
  return "internal";
}

}  // namespace instanton
