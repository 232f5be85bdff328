#pragma once

#include <set>
#include <string>
#include <vector>

#include "instanton/exactnum/rational.hpp"
#include "instanton/flatconn/flatconn.hpp"
#include "instanton/seifert/seifert.hpp"

namespace instanton {

/// Euler characteristic and signature of the negative-definite E8 plumbing.
inline constexpr int kE8Euler = 9;
inline constexpr int kE8Signature = -8;

/// Formal dimension 8l - (3/2)(chi + sig) - (h1 + h0)/2 + rho/2 of the moduli
/// space on an end manifold X limiting to alpha. Throws InconsistentInvariants
/// when rho is unknown or the result is not an integer.
std::int64_t dim_end(const Rational& ell, const FlatConnection& alpha, int chi, int sig);

/// Formal dimension 8l - (h_alpha + h_beta)/2 + (rho_beta - rho_alpha)/2 on the cylinder.
std::int64_t dim_cylinder(const Rational& ell, const FlatConnection& alpha,
                          const FlatConnection& beta);

/// mu(alpha) - mu(beta) - dim Stab(beta) reduced into [0, 8).
int floer_dim_mod8(const FlatConnection& alpha, const FlatConnection& beta);

enum class PieceKind { End, Cylinder };

struct ModuliPiece {
  PieceKind kind = PieceKind::End;
  std::string source;  ///< empty for the end piece
  std::string target;
  Rational energy;
  std::int64_t dim = 0;
};

struct SplittingChain {
  std::string label;
  std::vector<ModuliPiece> pieces;
  Rational total_charge;

  std::vector<Rational> energies() const;
  std::vector<std::int64_t> dims() const;
};

struct SplittingOptions {
  int chi = kE8Euler;
  int sig = kE8Signature;
};

/// All weak-limit decompositions of a charge-total_charge moduli space on X
/// whose formal dimensions add up to target_dim.
///
/// A chain is an end piece on X limiting to alpha_0 followed by k >= 1
/// cylinder pieces alpha_0 -> ... -> theta. Cylinder pieces carry positive
/// energy congruent to the CS difference and dimension >= 1; intermediate
/// limits are irreducible; a cylinder piece leaving theta ends the chain at
/// theta; the end piece has energy congruent to CS(alpha_0), dimension >= 0,
/// and the flat trivial end piece (energy 0 at theta) counts as a point.
/// Chains are sorted (alpha_0 by label with theta last, then piece count,
/// then targets and energies) and labelled A, B, C, ...
std::vector<SplittingChain> enumerate_splittings(const std::vector<FlatConnection>& connections,
                                                 const Rational& total_charge,
                                                 std::int64_t target_dim,
                                                 const SplittingOptions& options = {});

/// {e mod p, -e mod p}. Requires p a prime >= 7.
std::set<std::int64_t> holonomy_filter(std::int64_t e, std::int64_t p);

struct ObstructionVerdict {
  bool obstructed = false;
  Rational quotient_energy;  ///< 4l/p
  std::string reason;
};

/// Obstructed iff the reduced denominator of 4l/p does not divide a1a2a3.
/// Throws LevelNotCoprime when gcd(p, a1a2a3) > 1.
ObstructionVerdict invariant_connection_obstruction(const Rational& ell,
                                                    const SeifertManifold& sigma, std::int64_t p);

enum class WeightLocation { OwnFiber, OtherFixedPoint };

/// Z/2p weight of the isotropy representation on the adjoint line, reported as
/// min(w, -w mod 2p): |b - a| over the point's own fiber, |a + b| elsewhere.
/// Throws NotIsolatedFixedPoint when a or b is 0 mod p.
std::int64_t isotropy_weight(std::int64_t a, std::int64_t b, std::int64_t p,
                             WeightLocation location);

struct TrivialSplittingVerdict {
  bool obstructed = false;
  std::vector<std::string> steps;
};

/// A lift over M_0(X,theta) x M_1(theta,theta) would need a + b = +-(b - a)
/// mod p, forcing 2a = 0 or 2b = 0. Obstructed unless one of those holds.
TrivialSplittingVerdict trivial_splitting_obstruction(std::int64_t a, std::int64_t b,
                                                      std::int64_t p);

}  // namespace instanton
