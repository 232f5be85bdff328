#pragma once

#include <optional>
#include <string>
#include <vector>

#include "instanton/exactnum/rational.hpp"
#include "instanton/seifert/seifert.hpp"

namespace instanton {

enum class ConnectionKind { Trivial, Reducible, Irreducible };

std::string_view to_string(ConnectionKind kind);

/// A flat SU(2) connection on Sigma or on a quotient Q.
///
/// cs is the Chern-Simons invariant mod 1 in [0, 1); minus_cs() is the
/// (0, 1] representative of -cs that the flat-connection tables print.
struct FlatConnection {
  ConnectionKind kind = ConnectionKind::Trivial;
  std::string name = "theta";
  /// Rotation numbers of an irreducible connection, 0 < l_i < 2a_i.
  Triple labels{};
  /// Representatives of the rotation numbers fed to the Chern-Simons formula.
  Triple representative{};
  /// Holonomy integer of a reducible connection on Q, 0 <= k < p.
  std::int64_t holonomy = 0;
  /// Image of the central fiber class, +1 or -1 (irreducible connections).
  int central_sign = 1;
  Rational cs;
  int h0 = 3;
  int h1 = 0;
  std::optional<int> mu;
  std::optional<Rational> rho;

  static FlatConnection trivial();

  Rational minus_cs() const;
  /// h_alpha = h0 + h1, the cohomology count in the dimension formulas.
  int h() const { return h0 + h1; }
  /// Dimension of the stabilizer: 3 for theta, 1 reducible, 0 irreducible.
  int stab_dim() const;
  bool is_trivial() const { return kind == ConnectionKind::Trivial; }
};

/// Result of the irreducible Chern-Simons formula.
struct IrreducibleCs {
  Rational cs;        ///< CS mod 1 in [0, 1)
  Rational minus_cs;  ///< -CS in (0, 1]
  Triple representative{};
  /// e = sum l_i a/a_i from the labels; minus_cs at level 1 equals e^2/(4a) mod 1.
  std::int64_t numerator = 0;
  /// "formula" when a representative triple reproduces e^2/(4a) through the
  /// displayed formula, "numerator" when the level-1 value falls back to e^2/(4a).
  std::string convention = "formula";
};

/// Seifert invariants used to read off rotation-number parities: each b_i is
/// moved by a multiple of a_i so that it is even whenever a_i is odd, and b
/// absorbs the shifts. Same manifold, different presentation.
SeifertManifold label_presentation(const SeifertManifold& sigma);

/// Angle criterion: an irreducible representation with x_i conjugate to
/// exp(i pi l_i/a_i) and central sign eta exists iff the parities
/// (-1)^{l_i} = eta^{b_i} hold and the three angles, with the third replaced by
/// its supplement when eta^b = -1, satisfy the strict spherical triangle
/// inequalities.
bool irreducible_exists(const SeifertManifold& sigma, const Triple& labels, int eta);

/// Floer index of an irreducible connection where it is tabulated
/// (Sigma(2,3,5): (1,2,2) -> 5, (1,2,4) -> 1).
std::optional<int> known_floer_index(const SeifertManifold& sigma, const Triple& labels);

/// All irreducible flat SU(2) connections of the level-1 sphere, sorted by
/// label triple and named alpha1, alpha2, ... The Floer index is attached
/// when tabulated.
std::vector<FlatConnection> enumerate_irreducible(const SeifertManifold& sigma);

/// The displayed irreducible formula
///   -sum (rho_i l_i^2 + l_i)/a_i + (b + sum beta_i/a_i)/4,  rho_i beta_i = -1 mod a_i,
/// evaluated literally for Seifert pairs (a_i, beta_i). Throws InvalidSeifertPair
/// when some beta_i is not invertible mod a_i.
Rational auckly_irreducible_value(std::int64_t b, const Triple& a, const Triple& beta,
                                  const Triple& ell);

/// Chern-Simons invariant of the irreducible connection with the given labels
/// on the level-1 sphere (p = 1) or on its Z_p quotient. The representative
/// triple is chosen on the sphere (see representative_triple) and reused on Q.
/// Without a representative the sphere value is e^2/(4a) and the quotient
/// value is unavailable (InconsistentInvariants).
IrreducibleCs cs_irreducible(const SeifertManifold& sigma, const Triple& labels,
                             std::int64_t p = 1);

/// Among the eight choices l_i or 2a_i - l_i, the first (bitmask order) whose
/// formula value agrees with e^2/(4a) mod 1; nullopt if none does.
std::optional<Triple> representative_triple(const SeifertManifold& sigma, const Triple& labels);

/// CS of the reducible connection alpha(k) on Q: n0 k/p mod 1 with n0 a = k mod p.
Rational cs_reducible(const QuotientSpace& q, std::int64_t k);

/// Builds the reducible connection on Q with holonomy k.
FlatConnection reducible_connection(const QuotientSpace& q, std::int64_t k);

/// Minimal positive representative of CS(beta) - CS(alpha) mod 1; 1 when equal.
Rational energy_class(const FlatConnection& alpha, const FlatConnection& beta);

/// Least e > 0 with e^2/(4 a1a2a3) = ell mod 1. Throws NotInstantonEnergy.
std::int64_t energy_numerator(const Rational& ell, const SeifertManifold& sigma);

}  // namespace instanton
