#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "instanton/exactnum/rational.hpp"

namespace instanton {

using Triple = std::array<std::int64_t, 3>;

/// Seifert presentation (b; (a1,b1), (a2,b2), (a3,b3)) of the Brieskorn sphere
/// Sigma(a1,a2,a3) scaled to level p: b + sum b_i/a_i = p/(a1 a2 a3).
///
/// Level 1 is the homology sphere itself. normalize() always produces b = 0;
/// other values of b only arise from shift_pair(), which moves a multiple of
/// a_i from b_i into b.
struct SeifertManifold {
  Triple a{};
  Triple b_pairs{};
  std::int64_t b = 0;
  std::int64_t level = 1;

  std::int64_t product() const { return a[0] * a[1] * a[2]; }
  /// b + sum b_i/a_i, which equals level/product() for valid data.
  Rational euler_sum() const;
  /// Replaces b_i by b_i + k*a_i and b by b - k.
  SeifertManifold shift_pair(int i, std::int64_t k) const;

  /// "sigma(2,3,5)@p=7", or "sigma(2,3,5)" at level 1.
  std::string to_text() const;
  friend bool operator==(const SeifertManifold&, const SeifertManifold&) = default;
};

/// The quotient Sigma/Z_p: Seifert pairs (a_i, p*b_i) built from the level-1
/// invariants of the sphere.
struct QuotientSpace {
  SeifertManifold base;
  std::int64_t p = 1;

  Triple pair_numerators() const;
  std::string to_text() const;
};

/// Canonical Seifert invariants at level p: b = 0, 0 < b_i < a_i for i = 1, 2,
/// b_3 forced by a2a3b1 + a1a3b2 + a1a2b3 = p.
/// Throws InvalidBrieskornData for multiplicities that are < 2 or not pairwise
/// coprime, NonFreeAction when gcd(a_i, p) > 1.
SeifertManifold normalize(const Triple& a, std::int64_t p = 1);

/// Throws NonFreeAction when p divides some a_i, InvalidArgument when p is not
/// a prime >= 5 or sigma is not at level 1.
QuotientSpace quotient(const SeifertManifold& sigma, std::int64_t p);

/// Checks the multiplicity conditions only (InvalidBrieskornData).
void validate_multiplicities(const Triple& a);

}  // namespace instanton
