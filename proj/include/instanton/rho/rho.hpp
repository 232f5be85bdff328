#pragma once

#include <string>
#include <vector>

#include "instanton/exactnum/rational.hpp"
#include "instanton/flatconn/flatconn.hpp"
#include "instanton/seifert/seifert.hpp"

namespace instanton {

/// Reading of the reducible rho sum: inner index m2 = 1..a_i - 1, the m1 = 0
/// column included (it vanishes), b_i the level-1 Seifert numerators of the
/// sphere, evaluated in Q(zeta_M) with M = lcm(p, a1, a2, a3).
struct RhoConventions {
  std::string inner_range = "m2 = 1 .. a_i - 1";
  std::string m1_zero_column = "included (vanishes: sin^2 factor is zero)";
  std::string seifert_numerators = "level-1 b_i of the sphere";
  std::int64_t field_order = 0;
};

RhoConventions rho_conventions(const QuotientSpace& q);

/// Exact value of the Kwasik-Lawson sum for the reducible connection with
/// SO(3) holonomy l on Q = Sigma/Z_p, computed in the cyclotomic field of
/// order lcm(p, a1, a2, a3). The total is checked to be rational. Requires
/// 0 <= l < p; throws SingularTerm if a cotangent pole carries weight.
Rational rho_reducible(const QuotientSpace& q, std::int64_t l);

/// Precision of the numeric oracle: INSTANTON_ARITH_PRECISION_BITS, default 300.
int precision_bits_from_env();

struct NumericRho {
  std::string approximate;  ///< 40 significant digits
  Rational reconstructed;
  int precision_bits = 0;
  BigInt denominator_bound;
};

/// The same sum in MPFR floating point, followed by continued-fraction
/// reconstruction with denominator bound 4p(a1a2a3)^2. Throws
/// ReconstructionFailed when no convergent within the bound is close enough.
NumericRho rho_reducible_numeric(const QuotientSpace& q, std::int64_t l, int precision_bits);

/// Best rational approximation of the decimal string x with denominator at
/// most bound, accepted only if it agrees with x to within 2^{-tolerance_bits}.
Rational reconstruct_rational(const std::string& decimal, const BigInt& bound, int precision_bits,
                              int tolerance_bits);

/// Tabulated rho of an irreducible connection on the sphere (Sigma(2,3,5):
/// -97/15 for (1,2,2), -73/15 for (1,2,4)). Throws RhoTableIncomplete otherwise.
Rational rho_irreducible(const SeifertManifold& sigma, const Triple& labels);

/// theta followed by the irreducible connections, each carrying its tabulated rho.
std::vector<FlatConnection> sphere_connections(const SeifertManifold& sigma);

/// Formal dimension 8l/p - 1/2 + (rho_beta(l) - rho_alpha)/2 of the quotient
/// cylinder moduli space from irreducible alpha to the reducible beta with
/// holonomy l (taken mod p). Throws InconsistentInvariants ("inconsistent rho
/// input") when the result is not an integer.
std::int64_t quotient_cylinder_dim(const QuotientSpace& q, const Rational& ell,
                                   const Rational& rho_alpha, std::int64_t l);

/// The rho_alpha(Q) forced by a prescribed dimension:
/// rho_beta(l) + 16l/p - 1 - 2 dim.
Rational solve_quotient_rho(const QuotientSpace& q, const Rational& ell, std::int64_t l,
                            std::int64_t dim);

}  // namespace instanton
