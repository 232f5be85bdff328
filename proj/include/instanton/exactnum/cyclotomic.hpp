#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "instanton/exactnum/polynomial.hpp"
#include "instanton/exactnum/rational.hpp"

namespace instanton {

/// Element of Q(zeta_n) = Q[t]/(Phi_n), stored as the coefficient vector of
/// its reduced representative (length phi(n)). Every operation reduces
/// immediately, so equality is coefficient equality.
class CyclotomicElement {
 public:
  CyclotomicElement(std::int64_t order, std::vector<Rational> coeffs);

  static CyclotomicElement zero(std::int64_t order);
  static CyclotomicElement constant(std::int64_t order, const Rational& c);
  /// t^k for any integer k (negative exponents wrap mod n).
  static CyclotomicElement root_power(std::int64_t order, std::int64_t k);
  static CyclotomicElement from_polynomial(std::int64_t order, const QPolynomial& poly);

  std::int64_t order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  QPolynomial as_polynomial() const { return QPolynomial(coeffs_); }

  bool is_zero() const;
  /// True when the element lies in Q (only the constant coefficient is set).
  bool is_rational() const;
  Rational constant_term() const { return coeffs_.front(); }

  /// Galois image under t -> t^k, gcd(k, n) = 1.
  CyclotomicElement galois(std::int64_t k) const;

  /// Value at t = exp(2 pi i / n) in double precision.
  std::complex<double> to_complex() const;

  CyclotomicElement operator+(const CyclotomicElement& o) const;
  CyclotomicElement operator-(const CyclotomicElement& o) const;
  CyclotomicElement operator*(const CyclotomicElement& o) const;
  CyclotomicElement operator*(const Rational& c) const;
  CyclotomicElement operator-() const;
  CyclotomicElement& operator+=(const CyclotomicElement& o);

  friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;

  std::string to_string() const;

 private:
  void check_same_field(const CyclotomicElement& o) const;

  std::int64_t order_;
  std::vector<Rational> coeffs_;
};

/// Multiplicative inverse via the extended Euclidean algorithm against Phi_n.
/// Throws Error(DivisionByZero) with "division by zero in cyclotomic field".
CyclotomicElement field_invert(const CyclotomicElement& x);

CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b);

/// 1/(t^k - 1) for t^k != 1, from the closed form sum_{j<d} j w^j = d/(w - 1)
/// where w = t^k has exact order d.
CyclotomicElement inverse_root_minus_one(std::int64_t order, std::int64_t k);

/// Embeds an element of Q(zeta_n) into Q(zeta_m) for n | m (t -> t^{m/n}).
CyclotomicElement embed(const CyclotomicElement& x, std::int64_t target_order);

}  // namespace instanton
