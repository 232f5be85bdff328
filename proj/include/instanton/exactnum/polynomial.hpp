#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "instanton/exactnum/rational.hpp"

namespace instanton {

/// Polynomial with rational coefficients; index = degree. The zero polynomial
/// has no coefficients and degree -1.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs);
  QPolynomial(std::initializer_list<std::int64_t> coeffs);

  static QPolynomial monomial(const Rational& c, std::size_t degree);
  static QPolynomial constant(const Rational& c) { return monomial(c, 0); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  /// p(t + shift), computed exactly.
  QPolynomial taylor_shift(const Rational& shift) const;
  /// Multiplicity of the root at t = x (0 if p(x) != 0). Zero polynomial -> -1.
  int root_multiplicity(const Rational& x) const;

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial operator*(const Rational& c) const;
  QPolynomial operator-() const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division f = q*g + r with deg r < deg g. Throws on g = 0.
std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& f, const QPolynomial& g);

/// Returns (d, s) with d = gcd(f, g) (monic) and s*f = d (mod g).
std::pair<QPolynomial, QPolynomial> extended_gcd_inverse(const QPolynomial& f,
                                                         const QPolynomial& g);

/// Euler's totient.
std::int64_t euler_phi(std::int64_t n);

/// The n-th cyclotomic polynomial, computed by dividing t^n - 1 by Phi_d for
/// the proper divisors d of n. Results are memoized per thread.
const QPolynomial& cyclotomic_polynomial(std::int64_t n);

}  // namespace instanton
