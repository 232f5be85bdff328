#pragma once

#include <string>
#include <vector>

#include "instanton/exactnum/polynomial.hpp"
#include "instanton/exactnum/rational.hpp"

namespace instanton {

/// Truncated Laurent series in u = t - 1 with exact rational coefficients.
///
/// Holds the coefficients of u^k for low() <= k <= order(); everything above
/// order() is unknown and discarded by every ring operation. Negative
/// exponents form the principal part at t = 1.
class TruncatedSeries {
 public:
  /// The zero series known through u^order.
  explicit TruncatedSeries(int order);
  TruncatedSeries(int low, std::vector<Rational> coeffs, int order);

  static TruncatedSeries constant(const Rational& c, int order);
  /// p(1 + u) truncated at u^order.
  static TruncatedSeries from_t_polynomial(const QPolynomial& p, int order);
  /// (1 + u)^r = t^r for any rational exponent r.
  static TruncatedSeries t_power(const Rational& r, int order);

  int order() const { return order_; }
  int low() const { return low_; }
  /// Coefficient of u^k; zero below low(). Throws when k > order().
  Rational coeff(int k) const;

  /// Smallest exponent with nonzero coefficient; order() + 1 if none is known.
  int valuation() const;
  /// Pole order at t = 1 (0 for a regular series).
  int pole_order() const;
  /// Coefficients of u^{-pole_order()} .. u^{-1}.
  std::vector<Rational> principal_part() const;
  /// Coefficients of u^0 .. u^order().
  std::vector<Rational> regular_part() const;

  TruncatedSeries truncate(int order) const;
  TruncatedSeries shift(int m) const;  ///< multiply by u^m
  TruncatedSeries inverse() const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& c) const;
  TruncatedSeries operator/(const TruncatedSeries& o) const { return *this * o.inverse(); }
  TruncatedSeries operator-() const { return *this * Rational(-1); }

  std::string to_string() const;

 private:
  void normalize();

  int low_;
  int order_;
  std::vector<Rational> coeffs_;  // coeffs_[i] is the coefficient of u^{low_ + i}
};

/// Expansion of numer/denom about t = 1 through u^order.
///
/// When denom vanishes at t = 1 to higher order than numer the result carries
/// a principal part; pass allow_pole = false to reject that case with
/// Error(PoleAtExpansionPoint).
TruncatedSeries series_of_rational_function(const QPolynomial& numer, const QPolynomial& denom,
                                            int order, bool allow_pole = true);

/// Generalized binomial coefficient C(r, k) for rational r.
Rational binomial(const Rational& r, int k);

}  // namespace instanton
