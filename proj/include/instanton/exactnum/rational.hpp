#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace instanton {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
/// Equality is structural because the representation is canonical.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& n);

  /// Parses "num/den" or "num". Throws Error(InvalidArgument) on bad input.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Largest integer not above the value.
  BigInt floor() const;
  /// Representative of the value mod 1 in [0, 1).
  Rational frac() const;
  /// Representative of the value mod 1 in (0, 1].
  Rational frac_positive() const;

  Rational inverse() const;
  Rational abs() const;
  double to_double() const { return value_.get_d(); }

  /// Lowest-terms "num/den", or just "num" when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Non-negative remainder of n modulo m (m > 0).
std::int64_t mod_floor(std::int64_t n, std::int64_t m);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);
bool is_prime(std::int64_t n);

}  // namespace instanton
