#pragma once

#include <cstdint>
#include <string>

#include "instanton/exactnum/rational.hpp"

namespace instanton {

/// Element of the prime field Z/p. Only primes p >= 5 are accepted.
class Residue {
 public:
  Residue(std::int64_t value, std::int64_t p);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  Residue inverse() const;
  Residue pow(std::int64_t e) const;
  /// Symmetric representative in (-p/2, p/2).
  std::int64_t signed_value() const;

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator/(const Residue& o) const;
  Residue operator-() const;

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.p_ == b.p_ && a.value_ == b.value_;
  }

  std::string to_string() const { return std::to_string(value_); }

 private:
  void check_same_field(const Residue& o) const;

  std::int64_t value_;
  std::int64_t p_;
};

/// Throws Error(InvalidArgument) unless p is a prime >= 5.
void require_field_prime(std::int64_t p);

/// numerator * denominator^{-1} mod p. Throws NonInvertibleDenominator when p
/// divides the denominator.
Residue residue_of_rational(const Rational& q, std::int64_t p);

}  // namespace instanton
