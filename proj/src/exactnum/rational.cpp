#include "instanton/exactnum/rational.hpp"

#include <ostream>

#include "instanton/error.hpp"

namespace instanton {

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const BigInt& n) : value_(n) {}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den <= 0) {
      throw Error(ErrorCode::InvalidArgument, "denominator must be positive", s);
    }
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidArgument, "malformed rational", s);
  }
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const {
  return *this - Rational(floor());
}

Rational Rational::frac_positive() const {
  Rational f = frac();
  return f.is_zero() ? Rational(1) : f;
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "inverse of zero rational");
  }
  return Rational(mpq_class(1) / value_);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  }
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

std::int64_t mod_floor(std::int64_t n, std::int64_t m) {
  const std::int64_t r = n % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::NonInvertibleDenominator,
                "no inverse of " + std::to_string(a) + " modulo " + std::to_string(m));
  }
  return mod_floor(old_s, m);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace instanton
