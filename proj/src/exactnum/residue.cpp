#include "instanton/exactnum/residue.hpp"

#include "instanton/error.hpp"

namespace instanton {

void require_field_prime(std::int64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument,
                "modulus must be a prime >= 5", std::to_string(p));
  }
}

Residue::Residue(std::int64_t value, std::int64_t p) : p_(p) {
  require_field_prime(p);
  value_ = mod_floor(value, p);
}

Residue Residue::inverse() const {
  if (value_ == 0) {
    throw Error(ErrorCode::DivisionByZero, "inverse of zero residue mod " + std::to_string(p_));
  }
  return Residue(inverse_mod(value_, p_), p_);
}

Residue Residue::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  std::int64_t result = 1, base = value_;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Residue(result, p_);
}

std::int64_t Residue::signed_value() const {
  return value_ > p_ / 2 ? value_ - p_ : value_;
}

void Residue::check_same_field(const Residue& o) const {
  if (o.p_ != p_) {
    throw Error(ErrorCode::InvalidArgument, "residues from different fields");
  }
}

Residue Residue::operator+(const Residue& o) const {
  check_same_field(o);
  return Residue(value_ + o.value_, p_);
}
Residue Residue::operator-(const Residue& o) const {
  check_same_field(o);
  return Residue(value_ - o.value_, p_);
}
Residue Residue::operator*(const Residue& o) const {
  check_same_field(o);
  return Residue(value_ * o.value_ % p_, p_);
}
Residue Residue::operator/(const Residue& o) const { return *this * o.inverse(); }
Residue Residue::operator-() const { return Residue(-value_, p_); }

Residue residue_of_rational(const Rational& q, std::int64_t p) {
  require_field_prime(p);
  const BigInt bp(static_cast<long>(p));
  BigInt den = q.denominator() % bp;
  if (den == 0) {
    throw Error(ErrorCode::NonInvertibleDenominator,
                "non-invertible denominator: " + std::to_string(p) + " divides " +
                    q.denominator().get_str(),
                q.to_string());
  }
  BigInt num = q.numerator() % bp;
  if (num < 0) num += bp;
  const Residue n(num.get_si(), p);
  const Residue d(den.get_si(), p);
  return n / d;
}

}  // namespace instanton
