#include "instanton/exactnum/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "instanton/error.hpp"

namespace instanton {
namespace {

// Rows k = 0..n-1 hold t^k mod Phi_n as integer coefficient vectors.
struct ReductionTable {
  std::size_t dim;
  std::vector<std::vector<std::int64_t>> rows;
};

const ReductionTable& reduction_table(std::int64_t n) {
  thread_local std::map<std::int64_t, ReductionTable> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  const QPolynomial& phi = cyclotomic_polynomial(n);
  const auto dim = static_cast<std::size_t>(phi.degree());
  ReductionTable table{dim, {}};
  table.rows.reserve(static_cast<std::size_t>(n));
  std::vector<std::int64_t> cur(dim, 0);
  cur[0] = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    table.rows.push_back(cur);
    // Multiply by t and reduce with the monic Phi_n.
    std::vector<std::int64_t> next(dim, 0);
    const std::int64_t carry = cur[dim - 1];
    for (std::size_t j = dim - 1; j > 0; --j) next[j] = cur[j - 1];
    next[0] = 0;
    if (carry != 0) {
      for (std::size_t j = 0; j < dim; ++j) {
        next[j] -= carry * phi.coeffs()[j].numerator().get_si();
      }
    }
    cur = std::move(next);
  }
  return cache.emplace(n, std::move(table)).first->second;
}

std::vector<Rational> reduce_folded(std::int64_t n, const std::vector<Rational>& folded) {
  const ReductionTable& table = reduction_table(n);
  std::vector<Rational> out(table.dim);
  for (std::size_t k = 0; k < folded.size(); ++k) {
    if (folded[k].is_zero()) continue;
    if (k < table.dim) {
      out[k] += folded[k];
      continue;
    }
    const auto& row = table.rows[k];
    for (std::size_t j = 0; j < table.dim; ++j) {
      if (row[j] != 0) out[j] += folded[k] * Rational(row[j]);
    }
  }
  return out;
}

}  // namespace

CyclotomicElement::CyclotomicElement(std::int64_t order, std::vector<Rational> coeffs)
    : order_(order) {
  if (order < 1) {
    throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  }
  std::vector<Rational> folded(static_cast<std::size_t>(order));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    folded[k % static_cast<std::size_t>(order)] += coeffs[k];
  }
  coeffs_ = reduce_folded(order, folded);
}

CyclotomicElement CyclotomicElement::zero(std::int64_t order) { return {order, {}}; }

CyclotomicElement CyclotomicElement::constant(std::int64_t order, const Rational& c) {
  return {order, {c}};
}

CyclotomicElement CyclotomicElement::root_power(std::int64_t order, std::int64_t k) {
  std::vector<Rational> v(static_cast<std::size_t>(mod_floor(k, order)) + 1);
  v.back() = 1;
  return {order, std::move(v)};
}

CyclotomicElement CyclotomicElement::from_polynomial(std::int64_t order,
                                                     const QPolynomial& poly) {
  return {order, poly.coeffs()};
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

CyclotomicElement CyclotomicElement::galois(std::int64_t k) const {
  if (gcd64(k, order_) != 1) {
    throw Error(ErrorCode::InvalidArgument, "Galois exponent must be a unit mod n");
  }
  std::vector<Rational> folded(static_cast<std::size_t>(order_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    folded[static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(j) * k, order_))] +=
        coeffs_[j];
  }
  return {order_, std::move(folded)};
}

std::complex<double> CyclotomicElement::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(order_);
    acc += coeffs_[k].to_double() * std::polar(1.0, angle);
  }
  return acc;
}

void CyclotomicElement::check_same_field(const CyclotomicElement& o) const {
  if (o.order_ != order_) {
    throw Error(ErrorCode::InvalidArgument, "cyclotomic elements of different orders");
  }
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& o) const {
  CyclotomicElement r = *this;
  r += o;
  return r;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
  check_same_field(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& o) const {
  return *this + (-o);
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& o) const {
  check_same_field(o);
  const auto n = static_cast<std::size_t>(order_);
  std::vector<Rational> folded(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      folded[(i + j) % n] += coeffs_[i] * o.coeffs_[j];
    }
  }
  CyclotomicElement r = zero(order_);
  r.coeffs_ = reduce_folded(order_, folded);
  return r;
}

CyclotomicElement CyclotomicElement::operator*(const Rational& c) const {
  CyclotomicElement r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

CyclotomicElement CyclotomicElement::operator-() const { return *this * Rational(-1); }

std::string CyclotomicElement::to_string() const {
  std::ostringstream os;
  os << "[order " << order_ << ":";
  for (const auto& c : coeffs_) os << " " << c;
  os << "]";
  return os.str();
}

CyclotomicElement field_invert(const CyclotomicElement& x) {
  if (x.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "division by zero in cyclotomic field");
  }
  const QPolynomial& phi = cyclotomic_polynomial(x.order());
  auto [g, s] = extended_gcd_inverse(x.as_polynomial(), phi);
  if (g.degree() != 0) {
    throw Error(ErrorCode::Internal, "cyclotomic polynomial not coprime to a nonzero element");
  }
  return CyclotomicElement::from_polynomial(x.order(), s);
}

CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b) {
  return a * field_invert(b);
}

CyclotomicElement inverse_root_minus_one(std::int64_t order, std::int64_t k) {
  const std::int64_t kk = mod_floor(k, order);
  const std::int64_t d = order / gcd64(kk, order);
  if (kk == 0 || d == 1) {
    throw Error(ErrorCode::DivisionByZero, "division by zero in cyclotomic field");
  }
  std::vector<Rational> folded(static_cast<std::size_t>(order));
  const Rational inv_d(1, d);
  for (std::int64_t j = 1; j < d; ++j) {
    folded[static_cast<std::size_t>(mod_floor(j * kk, order))] += Rational(j) * inv_d;
  }
  return {order, std::move(folded)};
}

CyclotomicElement embed(const CyclotomicElement& x, std::int64_t target_order) {
  if (target_order % x.order() != 0) {
    throw Error(ErrorCode::InvalidArgument, "embedding requires n | m");
  }
  const std::int64_t step = target_order / x.order();
  std::vector<Rational> v(static_cast<std::size_t>(target_order));
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    v[k * static_cast<std::size_t>(step)] += x.coeffs()[k];
  }
  return {target_order, std::move(v)};
}

}  // namespace instanton
