#include "instanton/exactnum/series.hpp"

#include <algorithm>
#include <sstream>

#include "instanton/error.hpp"

namespace instanton {

TruncatedSeries::TruncatedSeries(int order) : low_(order + 1), order_(order) {}

TruncatedSeries::TruncatedSeries(int low, std::vector<Rational> coeffs, int order)
    : low_(low), order_(order), coeffs_(std::move(coeffs)) {
  const int keep = std::max(0, order_ - low_ + 1);
  if (static_cast<int>(coeffs_.size()) > keep) coeffs_.resize(static_cast<std::size_t>(keep));
  normalize();
}

void TruncatedSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  low_ += static_cast<int>(lead);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) low_ = order_ + 1;
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  return {0, {c}, order};
}

TruncatedSeries TruncatedSeries::from_t_polynomial(const QPolynomial& p, int order) {
  return {0, p.taylor_shift(1).coeffs(), order};
}

Rational binomial(const Rational& r, int k) {
  Rational acc(1);
  for (int j = 0; j < k; ++j) acc = acc * (r - Rational(j)) / Rational(j + 1);
  return acc;
}

TruncatedSeries TruncatedSeries::t_power(const Rational& r, int order) {
  std::vector<Rational> c;
  for (int k = 0; k <= order; ++k) c.push_back(binomial(r, k));
  return {0, std::move(c), order};
}

Rational TruncatedSeries::coeff(int k) const {
  if (k > order_) {
    throw Error(ErrorCode::Internal, "coefficient of u^" + std::to_string(k) +
                                         " beyond truncation order " + std::to_string(order_));
  }
  const int idx = k - low_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(idx)];
}

int TruncatedSeries::valuation() const { return low_; }

int TruncatedSeries::pole_order() const { return std::max(0, -low_); }

std::vector<Rational> TruncatedSeries::principal_part() const {
  std::vector<Rational> out;
  for (int k = -pole_order(); k < 0; ++k) out.push_back(coeff(k));
  return out;
}

std::vector<Rational> TruncatedSeries::regular_part() const {
  std::vector<Rational> out;
  for (int k = 0; k <= order_; ++k) out.push_back(coeff(k));
  return out;
}

TruncatedSeries TruncatedSeries::truncate(int order) const {
  if (order > order_) {
    throw Error(ErrorCode::Internal, "cannot extend a truncated series");
  }
  return {low_, coeffs_, order};
}

TruncatedSeries TruncatedSeries::shift(int m) const { return {low_ + m, coeffs_, order_ + m}; }

TruncatedSeries TruncatedSeries::inverse() const {
  const int v = valuation();
  if (v > order_) {
    throw Error(ErrorCode::DivisionByZero, "inverse of a series with no known nonzero term");
  }
  const int rel = order_ - v;
  std::vector<Rational> g(static_cast<std::size_t>(rel) + 1);
  const Rational inv0 = coeffs_[0].inverse();
  g[0] = inv0;
  for (int k = 1; k <= rel; ++k) {
    Rational acc;
    for (int i = 1; i <= k && i < static_cast<int>(coeffs_.size()); ++i) {
      acc += coeffs_[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(k - i)];
    }
    g[static_cast<std::size_t>(k)] = -acc * inv0;
  }
  return {-v, std::move(g), -v + rel};
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  const int order = std::min(order_, o.order_);
  const int low = std::min(low_, o.low_);
  if (low > order) return TruncatedSeries(order);
  std::vector<Rational> c(static_cast<std::size_t>(order - low + 1));
  for (int k = low; k <= order; ++k) c[static_cast<std::size_t>(k - low)] = coeff(k) + o.coeff(k);
  return {low, std::move(c), order};
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + (-o); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  const int vf = valuation(), vg = o.valuation();
  const int order = std::min(order_ + vg, o.order_ + vf);
  const int low = vf + vg;
  if (low > order) return TruncatedSeries(order);
  std::vector<Rational> c(static_cast<std::size_t>(order - low + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      const std::size_t idx = i + j;
      if (idx >= c.size()) break;
      c[idx] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return {low, std::move(c), order};
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  for (auto& x : v) x *= c;
  return {low_, std::move(v), order_};
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = low_; k <= order_; ++k) {
    const Rational c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")u^" << k;
  }
  if (first) os << "0";
  os << " + O(u^" << order_ + 1 << ")";
  return os.str();
}

TruncatedSeries series_of_rational_function(const QPolynomial& numer, const QPolynomial& denom,
                                            int order, bool allow_pole) {
  if (denom.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "denominator polynomial is zero");
  }
  if (numer.is_zero()) return TruncatedSeries(order);
  const QPolynomial n_shift = numer.taylor_shift(1);
  const QPolynomial d_shift = denom.taylor_shift(1);
  const int n_val = numer.root_multiplicity(1);
  const int d_val = denom.root_multiplicity(1);
  const int lead = n_val - d_val;
  if (lead < 0 && !allow_pole) {
    throw Error(ErrorCode::PoleAtExpansionPoint,
                "pole at expansion point of order " + std::to_string(-lead));
  }
  const int rel = order - lead;
  if (rel < 0) return TruncatedSeries(order);
  auto unit_part = [rel](const QPolynomial& shifted, int val) {
    std::vector<Rational> c(shifted.coeffs().begin() + val, shifted.coeffs().end());
    return TruncatedSeries(0, std::move(c), rel);
  };
  return (unit_part(n_shift, n_val) / unit_part(d_shift, d_val)).shift(lead);
}

}  // namespace instanton
