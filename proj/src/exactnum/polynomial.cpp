#include "instanton/exactnum/polynomial.hpp"

#include <map>
#include <sstream>

#include "instanton/error.hpp"

namespace instanton {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<std::int64_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPolynomial QPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational QPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational QPolynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPolynomial QPolynomial::taylor_shift(const Rational& shift) const {
  // Horner in the ring Q[t]: acc = acc * (t + shift) + c.
  std::vector<Rational> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<Rational> next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += acc[k];
      next[k] += acc[k] * shift;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return QPolynomial(std::move(acc));
}

int QPolynomial::root_multiplicity(const Rational& x) const {
  if (is_zero()) return -1;
  const QPolynomial shifted = taylor_shift(x);
  int m = 0;
  while (shifted.coeffs_[m].is_zero()) ++m;
  return m;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) v[k] += o.coeffs_[k];
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const { return *this + (-o); }

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator*(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  for (auto& x : v) x *= c;
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator-() const { return *this * Rational(-1); }

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[k] << ")";
    if (k > 0) os << "*t^" << k;
  }
  return os.str();
}

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& f, const QPolynomial& g) {
  if (g.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  }
  std::vector<Rational> rem = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {QPolynomial(), f};
  std::vector<Rational> quot(f.degree() - dg + 1);
  const Rational lead_inv = g.leading().inverse();
  for (int k = f.degree(); k >= dg; --k) {
    if (rem[k].is_zero()) continue;
    const Rational c = rem[k] * lead_inv;
    quot[k - dg] = c;
    for (int j = 0; j <= dg; ++j) rem[k - dg + j] -= c * g.coeffs()[j];
  }
  rem.resize(dg);
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

std::pair<QPolynomial, QPolynomial> extended_gcd_inverse(const QPolynomial& f,
                                                         const QPolynomial& g) {
  QPolynomial old_r = divmod(f, g).second, r = g;
  QPolynomial old_s = QPolynomial::constant(1), s;
  while (!r.is_zero()) {
    auto [q, rem] = divmod(old_r, r);
    old_r = std::exchange(r, rem);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r.is_zero()) return {old_r, old_s};
  const Rational lead_inv = old_r.leading().inverse();
  return {old_r * lead_inv, divmod(old_s * lead_inv, g).second};
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const QPolynomial& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive",
                std::to_string(n));
  }
  thread_local std::map<std::int64_t, QPolynomial> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  QPolynomial acc = QPolynomial::monomial(1, static_cast<std::size_t>(n)) - QPolynomial{1};
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) acc = divmod(acc, cyclotomic_polynomial(d)).first;
  }
  return cache.emplace(n, std::move(acc)).first->second;
}

}  // namespace instanton
