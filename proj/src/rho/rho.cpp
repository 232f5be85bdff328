#include "instanton/rho/rho.hpp"

#include <numeric>

#include "instanton/error.hpp"
#include "instanton/exactnum/cyclotomic.hpp"

namespace instanton {
namespace {

std::int64_t field_order_for(const QuotientSpace& q) {
  std::int64_t m = q.p;
  for (auto ai : q.base.a) m = std::lcm(m, ai);
  return m;
}

// Sparse element of the group ring Q[t]/(t^m - 1): (exponent, coefficient).
using Sparse = std::vector<std::pair<std::int64_t, Rational>>;

// Terms accumulate in the group ring; one reduction mod Phi_m at the end.
class GroupRingSum {
 public:
  explicit GroupRingSum(std::int64_t m) : m_(m), acc_(static_cast<std::size_t>(m)) {}

  // w = t^k as an element.
  Sparse root(std::int64_t k) const { return {{mod_floor(k, m_), Rational(1)}}; }

  // sin^2 x = (2 - w - 1/w)/4 where w = exp(2ix) = t^k.
  Sparse sin_sq(std::int64_t k) const {
    return {{0, Rational(1, 2)}, {mod_floor(k, m_), Rational(-1, 4)},
            {mod_floor(-k, m_), Rational(-1, 4)}};
  }

  // 1/(w - 1) = (1/d) sum_j j w^j for w = t^k of exact order d > 1.
  Sparse inverse_minus_one(std::int64_t k) const {
    const std::int64_t kk = mod_floor(k, m_);
    const std::int64_t d = m_ / std::gcd(kk, m_);
    Sparse out;
    for (std::int64_t j = 1; j < d; ++j) out.emplace_back(mod_floor(j * kk, m_), Rational(j, d));
    return out;
  }

  // cot x = i (w + 1)/(w - 1); returns (w + 1)/(w - 1), the factor i is applied by callers.
  Sparse cot_over_i(std::int64_t k) const {
    return mul(Sparse{{0, Rational(1)}, {mod_floor(k, m_), Rational(1)}}, inverse_minus_one(k));
  }

  Sparse mul(const Sparse& x, const Sparse& y) const {
    std::vector<Rational> dense(static_cast<std::size_t>(m_));
    std::vector<bool> used(static_cast<std::size_t>(m_), false);
    for (const auto& [ex, cx] : x) {
      for (const auto& [ey, cy] : y) {
        const auto e = static_cast<std::size_t>((ex + ey) % m_);
        dense[e] += cx * cy;
        used[e] = true;
      }
    }
    Sparse out;
    for (std::size_t e = 0; e < dense.size(); ++e) {
      if (used[e] && !dense[e].is_zero()) out.emplace_back(static_cast<std::int64_t>(e), dense[e]);
    }
    return out;
  }

  void add(const Sparse& x, const Rational& scale) {
    for (const auto& [e, c] : x) acc_[static_cast<std::size_t>(e)] += c * scale;
  }

  CyclotomicElement reduce() const { return CyclotomicElement(m_, acc_); }

 private:
  std::int64_t m_;
  std::vector<Rational> acc_;
};

void check_holonomy(const QuotientSpace& q, std::int64_t l) {
  if (l < 0 || l >= q.p) {
    throw Error(ErrorCode::InvalidArgument, "holonomy must lie in [0, p)", std::to_string(l));
  }
}

}  // namespace

RhoConventions rho_conventions(const QuotientSpace& q) {
  RhoConventions c;
  c.field_order = field_order_for(q);
  return c;
}

Rational rho_reducible(const QuotientSpace& q, std::int64_t l) {
  check_holonomy(q, l);
  const std::int64_t p = q.p;
  const std::int64_t m = field_order_for(q);
  GroupRingSum sum(m);
  const std::int64_t step_p = m / p;
  const std::int64_t a = q.base.product();

  for (std::int64_t k = 1; k < p; ++k) {
    const Sparse s = sum.sin_sq(step_p * k * l);
    sum.add(s, Rational(-2, p));
    // csc^2 x = -4w/(w - 1)^2
    const Sparse inv = sum.inverse_minus_one(step_p * k);
    const Sparse csc = sum.mul(sum.mul(sum.root(step_p * k), sum.mul(inv, inv)), s);
    sum.add(csc, Rational(-8, a * p));
  }

  for (int i = 0; i < 3; ++i) {
    const std::int64_t ai = q.base.a[i];
    const std::int64_t bi = q.base.b_pairs[i];
    const std::int64_t step_a = m / ai;
    for (std::int64_t m2 = 1; m2 < ai; ++m2) {
      const std::int64_t kx = mod_floor(step_a * m2, m);
      const Sparse cx = sum.cot_over_i(kx);
      for (std::int64_t m1 = 0; m1 < p; ++m1) {
        const std::int64_t weight_k = mod_floor(step_p * m1 * l, m);
        if (weight_k == 0) continue;  // sin^2 factor vanishes
        const std::int64_t ky = mod_floor(step_p * m1 - step_a * m2 * bi, m);
        if (kx == 0 || ky == 0) {
          throw Error(ErrorCode::SingularTerm, "singular term in the rho sum",
                      "m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) +
                          " i=" + std::to_string(i + 1));
        }
        // cot x cot y = i^2 (...)(...) = -(...)(...)
        const Sparse term = sum.mul(cx, sum.mul(sum.cot_over_i(ky), sum.sin_sq(weight_k)));
        sum.add(term, Rational(-2, p * ai));
      }
    }
  }
  const CyclotomicElement total = sum.reduce();
  if (!total.is_rational()) {
    throw Error(ErrorCode::Internal, "rho sum did not reduce to a rational number",
                q.to_text() + " l=" + std::to_string(l));
  }
  return total.constant_term();
}

Rational rho_irreducible(const SeifertManifold& sigma, const Triple& labels) {
  if (sigma.a == Triple{2, 3, 5}) {
    if (labels == Triple{1, 2, 2}) return Rational(-97, 15);
    if (labels == Triple{1, 2, 4}) return Rational(-73, 15);
  }
  throw Error(ErrorCode::RhoTableIncomplete, "rho table incomplete for this manifold",
              sigma.to_text() + " (" + std::to_string(labels[0]) + "," +
                  std::to_string(labels[1]) + "," + std::to_string(labels[2]) + ")");
}

std::vector<FlatConnection> sphere_connections(const SeifertManifold& sigma) {
  std::vector<FlatConnection> out{FlatConnection::trivial()};
  for (auto c : enumerate_irreducible(sigma)) {
    c.rho = rho_irreducible(sigma, c.labels);
    out.push_back(std::move(c));
  }
  return out;
}

std::int64_t quotient_cylinder_dim(const QuotientSpace& q, const Rational& ell,
                                   const Rational& rho_alpha, std::int64_t l) {
  const Rational value = Rational(8) * ell / Rational(q.p) - Rational(1, 2) +
                         (rho_reducible(q, mod_floor(l, q.p)) - rho_alpha) * Rational(1, 2);
  if (!value.is_integer()) {
    throw Error(ErrorCode::InconsistentInvariants, "inconsistent rho input: dimension " +
                                                       value.to_string() + " is not an integer",
                rho_alpha.to_string());
  }
  return value.numerator().get_si();
}

Rational solve_quotient_rho(const QuotientSpace& q, const Rational& ell, std::int64_t l,
                            std::int64_t dim) {
  return rho_reducible(q, mod_floor(l, q.p)) + Rational(16) * ell / Rational(q.p) - Rational(1) -
         Rational(2 * dim);
}

}  // namespace instanton
