#include "instanton/flatconn/flatconn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "instanton/error.hpp"

namespace instanton {
namespace {

std::string triple_text(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
         ")";
}

int sign_power(int eta, std::int64_t e) { return (eta == -1 && (e % 2 != 0)) ? -1 : 1; }

void require_sphere(const SeifertManifold& sigma) {
  if (sigma.level != 1) {
    throw Error(ErrorCode::InvalidArgument, "operation requires the level-1 sphere",
                sigma.to_text());
  }
}

}  // namespace

std::string_view to_string(ConnectionKind kind) {
  switch (kind) {
    case ConnectionKind::Trivial: return "trivial";
    case ConnectionKind::Reducible: return "reducible";
    case ConnectionKind::Irreducible: return "irreducible";
  }
  return "trivial";
}

FlatConnection FlatConnection::trivial() {
  FlatConnection c;
  c.mu = -3;
  c.rho = Rational(0);
  return c;
}

Rational FlatConnection::minus_cs() const { return (-cs).frac_positive(); }

int FlatConnection::stab_dim() const {
  switch (kind) {
    case ConnectionKind::Trivial: return 3;
    case ConnectionKind::Reducible: return 1;
    case ConnectionKind::Irreducible: return 0;
  }
  return 0;
}

SeifertManifold label_presentation(const SeifertManifold& sigma) {
  SeifertManifold out = sigma;
  for (int i = 0; i < 3; ++i) {
    if (out.a[i] % 2 != 0 && out.b_pairs[i] % 2 != 0) out = out.shift_pair(i, 1);
  }
  return out;
}

bool irreducible_exists(const SeifertManifold& sigma, const Triple& labels, int eta) {
  const SeifertManifold pres = label_presentation(sigma);
  std::array<double, 3> theta{};
  for (int i = 0; i < 3; ++i) {
    if (labels[i] <= 0 || labels[i] >= pres.a[i]) return false;
    const int parity = labels[i] % 2 == 0 ? 1 : -1;
    if (parity != sign_power(eta, pres.b_pairs[i])) return false;
    theta[i] = std::numbers::pi * static_cast<double>(labels[i]) / static_cast<double>(pres.a[i]);
  }
  const double phi = sign_power(eta, pres.b) == 1 ? theta[2] : std::numbers::pi - theta[2];
  // The angles are rational multiples of pi with denominators dividing 2a;
  // a margin well below pi/(2a) separates strict from non-strict inequalities.
  const double eps = 1e-9;
  const double lo = std::abs(theta[0] - theta[1]);
  const double hi = std::min(theta[0] + theta[1], 2 * std::numbers::pi - theta[0] - theta[1]);
  return phi > lo + eps && phi < hi - eps;
}

std::optional<int> known_floer_index(const SeifertManifold& sigma, const Triple& labels) {
  if (sigma.a != Triple{2, 3, 5}) return std::nullopt;
  if (labels == Triple{1, 2, 2}) return 5;
  if (labels == Triple{1, 2, 4}) return 1;
  return std::nullopt;
}

std::vector<FlatConnection> enumerate_irreducible(const SeifertManifold& sigma) {
  require_sphere(sigma);
  validate_multiplicities(sigma.a);
  std::vector<std::pair<Triple, int>> found;
  for (int eta : {-1, 1}) {
    for (std::int64_t l1 = 1; l1 < sigma.a[0]; ++l1) {
      for (std::int64_t l2 = 1; l2 < sigma.a[1]; ++l2) {
        for (std::int64_t l3 = 1; l3 < sigma.a[2]; ++l3) {
          if (irreducible_exists(sigma, {l1, l2, l3}, eta)) found.push_back({{l1, l2, l3}, eta});
        }
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<FlatConnection> out;
  for (const auto& [labels, eta] : found) {
    FlatConnection c;
    c.kind = ConnectionKind::Irreducible;
    c.name = "alpha" + std::to_string(out.size() + 1);
    c.labels = labels;
    c.central_sign = eta;
    c.h0 = 0;
    c.h1 = 0;
    const IrreducibleCs cs = cs_irreducible(sigma, labels);
    c.cs = cs.cs;
    c.representative = cs.representative;
    c.mu = known_floer_index(sigma, labels);
    out.push_back(std::move(c));
  }
  return out;
}

Rational auckly_irreducible_value(std::int64_t b, const Triple& a, const Triple& beta,
                                  const Triple& ell) {
  Rational acc;
  Rational euler(b);
  for (int i = 0; i < 3; ++i) {
    if (gcd64(beta[i], a[i]) != 1) {
      throw Error(ErrorCode::InvalidSeifertPair, "invalid Seifert pair",
                  "(" + std::to_string(a[i]) + "," + std::to_string(beta[i]) + ")");
    }
    const std::int64_t rho = mod_floor(-inverse_mod(mod_floor(beta[i], a[i]), a[i]), a[i]);
    acc -= Rational(rho * ell[i] * ell[i] + ell[i], a[i]);
    euler += Rational(beta[i], a[i]);
  }
  return acc + euler * Rational(1, 4);
}

std::optional<Triple> representative_triple(const SeifertManifold& sigma,
                                            const Triple& labels) {
  require_sphere(sigma);
  const std::int64_t a = sigma.product();
  std::int64_t e = 0;
  for (int i = 0; i < 3; ++i) e += labels[i] * (a / sigma.a[i]);
  const Rational target = Rational(e * e, 4 * a).frac();
  for (int mask = 0; mask < 8; ++mask) {
    Triple ell = labels;
    for (int i = 0; i < 3; ++i) {
      if (mask & (1 << i)) ell[i] = 2 * sigma.a[i] - labels[i];
    }
    const Rational value = auckly_irreducible_value(sigma.b, sigma.a, sigma.b_pairs, ell);
    if (value.frac() == target) return ell;
  }
  return std::nullopt;
}

IrreducibleCs cs_irreducible(const SeifertManifold& sigma, const Triple& labels, std::int64_t p) {
  require_sphere(sigma);
  IrreducibleCs out;
  if (labels[0] % (2 * sigma.a[0]) == 0 && labels[1] % (2 * sigma.a[1]) == 0 &&
      labels[2] % (2 * sigma.a[2]) == 0) {
    out.minus_cs = Rational(1);
    return out;
  }
  const std::int64_t a = sigma.product();
  for (int i = 0; i < 3; ++i) out.numerator += labels[i] * (a / sigma.a[i]);
  const auto rep = representative_triple(sigma, labels);
  if (!rep) {
    if (p != 1) {
      throw Error(ErrorCode::InconsistentInvariants,
                  "no rotation-number representative matches the instanton numerator",
                  sigma.to_text() + " " + triple_text(labels));
    }
    out.convention = "numerator";
    out.representative = labels;
    out.minus_cs = Rational(out.numerator * out.numerator, 4 * a).frac_positive();
    out.cs = (-out.minus_cs).frac();
    return out;
  }
  out.representative = *rep;
  const Triple beta{p * sigma.b_pairs[0], p * sigma.b_pairs[1], p * sigma.b_pairs[2]};
  const Rational value = auckly_irreducible_value(p * sigma.b, sigma.a, beta, out.representative);
  // The formula computes -CS in the orientation of the flat-connection tables.
  out.minus_cs = value.frac_positive();
  out.cs = (-value).frac();
  return out;
}

Rational cs_reducible(const QuotientSpace& q, std::int64_t k) {
  if (k < 0 || k >= q.p) {
    throw Error(ErrorCode::InvalidArgument, "holonomy must lie in [0, p)", std::to_string(k));
  }
  const std::int64_t a = mod_floor(q.base.product(), q.p);
  std::int64_t n0 = 0;
  while (mod_floor(n0 * a, q.p) != k) ++n0;
  return Rational(n0 * k, q.p).frac();
}

FlatConnection reducible_connection(const QuotientSpace& q, std::int64_t k) {
  FlatConnection c;
  c.kind = ConnectionKind::Reducible;
  c.name = "beta" + std::to_string(k);
  c.holonomy = k;
  c.cs = cs_reducible(q, k);
  c.h0 = 1;
  c.h1 = 0;
  return c;
}

Rational energy_class(const FlatConnection& alpha, const FlatConnection& beta) {
  return (beta.cs - alpha.cs).frac_positive();
}

std::int64_t energy_numerator(const Rational& ell, const SeifertManifold& sigma) {
  if (ell.sign() <= 0 || ell > Rational(1)) {
    throw Error(ErrorCode::InvalidArgument, "energy must lie in (0, 1]", ell.to_string());
  }
  const std::int64_t a = sigma.product();
  const Rational target = ell.frac();
  for (std::int64_t e = 1; e <= 2 * a; ++e) {
    if (Rational(e * e, 4 * a).frac() == target) return e;
  }
  throw Error(ErrorCode::NotInstantonEnergy, "energy class not of instanton type",
              ell.to_string());
}

}  // namespace instanton
