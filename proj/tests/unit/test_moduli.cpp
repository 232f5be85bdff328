#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "instanton/error.hpp"
#include "instanton/moduli/moduli.hpp"
#include "instanton/rho/rho.hpp"

using namespace instanton;

namespace {

struct Sigma235 {
  SeifertManifold sigma = normalize({2, 3, 5});
  std::vector<FlatConnection> conns = sphere_connections(sigma);
  const FlatConnection& theta() const { return conns[0]; }
  const FlatConnection& a1() const { return conns[1]; }
  const FlatConnection& a2() const { return conns[2]; }
};

}  // namespace

TEST_CASE("end-manifold dimensions") {
  Sigma235 s;
  CHECK(dim_end(Rational(1), s.theta(), kE8Euler, kE8Signature) == 5);
  CHECK(dim_end(Rational(71, 120), s.a1(), kE8Euler, kE8Signature) == 0);
  CHECK(dim_end(Rational(119, 120), s.a2(), kE8Euler, kE8Signature) == 4);
  for (int l = 1; l <= 4; ++l) {
    CHECK(dim_end(Rational(l), s.theta(), kE8Euler, kE8Signature) == 8 * l - 3);
  }
  try {
    dim_end(Rational(1, 2), s.a1(), kE8Euler, kE8Signature);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentInvariants);
  }
  FlatConnection no_rho = s.a1();
  no_rho.rho.reset();
  CHECK_THROWS_AS(dim_end(Rational(71, 120), no_rho, 9, -8), Error);
}

TEST_CASE("cylinder dimensions and the mod 8 index") {
  Sigma235 s;
  CHECK(dim_cylinder(Rational(49, 120), s.a1(), s.theta()) == 5);
  CHECK(dim_cylinder(Rational(2, 5), s.a1(), s.a2()) == 4);
  CHECK(dim_cylinder(Rational(1, 120), s.a2(), s.theta()) == 1);
  CHECK(floer_dim_mod8(s.a1(), s.theta()) == 5);
  CHECK(floer_dim_mod8(s.a1(), s.a2()) == 4);
  CHECK(floer_dim_mod8(s.theta(), s.theta()) == 5);
  for (const auto& x : s.conns) {
    for (const auto& y : s.conns) {
      const Rational base = energy_class(x, y);
      for (int n = 0; n <= 2; ++n) {
        const Rational ell = base + Rational(n);
        const auto d = dim_cylinder(ell, x, y);
        CHECK(mod_floor(d, 8) == floer_dim_mod8(x, y));
        CHECK(dim_cylinder(ell + Rational(1), x, y) == d + 8);
      }
    }
  }
}

TEST_CASE("energy splittings of the charge-one moduli space") {
  Sigma235 s;
  const auto chains = enumerate_splittings(s.conns, Rational(1), 5);
  REQUIRE(chains.size() == 4);
  using V = std::vector<Rational>;
  using D = std::vector<std::int64_t>;
  CHECK(chains[0].label == "A");
  CHECK(chains[0].energies() == V{Rational(71, 120), Rational(49, 120)});
  CHECK(chains[0].dims() == D{0, 5});
  CHECK(chains[1].energies() == V{Rational(71, 120), Rational(2, 5), Rational(1, 120)});
  CHECK(chains[1].dims() == D{0, 4, 1});
  CHECK(chains[2].energies() == V{Rational(119, 120), Rational(1, 120)});
  CHECK(chains[2].dims() == D{4, 1});
  CHECK(chains[3].energies() == V{Rational(0), Rational(1)});
  CHECK(chains[3].dims() == D{0, 5});
  CHECK(chains[3].label == "D");
  for (const auto& c : chains) {
    Rational sum;
    std::int64_t dim = 0;
    for (const auto& p : c.pieces) {
      sum += p.energy;
      dim += p.dim;
    }
    CHECK(sum == Rational(1));
    CHECK(dim == 5);
    for (std::size_t i = 1; i < c.pieces.size(); ++i) {
      CHECK(c.pieces[i].source == c.pieces[i - 1].target);
      CHECK(c.pieces[i].dim >= 1);
    }
    CHECK(c.pieces.back().target == "theta");
  }
  // Input order does not matter.
  auto shuffled = s.conns;
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto again = enumerate_splittings(shuffled, Rational(1), 5);
    REQUIRE(again.size() == chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) {
      CHECK(again[i].energies() == chains[i].energies());
      CHECK(again[i].dims() == chains[i].dims());
    }
  }
  const auto only_theta = enumerate_splittings({FlatConnection::trivial()}, Rational(1), 5);
  REQUIRE(only_theta.size() == 1);
  CHECK(only_theta[0].energies() == V{Rational(0), Rational(1)});
}

TEST_CASE("holonomy filter") {
  CHECK(holonomy_filter(7, 11) == std::set<std::int64_t>{4, 7});
  CHECK(holonomy_filter(1, 13) == std::set<std::int64_t>{1, 12});
  CHECK(holonomy_filter(7, 7) == std::set<std::int64_t>{0});
  CHECK_THROWS_AS(holonomy_filter(1, 5), Error);
  for (std::int64_t p : {7, 11, 13, 17}) {
    for (std::int64_t e : {1, 7}) {
      std::set<std::int64_t> scan;
      for (std::int64_t k = 0; k < p; ++k) {
        if ((k * k - e * e) % p == 0) scan.insert(k);
      }
      CHECK(holonomy_filter(e, p) == scan);
    }
  }
}

TEST_CASE("invariant connection obstruction") {
  const auto sigma = normalize({2, 3, 5});
  const auto v = invariant_connection_obstruction(Rational(2, 5), sigma, 7);
  CHECK(v.obstructed);
  CHECK(v.quotient_energy == Rational(8, 35));
  const auto w = invariant_connection_obstruction(Rational(49, 120), sigma, 7);
  CHECK_FALSE(w.obstructed);
  CHECK(w.quotient_energy == Rational(7, 30));
  try {
    invariant_connection_obstruction(Rational(2, 5), sigma, 5);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LevelNotCoprime);
  }
  for (std::int64_t p = 7; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    CHECK(invariant_connection_obstruction(Rational(2, 5), sigma, p).obstructed);
  }
}

TEST_CASE("isotropy weights and the trivial splitting") {
  CHECK(isotropy_weight(1, 2, 7, WeightLocation::OwnFiber) == 1);
  CHECK(isotropy_weight(1, 2, 7, WeightLocation::OtherFixedPoint) == 3);
  CHECK(isotropy_weight(3, 3, 7, WeightLocation::OwnFiber) == 0);
  try {
    isotropy_weight(0, 2, 7, WeightLocation::OwnFiber);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIsolatedFixedPoint);
  }
  CHECK(trivial_splitting_obstruction(1, 2, 7).obstructed);
  CHECK(trivial_splitting_obstruction(3, 4, 7).obstructed);
  CHECK_THROWS_AS(trivial_splitting_obstruction(3, 0, 7), Error);
  for (std::int64_t p : {7, 11, 13}) {
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = 1; b < p; ++b) {
        // Direct check: the two weight sets can only agree when 2a or 2b vanishes.
        const bool match = (a + b - (b - a)) % p == 0 || (a + b + (b - a)) % p == 0;
        CHECK(trivial_splitting_obstruction(a, b, p).obstructed == !match);
      }
    }
  }
}
