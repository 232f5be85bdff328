#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "instanton/error.hpp"
#include "instanton/rho/rho.hpp"

using namespace instanton;

namespace {

// Double-precision evaluation of the same sum, written out directly.
double rho_double(const QuotientSpace& q, std::int64_t l) {
  const double pi = std::numbers::pi;
  const auto p = static_cast<double>(q.p);
  const auto a = static_cast<double>(q.base.product());
  double total = 0;
  for (std::int64_t k = 1; k < q.p; ++k) {
    const double s = std::pow(std::sin(pi * k * l / p), 2);
    total += -2.0 / p * s + 2.0 / (a * p) * s / std::pow(std::sin(pi * k / p), 2);
  }
  for (int i = 0; i < 3; ++i) {
    const auto ai = static_cast<double>(q.base.a[i]);
    const auto bi = static_cast<double>(q.base.b_pairs[i]);
    for (std::int64_t m1 = 0; m1 < q.p; ++m1) {
      for (std::int64_t m2 = 1; m2 < q.base.a[i]; ++m2) {
        const double w = std::pow(std::sin(pi * m1 * l / p), 2);
        if (w < 1e-300) continue;
        total += 2.0 / (p * ai) / std::tan(pi * m2 / ai) / std::tan(pi * m1 / p - pi * m2 * bi / ai) * w;
      }
    }
  }
  return total;
}

}  // namespace

TEST_CASE("reducible rho: exact and numeric evaluations agree") {
  const auto sigma = normalize({2, 3, 5});
  for (std::int64_t p : {7, 11, 13}) {
    const auto q = quotient(sigma, p);
    CHECK(rho_reducible(q, 0) == Rational(0));
    for (std::int64_t l = 0; l < p; ++l) {
      const Rational exact = rho_reducible(q, l);
      const auto numeric = rho_reducible_numeric(q, l, 300);
      CAPTURE(p);
      CAPTURE(l);
      CHECK(numeric.reconstructed == exact);
      CHECK(std::abs(exact.to_double() - rho_double(q, l)) < 1e-9);
      CHECK(exact.denominator() <= numeric.denominator_bound);
      if (l > 0) CHECK(rho_reducible(q, p - l) == exact);
    }
  }
  CHECK_THROWS_AS(rho_reducible(quotient(sigma, 7), 7), Error);
}

TEST_CASE("numeric precision and reconstruction") {
  CHECK(reconstruct_rational("0.3333333333333333333333333333333333333", BigInt(100), 200, 100) ==
        Rational(1, 3));
  CHECK(reconstruct_rational("-2.25", BigInt(10), 200, 100) == Rational(-9, 4));
  CHECK_THROWS_AS(reconstruct_rational("3.14159265358979323846264338327950288", BigInt(1000), 200, 100),
                  Error);
  const auto q = quotient(normalize({2, 3, 7}), 11);
  for (std::int64_t l = 1; l < 11; ++l) {
    CHECK(rho_reducible_numeric(q, l, 400).reconstructed == rho_reducible(q, l));
  }
}

TEST_CASE("irreducible rho table") {
  const auto sigma = normalize({2, 3, 5});
  CHECK(rho_irreducible(sigma, {1, 2, 2}) == Rational(-97, 15));
  CHECK(rho_irreducible(sigma, {1, 2, 4}) == Rational(-73, 15));
  try {
    rho_irreducible(normalize({2, 3, 7}), {1, 2, 2});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RhoTableIncomplete);
  }
  const auto conns = sphere_connections(sigma);
  REQUIRE(conns.size() == 3);
  CHECK(*conns[1].rho * Rational(1, 2) == Rational(-97, 30));
  CHECK(*conns[2].rho * Rational(1, 2) == Rational(-73, 30));
}

TEST_CASE("quotient cylinder dimension: inverse and forward modes") {
  const auto sigma = normalize({2, 3, 5});
  for (std::int64_t p : {7, 11, 13}) {
    const auto q = quotient(sigma, p);
    for (auto [ell, e] : {std::pair{Rational(1, 120), 1}, std::pair{Rational(49, 120), 7}}) {
      for (std::int64_t d : {1, 2, 5}) {
        const Rational rho_alpha = solve_quotient_rho(q, ell, e, d);
        CHECK(quotient_cylinder_dim(q, ell, rho_alpha, e) == d);
        CHECK(quotient_cylinder_dim(q, ell, rho_alpha, p - e) == d);
      }
    }
  }
  const auto q7 = quotient(sigma, 7);
  const Rational rho2 = solve_quotient_rho(q7, Rational(1, 120), 1, 1);
  CHECK(rho2 == rho_reducible(q7, 1) + Rational(16, 840) - Rational(3));
  const Rational rho1 = solve_quotient_rho(q7, Rational(49, 120), 7, 1);
  CHECK(quotient_cylinder_dim(q7, Rational(1, 120), rho2, 1) == 1);
  CHECK(quotient_cylinder_dim(q7, Rational(49, 120), rho1, 7) == 1);
  try {
    quotient_cylinder_dim(q7, Rational(49, 120), rho2, 7);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentInvariants);
  }
}
