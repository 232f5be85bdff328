#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <mpfr.h>

#include <algorithm>
#include <random>

#include "instanton/error.hpp"
#include "instanton/gsig/gsig.hpp"

using namespace instanton;

namespace {

constexpr mpfr_prec_t kBits = 220;  // a little over 60 decimal digits

class Big {
 public:
  Big() { mpfr_init2(v_, kBits); mpfr_set_zero(v_, 1); }
  Big(const Big& o) { mpfr_init2(v_, kBits); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Big& operator=(const Big& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
  ~Big() { mpfr_clear(v_); }
  mpfr_t v_;
};

Big pi_times(std::int64_t num, std::int64_t den) {
  Big r;
  mpfr_const_pi(r.v_, MPFR_RNDN);
  mpfr_mul_si(r.v_, r.v_, static_cast<long>(num), MPFR_RNDN);
  mpfr_div_si(r.v_, r.v_, static_cast<long>(den), MPFR_RNDN);
  return r;
}

// Real and imaginary parts of sum c_k zeta_p^k.
std::pair<Big, Big> image(const CyclotomicElement& x) {
  Big re, im, c, s, q;
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    const Big ang = pi_times(2 * static_cast<std::int64_t>(k), x.order());
    mpfr_cos(c.v_, ang.v_, MPFR_RNDN);
    mpfr_sin(s.v_, ang.v_, MPFR_RNDN);
    mpfr_set_q(q.v_, x.coeffs()[k].raw().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(c.v_, c.v_, q.v_, MPFR_RNDN);
    mpfr_mul(s.v_, s.v_, q.v_, MPFR_RNDN);
    mpfr_add(re.v_, re.v_, c.v_, MPFR_RNDN);
    mpfr_add(im.v_, im.v_, s.v_, MPFR_RNDN);
  }
  return {re, im};
}

// -cot(pi a/p) cot(pi b/p), times 2 cos(2 pi l/p) for a twist weight residue l.
Big point_closed(std::int64_t a, std::int64_t b, std::int64_t p, std::int64_t twist = -1) {
  Big ca = pi_times(a, p), cb = pi_times(b, p), out;
  mpfr_cot(ca.v_, ca.v_, MPFR_RNDN);
  mpfr_cot(cb.v_, cb.v_, MPFR_RNDN);
  mpfr_mul(out.v_, ca.v_, cb.v_, MPFR_RNDN);
  mpfr_neg(out.v_, out.v_, MPFR_RNDN);
  if (twist >= 0) {
    Big f = pi_times(2 * twist, p);
    mpfr_cos(f.v_, f.v_, MPFR_RNDN);
    mpfr_mul_ui(f.v_, f.v_, 2, MPFR_RNDN);
    mpfr_mul(out.v_, out.v_, f.v_, MPFR_RNDN);
  }
  return out;
}

// -4 alpha t^c/(t^c-1)^2 = alpha / sin^2(pi c/p).
Big sphere_closed(std::int64_t alpha, std::int64_t c, std::int64_t p) {
  Big s = pi_times(c, p);
  mpfr_sin(s.v_, s.v_, MPFR_RNDN);
  mpfr_sqr(s.v_, s.v_, MPFR_RNDN);
  Big out;
  mpfr_set_si(out.v_, static_cast<long>(alpha), MPFR_RNDN);
  mpfr_div(out.v_, out.v_, s.v_, MPFR_RNDN);
  return out;
}

bool tiny(const Big& x) {
  Big m;
  mpfr_abs(m.v_, x.v_, MPFR_RNDN);
  return mpfr_cmp_ui_2exp(m.v_, 1, -200) < 0;
}

bool close60(const Big& x, const Big& y) {
  Big d;
  mpfr_sub(d.v_, x.v_, y.v_, MPFR_RNDN);
  return tiny(d);
}

ExtensionData example_p7() {
  ExtensionData ext;
  ext.p = 7;
  for (auto [a, b] : std::vector<std::pair<int, int>>{
           {1, 1}, {1, 1}, {1, 1}, {1, -3}, {1, -1}, {1, -1}, {2, 2}, {2, 2}, {3, 3}}) {
    ext.points.push_back({a, b, std::nullopt});
  }
  return ext;
}

ExtensionData empty_at(std::int64_t p) { return {p, {}, {}, -8, 0}; }

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = lo; p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

Rational r(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("point terms: exact values match 60-digit cotangent evaluation") {
  for (std::int64_t p : {7, 11, 13}) {
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = 1; b < p; ++b) {
        const auto [re, im] = image(lefschetz_point_term({a, b, std::nullopt}, p, false));
        CHECK(close60(re, point_closed(a, b, p)));
        CHECK(tiny(im));
      }
    }
  }
}

TEST_CASE("point terms: twisted values match the numeric character") {
  std::mt19937 rng(7);
  for (std::int64_t p : {7, 11, 13}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % (p - 1));
      const std::int64_t b = 1 + static_cast<std::int64_t>(rng() % (p - 1));
      const std::int64_t twice = static_cast<std::int64_t>(rng() % 21) - 10;
      const FixedPointDatum d{a, b, Rational(twice, 2)};
      const std::int64_t l = d.lambda_residue(p).value();
      const auto [re, im] = image(lefschetz_point_term(d, p, true));
      CHECK(close60(re, point_closed(a, b, p, l)));
      CHECK(tiny(im));
    }
  }
}

TEST_CASE("point terms: orbit invariance and twisting by zero") {
  for (std::int64_t p : {7, 11}) {
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = 1; b < p; ++b) {
        const FixedPointDatum d{a, b, r(0)};
        const CyclotomicElement t = lefschetz_point_term(d, p, false);
        CHECK(lefschetz_point_term({b, a, std::nullopt}, p, false) == t);
        CHECK(lefschetz_point_term({-a, -b, std::nullopt}, p, false) == t);
        CHECK(lefschetz_point_term({-b, -a, std::nullopt}, p, false) == t);
        CHECK(lefschetz_point_term(d.canonical(p), p, false) == t);
        CHECK(lefschetz_point_term(d, p, true) == t * r(2));
      }
    }
  }
}

TEST_CASE("point terms: degenerate pairs and missing weights are rejected") {
  try {
    lefschetz_point_term({7, 1, std::nullopt}, 7, false);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateRotationPair);
    CHECK(std::string(e.what()) == "degenerate rotation pair");
  }
  try {
    lefschetz_point_term({1, 2, std::nullopt}, 7, true);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LiftWeightsRequired);
  }
  CHECK_THROWS_AS(lefschetz_point_term({1, 2, r(1, 3)}, 7, true), Error);
}

TEST_CASE("sphere terms") {
  for (std::int64_t p : {7, 11, 13}) {
    const CyclotomicElement t = CyclotomicElement::root_power(p, 1);
    const CyclotomicElement u = t - CyclotomicElement::constant(p, 1);
    CHECK(lefschetz_sphere_term({-2, 1, std::nullopt}, p, false) == t * r(8) / (u * u));
    CHECK(lefschetz_sphere_term({0, 3, std::nullopt}, p, false).is_zero());
    for (std::int64_t c = 1; c < p; ++c) {
      for (std::int64_t alpha : {-3, -2, 1, 5}) {
        const auto [re, im] = image(lefschetz_sphere_term({alpha, c, std::nullopt}, p, false));
        CHECK(close60(re, sphere_closed(alpha, c, p)));
        CHECK(tiny(im));
      }
    }
    // lambda = 1/2 realized through inv(2): t^l + t^-l with 2l = 1.
    const std::int64_t half = inverse_mod(2, p);
    const CyclotomicElement factor =
        CyclotomicElement::root_power(p, half) + CyclotomicElement::root_power(p, -half);
    CHECK(lefschetz_sphere_term({-2, 1, r(1, 2)}, p, true) == t * r(8) / (u * u) * factor);
    CHECK(factor * factor == t + CyclotomicElement::root_power(p, -1) +
                                 CyclotomicElement::constant(p, 2));
  }
  try {
    lefschetz_sphere_term({-2, 14, std::nullopt}, 7, false);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SphereFixedFiberwise);
  }
}

TEST_CASE("plumbing eta invariant") {
  for (std::int64_t p : primes_between(7, 31)) {
    ExtensionData e8 = e8_plumbing(p);
    std::reverse(e8.points.begin(), e8.points.end());
    CyclotomicElement eta = CyclotomicElement::constant(p, 8);
    for (const auto& d : e8.points) eta += lefschetz_point_term(d, p, false);
    eta += lefschetz_sphere_term(e8.spheres[0], p, false);
    CHECK(eta == eta_plumbing(p));
  }
  // Numeric image at zeta_11 against a direct evaluation.
  const std::int64_t p = 11;
  Big direct = sphere_closed(-2, 1, p);
  mpfr_add_ui(direct.v_, direct.v_, 8, MPFR_RNDN);
  for (const auto& d : e8_plumbing(p).points) {
    const Big term = point_closed(d.a, d.b, p);
    mpfr_add(direct.v_, direct.v_, term.v_, MPFR_RNDN);
  }
  const auto [re, im] = image(eta_plumbing(p));
  CHECK(close60(re, direct));
  CHECK(tiny(im));
}

TEST_CASE("G-signature identity") {
  const ExtensionData ex = example_p7();
  CHECK(gsig_identity_check(ex));
  CHECK(gsig_identity_check(ex, true));
  for (std::int64_t p : primes_between(7, 97)) CHECK(gsig_identity_check(e8_plumbing(p)));

  ExtensionData changed = ex;
  changed.points[0] = {1, 2, std::nullopt};
  CHECK_FALSE(gsig_identity_check(changed));
  // Replace each point by every other rotation class.
  for (std::size_t i = 0; i < ex.points.size(); ++i) {
    for (const auto& alt : canonical_classes(7)) {
      if (alt.canonical(7) == ex.points[i].canonical(7)) continue;
      ExtensionData perturbed = ex;
      perturbed.points[i] = alt;
      CHECK_FALSE(gsig_identity_check(perturbed));
    }
  }
  ExtensionData short_one = ex;
  short_one.points.pop_back();
  CHECK_THROWS_AS(gsig_identity_check(short_one), Error);
}

TEST_CASE("series expansions match the closed forms") {
  std::mt19937 rng(2024);
  auto draw = [&rng](std::int64_t p) {
    std::int64_t v = 0;
    while (v == 0) v = static_cast<std::int64_t>(rng() % (2 * p - 1)) - (p - 1);
    return v;
  };
  int trials = 0;
  for (std::int64_t p : {7, 11, 13}) {
    for (int k = 0; k < 50; ++k, ++trials) {
      const std::int64_t a = draw(p), b = draw(p);
      const Rational lambda(static_cast<std::int64_t>(rng() % 13) - 6, 2);
      const Rational A(a), B(b), ab(a * b);
      const TruncatedSeries s = series_expand_term(FixedPointDatum{a, b, std::nullopt}, 4);
      CHECK(s.coeff(0) == r(4) / ab);
      CHECK(s.coeff(1) == r(4) / ab);
      CHECK(s.coeff(2) == r(1, 3) * (A * A + B * B + r(1)) / ab);
      CHECK(s.coeff(3) == r(0));
      CHECK(s.coeff(4) ==
            r(-1, 180) * (A * A * A * A + B * B * B * B - r(5) * A * A * B * B + r(3)) / ab);

      const TruncatedSeries tw = series_expand_term(FixedPointDatum{a, b, lambda}, 2, true);
      CHECK(tw.coeff(0) == r(8) / ab);
      CHECK(tw.coeff(1) == r(8) / ab);
      CHECK(tw.coeff(2) == r(2, 3) * (r(6) * lambda * lambda + A * A + B * B + r(1)) / ab);

      const std::int64_t alpha = static_cast<std::int64_t>(rng() % 9) - 4;
      const std::int64_t c = draw(p);
      const Rational C(c), al(alpha), c2 = C * C;
      const TruncatedSeries sp = series_expand_term(FixedSphereDatum{alpha, c, std::nullopt}, 4);
      CHECK(sp.coeff(0) == r(4) * al / c2);
      CHECK(sp.coeff(1) == r(4) * al / c2);
      CHECK(sp.coeff(2) == r(-1, 3) * al / c2 * (c2 - r(1)));
      CHECK(sp.coeff(3) == r(0));
      // The u^4 coefficient is alpha (c-1)(c^3+c^2+c+1)/(60 c^2).
      CHECK(sp.coeff(4) == al * (C - r(1)) * (c2 * C + c2 + C + r(1)) / (r(60) * c2));

      const TruncatedSeries spt = series_expand_term(FixedSphereDatum{alpha, c, lambda}, 2, true);
      CHECK(spt.coeff(0) == r(8) * al / c2);
      CHECK(spt.coeff(2) == r(-2, 3) * al / c2 * (c2 - r(1) - r(6) * lambda * lambda));
    }
  }
  CHECK(trials == 150);
  CHECK_THROWS_AS(series_expand_term(FixedPointDatum{1, 2, r(1, 2)}, 3, true), Error);
  CHECK_THROWS_AS(series_expand_term(FixedPointDatum{1, 2, std::nullopt}, 5), Error);
}

TEST_CASE("congruence constants are derived from the plumbing reference") {
  for (std::int64_t p : primes_between(7, 97)) {
    const CongruenceReport rep = congruence_residues(empty_at(p), e8_plumbing(p));
    CHECK(rep.expected_exact[0] == r(1, 30));
    CHECK(rep.expected_exact[1] == r(-269, 15));
    CHECK(rep.expected_exact[2] == r(1712, 15));
    CHECK(rep.expected[0] == residue_of_rational(r(1, 30), p));
    CHECK(rep.expected[1] == residue_of_rational(r(-269, 15), p));
    CHECK(rep.expected[2] == residue_of_rational(r(1712, 15), p));
    CHECK(rep.residues[0].is_zero());

    ExtensionData e8 = e8_plumbing(p);
    const CongruenceReport self = congruence_residues(e8, e8);
    CHECK(self.verdicts[1]);
    CHECK(self.twisted.has_value());
    CHECK(self.twisted->verdict);
  }
  // The u^0 relation in closed form: sum 1/(ab) - alpha/c^2 = -59/30 + 2.
  Rational direct;
  for (const auto& d : e8_plumbing(7).points) direct += r(1) / Rational(d.a * d.b);
  CHECK(direct == r(-59, 30));
  CHECK(direct + r(2) == r(1, 30));

  const CongruenceReport ex = congruence_residues(example_p7());
  for (int i = 0; i < 3; ++i) {
    CHECK(ex.residues[static_cast<std::size_t>(i)] == Residue(4, 7));
    CHECK(ex.verdicts[static_cast<std::size_t>(i)]);
  }
  const CongruenceReport none = congruence_residues(empty_at(11), empty_at(11));
  for (int i = 0; i < 3; ++i) {
    CHECK(none.residues[static_cast<std::size_t>(i)].is_zero());
    CHECK(none.expected[static_cast<std::size_t>(i)].is_zero());
  }
}

TEST_CASE("field-lift residues agree with closed-form summation") {
  const ExtensionData ex = example_p7();
  CHECK(field_lift_residues(ex) == closed_form_residues(ex.points, 7));
  for (std::int64_t p : {7, 11, 13}) {
    const CongruenceReport rep = congruence_residues(empty_at(p), e8_plumbing(p));
    CHECK(field_lift_residues(e8_plumbing(p)) == rep.expected);
  }
  std::mt19937 rng(99);
  for (std::int64_t p : {7, 11, 13}) {
    for (int trial = 0; trial < 15; ++trial) {
      ExtensionData ext = empty_at(p);
      const int n = 1 + static_cast<int>(rng() % 9);
      for (int i = 0; i < n; ++i) {
        ext.points.push_back({1 + static_cast<std::int64_t>(rng() % (p - 1)),
                              1 + static_cast<std::int64_t>(rng() % (p - 1)), std::nullopt});
      }
      CHECK(field_lift_residues(ext) == closed_form_residues(ext.points, p));
    }
  }
}

TEST_CASE("twisted congruence") {
  for (std::int64_t p : {7, 11, 13}) {
    const ExtensionData e8 = e8_plumbing(p);
    const TwistedCongruence self = twisted_congruence_residue(e8, e8);
    CHECK(self.rhs == residue_of_rational(r(1, 30), p));
    CHECK(self.verdict);

    // Distinguished-point lift on the example data.
    ExtensionData ext = empty_at(p);
    ext.points = {{2, p - 1, std::nullopt}, {3, 5, std::nullopt}, {1, 4, std::nullopt}};
    const FixedPointDatum& first = ext.points[0];
    ext.points[0].lambda = Rational(first.b - first.a, 2);
    for (std::size_t i = 1; i < ext.points.size(); ++i) ext.points[i].lambda = r(1, 2);
    Rational expect = Rational(first.b - first.a) * Rational(first.b - first.a) /
                      Rational(first.a * first.b);
    for (std::size_t i = 1; i < ext.points.size(); ++i) {
      expect += r(1) / Rational(ext.points[i].a * ext.points[i].b);
    }
    CHECK(twisted_congruence_residue(ext, e8).lhs == residue_of_rational(expect, p));

    ext.points[1].lambda.reset();
    try {
      twisted_congruence_residue(ext, e8);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::LiftWeightsRequired);
      CHECK(std::string(e.what()) == "lift weights required");
    }
  }
}

TEST_CASE("rotation sum classes") {
  CHECK(theorem_a_filter({1, 2, std::nullopt}, 11) == AdmissibleClass::Inadmissible);
  CHECK(theorem_a_filter({3, 4, std::nullopt}, 11) == AdmissibleClass::V);
  CHECK(theorem_a_filter({5, 7, std::nullopt}, 11) == AdmissibleClass::U);
  CHECK(theorem_a_filter({1, -1, std::nullopt}, 7) == AdmissibleClass::V);
  CHECK(theorem_a_filter({3, 3, std::nullopt}, 7) == AdmissibleClass::U);
  for (std::int64_t p : {7, 11, 13}) {
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = 1; b < p; ++b) {
        const FixedPointDatum d{a, b, std::nullopt};
        CHECK(theorem_a_filter(d, p) == theorem_a_filter(d.canonical(p), p));
      }
    }
  }
  // The example data are not all admissible.
  bool any_bad = false;
  for (const auto& d : example_p7().points) {
    any_bad = any_bad || theorem_a_filter(d, 7) == AdmissibleClass::Inadmissible;
  }
  CHECK(any_bad);
}

TEST_CASE("contradiction trace for every prime up to 199") {
  for (std::int64_t p : primes_between(7, 199)) {
    const ProofTrace t = prove_theorem_b(p);
    CHECK(t.contradiction);
    CHECK(t.requires_homological_triviality == (p == 7));
    const auto find = [&t](const std::string& name) {
      return *std::find_if(t.steps.begin(), t.steps.end(),
                           [&name](const ProofStep& s) { return s.name == name; });
    };
    CHECK(find("rewrite_squares").holds);
    CHECK(find("v_vanishes").holds);
    CHECK(find("u_point_exists").holds);
    CHECK(find("twisted_reference").holds);
    CHECK(find("distinguished_lift").holds);
    CHECK_FALSE(find("contradiction").holds);
  }
  for (std::int64_t bad : {2, 3, 4, 5, 9, 49}) {
    try {
      prove_theorem_b(bad);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::HypothesesViolated);
      CHECK(std::string(e.what()) == "theorem hypotheses violated");
    }
  }
}

TEST_CASE("canonical classes") {
  CHECK(canonical_classes(7).size() == 12);
  CHECK(canonical_classes(11).size() == 30);
  const auto cls = canonical_classes(13);
  CHECK(std::is_sorted(cls.begin(), cls.end(), [](const auto& x, const auto& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  }));
  CHECK(FixedPointDatum{1, -3, std::nullopt}.canonical(7) == FixedPointDatum{1, 4, std::nullopt});
  CHECK(FixedPointDatum{4, 4, std::nullopt}.canonical(7) == FixedPointDatum{3, 3, std::nullopt});
}

TEST_CASE("search over fixed-point multisets") {
  std::vector<FixedPointDatum> example;
  for (const auto& d : example_p7().points) example.push_back(d.canonical(7));
  std::sort(example.begin(), example.end(),
            [](const auto& x, const auto& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });

  SearchOptions identity;
  identity.filters = {SearchFilter::Identity};
  const SearchResult found = search_extensions(7, identity);
  CHECK(std::find(found.solutions.begin(), found.solutions.end(), example) !=
        found.solutions.end());
  CHECK(std::is_sorted(found.solutions.begin(), found.solutions.end(),
                       [](const auto& x, const auto& y) {
                         return std::lexicographical_compare(
                             x.begin(), x.end(), y.begin(), y.end(), [](const auto& u, const auto& v) {
                               return std::pair(u.a, u.b) < std::pair(v.a, v.b);
                             });
                       }));

  identity.jobs = 3;
  CHECK(search_extensions(7, identity).solutions == found.solutions);

  SearchOptions with_a;
  with_a.filters = {SearchFilter::Identity, SearchFilter::TheoremA};
  const SearchResult admissible = search_extensions(7, with_a);
  CHECK(std::find(admissible.solutions.begin(), admissible.solutions.end(), example) ==
        admissible.solutions.end());

  SearchOptions all;
  all.filters = {SearchFilter::Congruences, SearchFilter::TheoremA, SearchFilter::Twisted};
  CHECK(search_extensions(11, all).solutions.empty());
  all.filters.insert(SearchFilter::Identity);
  CHECK(search_extensions(11, all).solutions.empty());

  SearchOptions huge;
  huge.filters = {SearchFilter::Identity};
  try {
    search_extensions(13, huge);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SearchOverBudget);
  }
}
