#include "instanton/gsig/gsig.hpp"

#include <algorithm>
#include <sstream>

#include "instanton/error.hpp"

namespace instanton {
namespace {

void require_gsig_prime(std::int64_t p) {
  if (p < 7 || !is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument, "G-signature data needs a prime p >= 7",
                std::to_string(p));
  }
}

void check_point(const FixedPointDatum& d, std::int64_t p) {
  if (mod_floor(d.a, p) == 0 || mod_floor(d.b, p) == 0) {
    throw Error(ErrorCode::DegenerateRotationPair, "degenerate rotation pair", d.to_text());
  }
}

void check_sphere(const FixedSphereDatum& s, std::int64_t p) {
  if (mod_floor(s.c, p) == 0) {
    throw Error(ErrorCode::SphereFixedFiberwise, "sphere fixed fiberwise, not supported",
                std::to_string(s.c));
  }
}

const Rational& require_lambda(const std::optional<Rational>& lambda) {
  if (!lambda) throw Error(ErrorCode::LiftWeightsRequired, "lift weights required");
  if (!(lambda.value() * Rational(2)).is_integer()) {
    throw Error(ErrorCode::InvalidArgument, "lift weight must be a half-integer",
                lambda->to_string());
  }
  return *lambda;
}

// t^l + t^-l with l = (2 lambda) inv(2) mod p.
CyclotomicElement twist_factor(const std::optional<Rational>& lambda, std::int64_t p) {
  const Rational& l = require_lambda(lambda);
  const std::int64_t twice = (l * Rational(2)).numerator().get_si();
  const std::int64_t e = mod_floor(mod_floor(twice, p) * inverse_mod(2, p), p);
  return CyclotomicElement::root_power(p, e) + CyclotomicElement::root_power(p, -e);
}

// (t^k + 1)/(t^k - 1) = 1 + 2/(t^k - 1).
CyclotomicElement coth_factor(std::int64_t k, std::int64_t p) {
  return CyclotomicElement::constant(p, 1) + inverse_root_minus_one(p, k) * Rational(2);
}

// (1+u)^r + (1+u)^-r, or 1 when not twisted.
TruncatedSeries twist_series(const std::optional<Rational>& lambda, bool twisted, int order) {
  if (!twisted) return TruncatedSeries::constant(1, order);
  const Rational& l = require_lambda(lambda);
  return TruncatedSeries::t_power(l, order) + TruncatedSeries::t_power(-l, order);
}

// u (t^k + 1)/(t^k - 1) through u^order, regular at u = 0.
TruncatedSeries u_coth_series(std::int64_t k, int order) {
  const TruncatedSeries tk = TruncatedSeries::t_power(Rational(k), order + 1);
  const TruncatedSeries one = TruncatedSeries::constant(1, order + 1);
  return ((tk + one) / (tk - one)).shift(1);
}

// Residue of a series coefficient times a scale.
Residue scaled(const Rational& q, const Rational& scale, std::int64_t p) {
  return residue_of_rational(q * scale, p);
}

const std::array<Rational, 3>& closed_form_scales() {
  // Series coefficients of u^0, u^2, u^4 relate to r1, r2, r3 by these factors.
  static const std::array<Rational, 3> s{Rational(1, 4), Rational(3), Rational(-180)};
  return s;
}

constexpr std::array<int, 3> kCoeffIndex{0, 2, 4};

std::string residue_text(const Residue& r) { return std::to_string(r.value()); }

}  // namespace

Residue FixedPointDatum::lambda_residue(std::int64_t p) const {
  const Rational& l = require_lambda(lambda);
  return residue_of_rational(l, p);
}

FixedPointDatum FixedPointDatum::canonical(std::int64_t p) const {
  const std::int64_t x = mod_floor(a, p), y = mod_floor(b, p);
  const std::array<std::pair<std::int64_t, std::int64_t>, 4> orbit{
      {{x, y}, {y, x}, {mod_floor(-x, p), mod_floor(-y, p)}, {mod_floor(-y, p), mod_floor(-x, p)}}};
  const auto best = *std::min_element(orbit.begin(), orbit.end());
  return {best.first, best.second, lambda};
}

std::string FixedPointDatum::to_text() const {
  std::string s = "(" + std::to_string(a) + "," + std::to_string(b);
  if (lambda) s += ";" + lambda->to_string();
  return s + ")";
}

void ExtensionData::validate() const {
  require_gsig_prime(p);
  for (const auto& d : points) check_point(d, p);
  for (const auto& s : spheres) check_sphere(s, p);
  const auto count = static_cast<std::int64_t>(points.size() + 2 * spheres.size());
  if (count != euler) {
    throw Error(ErrorCode::InvalidArgument,
                "Euler count mismatch: |points| + 2|spheres| = " + std::to_string(count) +
                    " but euler = " + std::to_string(euler));
  }
}

ExtensionData e8_plumbing(std::int64_t p) {
  require_gsig_prime(p);
  const Rational half(1, 2);
  ExtensionData ext;
  ext.p = p;
  for (auto [a, b] : std::vector<std::pair<int, int>>{
           {-4, 5}, {-3, 4}, {-2, 3}, {-2, 3}, {-1, 2}, {-1, 2}, {-1, 2}}) {
    ext.points.push_back({a, b, half});
  }
  ext.spheres.push_back({-2, 1, half});
  return ext;
}

CyclotomicElement lefschetz_point_term(const FixedPointDatum& d, std::int64_t p, bool twisted) {
  require_gsig_prime(p);
  check_point(d, p);
  CyclotomicElement term = coth_factor(d.a, p) * coth_factor(d.b, p);
  if (twisted) term = term * twist_factor(d.lambda, p);
  return term;
}

CyclotomicElement lefschetz_sphere_term(const FixedSphereDatum& s, std::int64_t p, bool twisted) {
  require_gsig_prime(p);
  check_sphere(s, p);
  if (s.alpha == 0) return CyclotomicElement::zero(p);
  const CyclotomicElement inv = inverse_root_minus_one(p, s.c);
  CyclotomicElement term = CyclotomicElement::root_power(p, s.c) * inv * inv * Rational(-4 * s.alpha);
  if (twisted) term = term * twist_factor(s.lambda, p);
  return term;
}

CyclotomicElement eta_plumbing(std::int64_t p) {
  const ExtensionData e8 = e8_plumbing(p);
  CyclotomicElement eta = CyclotomicElement::constant(p, 8);
  for (const auto& d : e8.points) eta += lefschetz_point_term(d, p, false);
  const CyclotomicElement inv = inverse_root_minus_one(p, 1);
  eta += CyclotomicElement::root_power(p, 1) * inv * inv * Rational(8);
  return eta;
}

CyclotomicElement lefschetz_number(const ExtensionData& ext, bool twisted) {
  CyclotomicElement sum = CyclotomicElement::zero(ext.p);
  for (const auto& d : ext.points) sum += lefschetz_point_term(d, ext.p, twisted);
  for (const auto& s : ext.spheres) sum += lefschetz_sphere_term(s, ext.p, twisted);
  return sum;
}

bool gsig_identity_check(const ExtensionData& ext, bool all_generators) {
  ext.validate();
  const CyclotomicElement defect = lefschetz_number(ext) - eta_plumbing(ext.p);
  const CyclotomicElement target = CyclotomicElement::constant(ext.p, ext.signature);
  if (!all_generators) return defect == target;
  for (std::int64_t k = 1; k < ext.p; ++k) {
    if (defect.galois(k) != target) return false;
  }
  return true;
}

TruncatedSeries series_expand_term(const FixedPointDatum& d, int order, bool twisted) {
  if (order < 0 || order > (twisted ? 2 : 4)) {
    throw Error(ErrorCode::InvalidArgument, "series order outside the supported range",
                std::to_string(order));
  }
  if (d.a == 0 || d.b == 0) {
    throw Error(ErrorCode::DegenerateRotationPair, "degenerate rotation pair", d.to_text());
  }
  TruncatedSeries s = u_coth_series(d.a, order) * u_coth_series(d.b, order) *
                      twist_series(d.lambda, twisted, order);
  if (s.valuation() < 0) throw Error(ErrorCode::Internal, "pole order above 2 in point term");
  return s.truncate(order);
}

TruncatedSeries series_expand_term(const FixedSphereDatum& s, int order, bool twisted) {
  if (order < 0 || order > (twisted ? 2 : 4)) {
    throw Error(ErrorCode::InvalidArgument, "series order outside the supported range",
                std::to_string(order));
  }
  if (s.c == 0) {
    throw Error(ErrorCode::SphereFixedFiberwise, "sphere fixed fiberwise, not supported");
  }
  // u^2 t^c/(t^c - 1)^2 = (u/(t^c - 1))^2 t^c
  const TruncatedSeries tc = TruncatedSeries::t_power(Rational(s.c), order + 1);
  const TruncatedSeries inv = (tc - TruncatedSeries::constant(1, order + 1)).inverse().shift(1);
  TruncatedSeries out = inv * inv * tc * Rational(4 * s.alpha) *
                        twist_series(s.lambda, twisted, order);
  if (out.valuation() < 0) throw Error(ErrorCode::Internal, "pole order above 2 in sphere term");
  return out.truncate(order);
}

bool CongruenceReport::all_true() const {
  bool ok = verdicts[0] && verdicts[1] && verdicts[2];
  if (twisted) ok = ok && twisted->verdict;
  return ok;
}

std::array<Residue, 3> closed_form_residues(const std::vector<FixedPointDatum>& points,
                                            std::int64_t p) {
  require_gsig_prime(p);
  std::array<Residue, 3> r{Residue(0, p), Residue(0, p), Residue(0, p)};
  for (const auto& d : points) {
    check_point(d, p);
    const Residue a(d.a, p), b(d.b, p), one(1, p);
    const Residue inv_ab = (a * b).inverse();
    r[0] = r[0] + inv_ab;
    r[1] = r[1] + (a * a + b * b + one) * inv_ab;
    r[2] = r[2] + (a.pow(4) + b.pow(4) - Residue(5, p) * a * a * b * b + Residue(3, p)) * inv_ab;
  }
  return r;
}

CongruenceReport congruence_residues(const ExtensionData& ext, const ExtensionData& reference) {
  require_gsig_prime(ext.p);
  if (reference.p != ext.p) {
    throw Error(ErrorCode::InvalidArgument, "reference extension at a different prime");
  }
  const std::int64_t p = ext.p;
  std::array<Rational, 3> exact{};
  for (const auto& d : reference.points) {
    check_point(d, p);
    const TruncatedSeries s = series_expand_term(d, 4);
    for (std::size_t i = 0; i < 3; ++i) exact[i] += s.coeff(kCoeffIndex[i]);
  }
  for (const auto& sp : reference.spheres) {
    check_sphere(sp, p);
    const TruncatedSeries s = series_expand_term(sp, 4);
    for (std::size_t i = 0; i < 3; ++i) exact[i] -= s.coeff(kCoeffIndex[i]);
  }
  for (std::size_t i = 0; i < 3; ++i) exact[i] *= closed_form_scales()[i];

  const std::array<Residue, 3> r = closed_form_residues(ext.points, p);
  CongruenceReport report{p, r, {Residue(0, p), Residue(0, p), Residue(0, p)}, {}, exact, {}, {}};
  const std::array<const char*, 3> names{"sum 1/(ab)", "sum (a^2+b^2+1)/(ab)",
                                         "sum (a^4+b^4-5a^2b^2+3)/(ab)"};
  for (std::size_t i = 0; i < 3; ++i) {
    report.expected[i] = residue_of_rational(exact[i], p);
    report.verdicts[i] = report.residues[i] == report.expected[i];
    report.trace.push_back({std::string("congruence_") + std::to_string(i + 1),
                            std::string(names[i]) + " = " + exact[i].to_string() + " mod " +
                                std::to_string(p),
                            residue_text(report.residues[i]) + " vs " +
                                residue_text(report.expected[i]),
                            report.verdicts[i]});
  }
  const bool has_weights =
      std::all_of(ext.points.begin(), ext.points.end(), [](const auto& d) { return d.lambda; }) &&
      std::all_of(ext.spheres.begin(), ext.spheres.end(), [](const auto& s) { return s.lambda; }) &&
      !ext.points.empty();
  if (has_weights) report.twisted = twisted_congruence_residue(ext, reference);
  return report;
}

CongruenceReport congruence_residues(const ExtensionData& ext) {
  return congruence_residues(ext, e8_plumbing(ext.p));
}

std::array<Residue, 3> field_lift_residues(const ExtensionData& ext) {
  require_gsig_prime(ext.p);
  const std::int64_t p = ext.p;
  const CyclotomicElement u = CyclotomicElement::root_power(p, 1) - CyclotomicElement::constant(p, 1);
  const CyclotomicElement cleared = u * u * lefschetz_number(ext);
  const std::vector<Rational> taylor = cleared.as_polynomial().taylor_shift(1).coeffs();
  std::array<Residue, 3> out{Residue(0, p), Residue(0, p), Residue(0, p)};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto k = static_cast<std::size_t>(kCoeffIndex[i]);
    const Rational c = k < taylor.size() ? taylor[k] : Rational(0);
    out[i] = scaled(c, closed_form_scales()[i], p);
  }
  return out;
}

namespace {

// Order-2 twisted coefficient minus twice the untwisted one: 4 lambda^2/(ab)
// for a point.
Rational twist_excess(const TruncatedSeries& twisted, const TruncatedSeries& plain) {
  return twisted.coeff(2) - plain.coeff(2) * Rational(2);
}

Residue twisted_quantity(const ExtensionData& ext) {
  Rational sum;
  for (const auto& d : ext.points) {
    check_point(d, ext.p);
    sum += twist_excess(series_expand_term(d, 2, true), series_expand_term(d, 2, false));
  }
  for (const auto& s : ext.spheres) {
    check_sphere(s, ext.p);
    sum -= twist_excess(series_expand_term(s, 2, true), series_expand_term(s, 2, false));
  }
  return residue_of_rational(sum, ext.p);
}

}  // namespace

TwistedCongruence twisted_congruence_residue(const ExtensionData& ext,
                                             const ExtensionData& reference) {
  require_gsig_prime(ext.p);
  if (reference.p != ext.p) {
    throw Error(ErrorCode::InvalidArgument, "reference extension at a different prime");
  }
  const Residue lhs = twisted_quantity(ext);
  const Residue rhs = twisted_quantity(reference);
  return {lhs, rhs, lhs == rhs};
}

std::string to_string(AdmissibleClass c) {
  switch (c) {
    case AdmissibleClass::U: return "U";
    case AdmissibleClass::V: return "V";
    case AdmissibleClass::Inadmissible: return "inadmissible";
  }
  return "?";
}

AdmissibleClass theorem_a_filter(const FixedPointDatum& d, std::int64_t p) {
  if (p <= 5) {
    throw Error(ErrorCode::InvalidArgument, "rotation sum classes need p > 5", std::to_string(p));
  }
  const std::int64_t s = mod_floor(d.a + d.b, p);
  if (s == 1 || s == p - 1) return AdmissibleClass::U;
  if (s == mod_floor(7, p) || s == mod_floor(-7, p)) return AdmissibleClass::V;
  return AdmissibleClass::Inadmissible;
}

ProofTrace prove_theorem_b(std::int64_t p) {
  if (p < 7 || !is_prime(p) || 48 % p == 0) {
    throw Error(ErrorCode::HypothesesViolated, "theorem hypotheses violated", std::to_string(p));
  }
  ProofTrace trace{p, {}, false, p == 7};
  auto add = [&trace](std::string name, std::string statement, std::string value, bool holds) {
    trace.steps.push_back({std::move(name), std::move(statement), std::move(value), holds});
  };
  const ExtensionData e8 = e8_plumbing(p);
  const ExtensionData empty{p, {}, {}, -8, 0};
  const CongruenceReport ref = congruence_residues(empty, e8);
  const Rational e1 = ref.expected_exact[0], e2 = ref.expected_exact[1];
  add("expected_constants",
      "plumbing reference gives sum 1/(ab) = " + e1.to_string() +
          " and sum (a^2+b^2+1)/(ab) = " + e2.to_string(),
      residue_text(ref.expected[0]) + ", " + residue_text(ref.expected[1]), true);

  // (a+b)^2/(ab) = (a^2+b^2+1)/(ab) + 2 - 1/(ab), summed over 9 points.
  const std::int64_t n = 9;
  const Rational squares = e2 + Rational(2 * n) - e1;
  const Residue sq = residue_of_rational(squares, p);
  add("rewrite_squares",
      "sum (a+b)^2/(ab) = " + e2.to_string() + " + " + std::to_string(2 * n) + " - " +
          e1.to_string() + " = " + squares.to_string(),
      residue_text(sq), sq == ref.expected[0]);

  const Residue u_sq(1, p), v_sq(49, p);
  add("split_sums",
      "U + " + residue_text(v_sq) + "V = " + residue_text(sq) + " and U + V = " +
          residue_text(ref.expected[0]) + " mod " + std::to_string(p),
      "U-class (a+b)^2 = " + residue_text(u_sq) + ", V-class (a+b)^2 = " + residue_text(v_sq),
      true);

  const Residue diff = v_sq - u_sq;
  const Residue rhs = sq - ref.expected[0];
  const bool invertible = !diff.is_zero();
  add("v_vanishes",
      residue_text(diff) + "V = " + residue_text(rhs) + " with 48 invertible mod " +
          std::to_string(p) + ", so V = 0",
      "V = " + (invertible ? residue_text(rhs / diff) : std::string("undetermined")),
      invertible && rhs.is_zero());

  const Residue u_value = ref.expected[0];
  add("u_point_exists", "U = " + e1.to_string() + " is nonzero, so some point is U-class",
      "U = " + residue_text(u_value), !u_value.is_zero());

  const TwistedCongruence tw = twisted_congruence_residue(e8, e8);
  add("twisted_reference",
      "reference lift weights 1/2 give 4 sum lambda^2/(ab) = " + residue_text(tw.rhs),
      residue_text(tw.rhs), tw.rhs == ref.expected[0]);

  // Every U-class pair gives ((a+b)^2 - (b-a)^2)/(ab) = 4.
  bool all_four = true;
  std::size_t u_pairs = 0;
  for (std::int64_t a = 1; a < p; ++a) {
    for (std::int64_t b = 1; b < p; ++b) {
      const FixedPointDatum d{a, b, std::nullopt};
      if (theorem_a_filter(d, p) != AdmissibleClass::U) continue;
      ++u_pairs;
      const Residue ra(a, p), rb(b, p);
      const Residue gap = ((ra + rb) * (ra + rb) - (rb - ra) * (rb - ra)) / (ra * rb);
      all_four = all_four && gap == Residue(4, p);
    }
  }
  add("distinguished_lift",
      "lift (b-a)/2 at a U-point and (a_i+b_i)/2 elsewhere; subtracting from the squares sum "
      "leaves ((a+b)^2 - (b-a)^2)/(ab) = 0",
      "4 on all " + std::to_string(u_pairs) + " U-class pairs", all_four);

  const Residue four(4, p);
  trace.contradiction = !four.is_zero() && all_four;
  add("contradiction", "4 = 0 mod " + std::to_string(p),
      "4 mod " + std::to_string(p) + " = " + residue_text(four), four.is_zero());
  if (trace.requires_homological_triviality) {
    add("p7_flag", "at p = 7 the V-class sums are 0 and the argument assumes a homologically "
                   "trivial action",
        "recorded", true);
  }
  return trace;
}

}  // namespace instanton
