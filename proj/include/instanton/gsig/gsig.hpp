#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "instanton/exactnum/cyclotomic.hpp"
#include "instanton/exactnum/rational.hpp"
#include "instanton/exactnum/residue.hpp"
#include "instanton/exactnum/series.hpp"

namespace instanton {

/// Isolated fixed point with tangential representation C^2(a, b) and an
/// optional lift weight lambda (a half-integer).
struct FixedPointDatum {
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::optional<Rational> lambda;

  /// lambda as an element of Z/p: (2 lambda) * inv(2).
  Residue lambda_residue(std::int64_t p) const;
  /// Orbit-least representative of {(a,b),(b,a),(-a,-b),(-b,-a)} with both
  /// entries in [1, p-1]. The lift weight is carried along unchanged.
  FixedPointDatum canonical(std::int64_t p) const;
  std::string to_text() const;

  friend bool operator==(const FixedPointDatum&, const FixedPointDatum&) = default;
};

/// Fixed 2-sphere with self-intersection alpha and normal rotation c.
struct FixedSphereDatum {
  std::int64_t alpha = 0;
  std::int64_t c = 1;
  std::optional<Rational> lambda;
};

struct ExtensionData {
  std::int64_t p = 7;
  std::vector<FixedPointDatum> points;
  std::vector<FixedSphereDatum> spheres;
  std::int64_t signature = -8;
  std::int64_t euler = 9;

  /// Checks the prime, nondegenerate rotation data and the Euler count
  /// |points| + 2 |spheres| = euler.
  void validate() const;
};

/// Equivariant plumbing along the E8 graph at prime p, with lift weights 1/2.
ExtensionData e8_plumbing(std::int64_t p);

/// ((t^a+1)/(t^a-1)) ((t^b+1)/(t^b-1)) in Q(zeta_p), times t^lambda + t^-lambda
/// when twisted.
CyclotomicElement lefschetz_point_term(const FixedPointDatum& d, std::int64_t p, bool twisted);
/// -4 alpha t^c/(t^c-1)^2, times t^lambda + t^-lambda when twisted.
CyclotomicElement lefschetz_sphere_term(const FixedSphereDatum& s, std::int64_t p, bool twisted);
/// Sum of E8 plumbing point terms + 8t/(t-1)^2 + 8.
CyclotomicElement eta_plumbing(std::int64_t p);

/// Sum of Lefschetz terms over the fixed set.
CyclotomicElement lefschetz_number(const ExtensionData& ext, bool twisted = false);

/// True iff L(X, t) - eta(t) equals the signature exactly. With
/// all_generators the check is repeated at every conjugate generator.
bool gsig_identity_check(const ExtensionData& ext, bool all_generators = false);

/// (t-1)^2 times the point term, expanded in u = t - 1 through u^order.
/// Untwisted order <= 4, twisted order <= 2 (twisting requires lambda).
TruncatedSeries series_expand_term(const FixedPointDatum& d, int order, bool twisted = false);
/// (t-1)^2 times the fixed-sphere summand 4 alpha t^c/(t^c-1)^2 as it
/// appears when a plumbed extension is compared with a point-only one, that
/// is the negative of the sphere's Lefschetz term.
TruncatedSeries series_expand_term(const FixedSphereDatum& s, int order, bool twisted = false);

struct TwistedCongruence {
  Residue lhs;
  Residue rhs;
  bool verdict;
};

struct ProofStep {
  std::string name;
  std::string statement;
  std::string value;
  bool holds;
};

struct CongruenceReport {
  std::int64_t p;
  std::array<Residue, 3> residues;
  std::array<Residue, 3> expected;
  std::array<bool, 3> verdicts;
  /// Expected values as exact rationals before reduction mod p.
  std::array<Rational, 3> expected_exact;
  std::optional<TwistedCongruence> twisted;
  std::vector<ProofStep> trace;

  bool all_true() const;
};

/// r1 = sum 1/(ab), r2 = sum (a^2+b^2+1)/(ab), r3 = sum (a^4+b^4-5a^2b^2+3)/(ab)
/// over the points of ext, with expected values derived from the reference
/// through series_expand_term.
CongruenceReport congruence_residues(const ExtensionData& ext, const ExtensionData& reference);
CongruenceReport congruence_residues(const ExtensionData& ext);

/// The same three quantities read off the exact field element (t-1)^2 L:
/// lift to a polynomial of degree <= p-2, Taylor expand at t = 1, reduce the
/// coefficients of u^0, u^2, u^4 mod p and undo the closed-form scalings.
std::array<Residue, 3> field_lift_residues(const ExtensionData& ext);

/// Point-only closed-form sums r1, r2, r3 as residues.
std::array<Residue, 3> closed_form_residues(const std::vector<FixedPointDatum>& points,
                                            std::int64_t p);

/// 4 sum lambda_i^2/(a_i b_i) for ext against the reference's point and
/// sphere contributions read from the order-2 twisted coefficients.
TwistedCongruence twisted_congruence_residue(const ExtensionData& ext,
                                             const ExtensionData& reference);

enum class AdmissibleClass { U, V, Inadmissible };
std::string to_string(AdmissibleClass c);

/// a + b = +-1 is the U-class, a + b = +-7 the V-class (at p = 7 that is
/// a + b = 0), anything else is inadmissible.
AdmissibleClass theorem_a_filter(const FixedPointDatum& d, std::int64_t p);

struct ProofTrace {
  std::int64_t p;
  std::vector<ProofStep> steps;
  bool contradiction;
  /// At p = 7 the argument needs the action to be homologically trivial.
  bool requires_homological_triviality;
};

/// Residue derivation that no admissible isolated-fixed-point data exists
/// at p. Throws Error(HypothesesViolated) unless p is a prime >= 7.
ProofTrace prove_theorem_b(std::int64_t p);

enum class SearchFilter { Identity, Congruences, TheoremA, Twisted };
std::string to_string(SearchFilter f);
SearchFilter parse_search_filter(const std::string& name);

struct SearchOptions {
  int num_points = 9;
  std::set<SearchFilter> filters;
  int jobs = 1;
  double budget = 2e8;
};

struct SearchResult {
  std::int64_t p;
  std::size_t classes;
  double multisets;  ///< size of the enumerated space
  std::vector<std::vector<FixedPointDatum>> solutions;
};

/// Canonical rotation pairs at p, sorted lexicographically.
std::vector<FixedPointDatum> canonical_classes(std::int64_t p);

/// Exhaustive search over multisets of canonical fixed points. Throws
/// Error(SearchOverBudget) when the space exceeds options.budget.
SearchResult search_extensions(std::int64_t p, const SearchOptions& options);

}  // namespace instanton
