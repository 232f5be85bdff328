#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "instanton/error.hpp"
#include "instanton/gsig/gsig.hpp"

namespace instanton {
namespace {

// Per-class data reduced to machine integers for the inner loop.
struct ClassData {
  std::vector<std::int64_t> field;  // Lefschetz term times the common denominator
  std::array<std::int64_t, 3> r;    // closed-form congruence summands mod p
  std::int64_t squares;             // (a+b)^2/(ab) mod p
  std::int64_t swapped;             // (b-a)^2/(ab) mod p
  bool u_class;
};

struct Context {
  std::int64_t p;
  int k;
  bool identity, congruences, twisted;
  std::vector<ClassData> classes;
  std::vector<std::int64_t> target;
  std::array<std::int64_t, 3> expected;
  std::int64_t twisted_rhs;
};

double multiset_count(std::size_t n, int k) {
  // C(n + k - 1, k)
  double c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<double>(n + static_cast<std::size_t>(i) - 1) / i;
  return std::round(c);
}

std::vector<std::int64_t> scale_to_integers(const CyclotomicElement& x, const BigInt& denom) {
  std::vector<std::int64_t> out;
  for (const auto& c : x.coeffs()) {
    const Rational s = c * Rational(denom);
    // 2^58 leaves room to add nine terms without overflow.
    if (!s.is_integer() || abs(s.numerator()) > BigInt("288230376151711744")) {
      throw Error(ErrorCode::Internal, "field coefficients too large for the search kernel");
    }
    out.push_back(s.numerator().get_si());
  }
  return out;
}

bool passes_twisted(const Context& ctx, const std::vector<int>& pick) {
  std::int64_t total = 0;
  for (int i : pick) total += ctx.classes[static_cast<std::size_t>(i)].squares;
  for (int i : pick) {
    const ClassData& c = ctx.classes[static_cast<std::size_t>(i)];
    if (!c.u_class) continue;
    if (mod_floor(total - c.squares + c.swapped, ctx.p) != ctx.twisted_rhs) return false;
  }
  return true;
}

void search_from(const Context& ctx, int first, std::vector<std::vector<int>>& out) {
  const std::size_t dim = ctx.target.size();
  const int n = static_cast<int>(ctx.classes.size());
  std::vector<int> pick(static_cast<std::size_t>(ctx.k));
  std::vector<std::vector<std::int64_t>> field(static_cast<std::size_t>(ctx.k) + 1,
                                               std::vector<std::int64_t>(dim, 0));
  std::vector<std::array<std::int64_t, 3>> res(static_cast<std::size_t>(ctx.k) + 1, {0, 0, 0});

  auto push = [&](int depth, int idx) {
    const ClassData& c = ctx.classes[static_cast<std::size_t>(idx)];
    const auto d = static_cast<std::size_t>(depth);
    pick[d] = idx;
    if (ctx.identity) {
      for (std::size_t j = 0; j < dim; ++j) field[d + 1][j] = field[d][j] + c.field[j];
    }
    for (std::size_t j = 0; j < 3; ++j) res[d + 1][j] = (res[d][j] + c.r[j]) % ctx.p;
  };
  auto accept = [&]() {
    const auto k = static_cast<std::size_t>(ctx.k);
    if (ctx.identity && field[k] != ctx.target) return;
    if (ctx.congruences && res[k] != ctx.expected) return;
    if (ctx.twisted && !passes_twisted(ctx, pick)) return;
    out.push_back(pick);
  };

  if (ctx.k == 0) return;
  // Nondecreasing index sequences starting at `first`, depth first.
  auto walk = [&](auto&& self, int depth, int start) -> void {
    for (int idx = start; idx < n; ++idx) {
      push(depth, idx);
      if (depth + 1 == ctx.k) {
        accept();
      } else {
        self(self, depth + 1, idx);
      }
    }
  };
  push(0, first);
  if (ctx.k == 1) {
    accept();
  } else {
    walk(walk, 1, first);
  }
}

}  // namespace

std::string to_string(SearchFilter f) {
  switch (f) {
    case SearchFilter::Identity: return "identity";
    case SearchFilter::Congruences: return "congruences";
    case SearchFilter::TheoremA: return "theorem-a";
    case SearchFilter::Twisted: return "twisted";
  }
  return "?";
}

SearchFilter parse_search_filter(const std::string& name) {
  if (name == "identity" || name == "gsig-identity") return SearchFilter::Identity;
  if (name == "congruences") return SearchFilter::Congruences;
  if (name == "theorem-a") return SearchFilter::TheoremA;
  if (name == "twisted") return SearchFilter::Twisted;
  throw Error(ErrorCode::InvalidArgument, "unknown search filter", name);
}

std::vector<FixedPointDatum> canonical_classes(std::int64_t p) {
  if (p < 7 || !is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument, "G-signature data needs a prime p >= 7",
                std::to_string(p));
  }
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::int64_t a = 1; a < p; ++a) {
    for (std::int64_t b = 1; b < p; ++b) {
      const FixedPointDatum c = FixedPointDatum{a, b, std::nullopt}.canonical(p);
      seen.emplace(c.a, c.b);
    }
  }
  std::vector<FixedPointDatum> out;
  for (auto [a, b] : seen) out.push_back({a, b, std::nullopt});
  return out;
}

SearchResult search_extensions(std::int64_t p, const SearchOptions& options) {
  if (options.num_points < 0) {
    throw Error(ErrorCode::InvalidArgument, "number of points must be non-negative");
  }
  std::vector<FixedPointDatum> classes = canonical_classes(p);
  const auto& f = options.filters;
  if (f.contains(SearchFilter::TheoremA)) {
    std::erase_if(classes, [p](const FixedPointDatum& d) {
      return theorem_a_filter(d, p) == AdmissibleClass::Inadmissible;
    });
  }
  const double space = multiset_count(classes.size(), options.num_points);
  if (space > options.budget) {
    std::ostringstream msg;
    msg << "search space of " << space << " multisets over " << classes.size()
        << " classes exceeds the budget of " << options.budget;
    throw Error(ErrorCode::SearchOverBudget, msg.str(), std::to_string(p));
  }

  Context ctx{p,
              options.num_points,
              f.contains(SearchFilter::Identity),
              f.contains(SearchFilter::Congruences),
              f.contains(SearchFilter::Twisted),
              {},
              {},
              {0, 0, 0},
              0};
  const ExtensionData e8 = e8_plumbing(p);
  const CongruenceReport ref = congruence_residues(ExtensionData{p, {}, {}, -8, 0}, e8);
  for (std::size_t i = 0; i < 3; ++i) ctx.expected[i] = ref.expected[i].value();
  ctx.twisted_rhs = twisted_congruence_residue(e8, e8).rhs.value();

  std::vector<CyclotomicElement> terms;
  BigInt denom = 1;
  const CyclotomicElement target = eta_plumbing(p) + CyclotomicElement::constant(p, e8.signature);
  auto absorb = [&denom](const CyclotomicElement& x) {
    for (const auto& c : x.coeffs()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(),
                                             c.denominator().get_mpz_t());
  };
  if (ctx.identity) {
    absorb(target);
    for (const auto& d : classes) {
      terms.push_back(lefschetz_point_term(d, p, false));
      absorb(terms.back());
    }
    ctx.target = scale_to_integers(target, denom);
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const FixedPointDatum& d = classes[i];
    const auto r = closed_form_residues({d}, p);
    const Residue a(d.a, p), b(d.b, p);
    ClassData c{ctx.identity ? scale_to_integers(terms[i], denom) : std::vector<std::int64_t>{},
                {r[0].value(), r[1].value(), r[2].value()},
                ((a + b) * (a + b) / (a * b)).value(),
                ((b - a) * (b - a) / (a * b)).value(),
                theorem_a_filter(d, p) == AdmissibleClass::U};
    ctx.classes.push_back(std::move(c));
  }

  const int jobs = std::max(1, options.jobs);
  std::vector<std::vector<std::vector<int>>> partial(static_cast<std::size_t>(jobs));
  auto work = [&](int job) {
    for (int first = job; first < static_cast<int>(classes.size()); first += jobs) {
      search_from(ctx, first, partial[static_cast<std::size_t>(job)]);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  std::vector<std::vector<int>> merged;
  for (auto& part : partial) merged.insert(merged.end(), part.begin(), part.end());
  std::sort(merged.begin(), merged.end());

  SearchResult result{p, classes.size(), space, {}};
  for (const auto& pick : merged) {
    std::vector<FixedPointDatum> points;
    for (int i : pick) points.push_back(classes[static_cast<std::size_t>(i)]);
    // Exact re-verification of whatever the integer kernel accepted.
    ExtensionData ext{p, points, {}, e8.signature, options.num_points};
    if (ctx.identity && !gsig_identity_check(ext)) {
      throw Error(ErrorCode::Internal, "search kernel accepted a multiset failing the identity");
    }
    if (ctx.congruences) {
      const CongruenceReport rep = congruence_residues(ext, e8);
      if (!(rep.verdicts[0] && rep.verdicts[1] && rep.verdicts[2])) {
        throw Error(ErrorCode::Internal, "search kernel accepted a multiset failing a congruence");
      }
    }
    result.solutions.push_back(std::move(points));
  }
  return result;
}

}  // namespace instanton
