#include "instanton/seifert/seifert.hpp"

#include <sstream>

#include "instanton/error.hpp"
#include "instanton/exactnum/residue.hpp"

namespace instanton {
namespace {

std::string triple_text(const Triple& a) {
  std::ostringstream os;
  os << "(" << a[0] << "," << a[1] << "," << a[2] << ")";
  return os.str();
}

}  // namespace

Rational SeifertManifold::euler_sum() const {
  Rational acc(b);
  for (int i = 0; i < 3; ++i) acc += Rational(b_pairs[i], a[i]);
  return acc;
}

SeifertManifold SeifertManifold::shift_pair(int i, std::int64_t k) const {
  SeifertManifold out = *this;
  out.b_pairs[i] += k * a[i];
  out.b -= k;
  return out;
}

std::string SeifertManifold::to_text() const {
  std::string s = "sigma" + triple_text(a);
  if (level != 1) s += "@p=" + std::to_string(level);
  return s;
}

Triple QuotientSpace::pair_numerators() const {
  return {p * base.b_pairs[0], p * base.b_pairs[1], p * base.b_pairs[2]};
}

std::string QuotientSpace::to_text() const {
  return "sigma" + triple_text(base.a) + "@p=" + std::to_string(p);
}

void validate_multiplicities(const Triple& a) {
  for (auto ai : a) {
    if (ai < 2) {
      throw Error(ErrorCode::InvalidBrieskornData, "invalid Brieskorn data: multiplicity below 2",
                  triple_text(a));
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (gcd64(a[i], a[j]) != 1) {
        throw Error(ErrorCode::InvalidBrieskornData,
                    "invalid Brieskorn data: multiplicities not pairwise coprime", triple_text(a));
      }
    }
  }
}

SeifertManifold normalize(const Triple& a, std::int64_t p) {
  validate_multiplicities(a);
  if (p < 1) {
    throw Error(ErrorCode::InvalidArgument, "level must be positive", std::to_string(p));
  }
  for (auto ai : a) {
    if (gcd64(ai, p) != 1) {
      throw Error(ErrorCode::NonFreeAction, "non-free action data: level shares a factor with " +
                                                std::to_string(ai),
                  triple_text(a) + "@p=" + std::to_string(p));
    }
  }
  const std::int64_t c1 = a[1] * a[2], c2 = a[0] * a[2], c3 = a[0] * a[1];
  for (std::int64_t b1 = 1; b1 < a[0]; ++b1) {
    for (std::int64_t b2 = 1; b2 < a[1]; ++b2) {
      const std::int64_t rest = p - c1 * b1 - c2 * b2;
      if (rest % c3 == 0) return SeifertManifold{a, {b1, b2, rest / c3}, 0, p};
    }
  }
  throw Error(ErrorCode::Internal, "no Seifert solution for coprime data", triple_text(a));
}

QuotientSpace quotient(const SeifertManifold& sigma, std::int64_t p) {
  if (sigma.level != 1) {
    throw Error(ErrorCode::InvalidArgument, "quotient requires the level-1 sphere data",
                sigma.to_text());
  }
  for (auto ai : sigma.a) {
    if (p > 1 && ai % p == 0) {
      throw Error(ErrorCode::NonFreeAction, "action not free on Sigma: p divides a multiplicity",
                  sigma.to_text() + "@p=" + std::to_string(p));
    }
  }
  require_field_prime(p);
  return QuotientSpace{sigma, p};
}

}  // namespace instanton
