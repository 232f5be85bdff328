#include <mpfr.h>

#include <cstdlib>
#include <vector>

#include "instanton/error.hpp"
#include "instanton/rho/rho.hpp"

namespace instanton {
namespace {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

// Angle pi * num / den.
Real angle(const Real& pi, std::int64_t num, std::int64_t den) {
  Real x(pi.prec());
  mpfr_mul_si(x.get(), pi.get(), static_cast<long>(num), MPFR_RNDN);
  mpfr_div_si(x.get(), x.get(), static_cast<long>(den), MPFR_RNDN);
  return x;
}

Real sin_sq(const Real& x) {
  Real s(x.prec());
  mpfr_sin(s.get(), x.get(), MPFR_RNDN);
  mpfr_sqr(s.get(), s.get(), MPFR_RNDN);
  return s;
}

std::string to_decimal(const Real& x, int digits) {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, x.get());
  return std::string(buf.data());
}

Rational reconstruct(const Real& x, const BigInt& bound, int tolerance_bits) {
  const mpfr_prec_t prec = x.prec();
  // Convergents h1/k1 of the continued fraction of x; (h2, k2) is the previous one.
  BigInt h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  Real rest = x;
  Real floor_part(prec);
  BigInt a;
  BigInt best_h = 0, best_k = 0;
  for (int iter = 0; iter < 4 * static_cast<int>(prec); ++iter) {
    mpfr_floor(floor_part.get(), rest.get());
    mpfr_get_z(a.get_mpz_t(), floor_part.get(), MPFR_RNDN);
    BigInt hn = a * h1 + h2;
    BigInt kn = a * k1 + k2;
    h2 = h1;
    k2 = k1;
    h1 = hn;
    k1 = kn;
    if (k1 > bound) break;
    best_h = h1;
    best_k = k1;
    mpfr_sub(rest.get(), rest.get(), floor_part.get(), MPFR_RNDN);
    if (mpfr_zero_p(rest.get()) || mpfr_get_exp(rest.get()) < -(prec - 16)) break;
    mpfr_ui_div(rest.get(), 1, rest.get(), MPFR_RNDN);
  }
  if (best_k == 0) {
    throw Error(ErrorCode::ReconstructionFailed, "no convergent within the denominator bound",
                to_decimal(x, 40));
  }
  Real diff(prec);
  Real cand(prec);
  mpfr_set_z(cand.get(), best_h.get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(cand.get(), cand.get(), best_k.get_mpz_t(), MPFR_RNDN);
  mpfr_sub(diff.get(), x.get(), cand.get(), MPFR_RNDN);
  if (!mpfr_zero_p(diff.get()) && mpfr_get_exp(diff.get()) > -tolerance_bits) {
    throw Error(ErrorCode::ReconstructionFailed,
                "best convergent within the bound does not match to the required precision",
                to_decimal(x, 40));
  }
  return Rational(best_h, best_k);
}

}  // namespace

int precision_bits_from_env() {
  const char* env = std::getenv("INSTANTON_ARITH_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return 300;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 64 || v > 100000) {
    throw Error(ErrorCode::InvalidArgument,
                "INSTANTON_ARITH_PRECISION_BITS must be an integer in [64, 100000]", env);
  }
  return static_cast<int>(v);
}

Rational reconstruct_rational(const std::string& decimal, const BigInt& bound, int precision_bits,
                              int tolerance_bits) {
  Real x(precision_bits);
  if (mpfr_set_str(x.get(), decimal.c_str(), 10, MPFR_RNDN) != 0) {
    throw Error(ErrorCode::InvalidArgument, "not a decimal number", decimal);
  }
  return reconstruct(x, bound, tolerance_bits);
}

NumericRho rho_reducible_numeric(const QuotientSpace& q, std::int64_t l, int precision_bits) {
  if (l < 0 || l >= q.p) {
    throw Error(ErrorCode::InvalidArgument, "holonomy must lie in [0, p)", std::to_string(l));
  }
  const mpfr_prec_t prec = precision_bits;
  const std::int64_t p = q.p;
  const std::int64_t a = q.base.product();
  Real pi(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);

  Real first(prec), second(prec), tmp(prec);
  for (std::int64_t k = 1; k < p; ++k) {
    const Real s = sin_sq(angle(pi, k * l, p));
    mpfr_add(first.get(), first.get(), s.get(), MPFR_RNDN);
    const Real c = sin_sq(angle(pi, k, p));
    mpfr_div(tmp.get(), s.get(), c.get(), MPFR_RNDN);
    mpfr_add(second.get(), second.get(), tmp.get(), MPFR_RNDN);
  }
  Real total(prec);
  mpfr_mul_si(first.get(), first.get(), -2, MPFR_RNDN);
  mpfr_div_si(first.get(), first.get(), static_cast<long>(p), MPFR_RNDN);
  mpfr_mul_si(second.get(), second.get(), 2, MPFR_RNDN);
  mpfr_div_si(second.get(), second.get(), static_cast<long>(a * p), MPFR_RNDN);
  mpfr_add(total.get(), first.get(), second.get(), MPFR_RNDN);

  for (int i = 0; i < 3; ++i) {
    const std::int64_t ai = q.base.a[i];
    const std::int64_t bi = q.base.b_pairs[i];
    Real inner(prec), cx(prec), cy(prec), y(prec);
    for (std::int64_t m1 = 0; m1 < p; ++m1) {
      const Real w = sin_sq(angle(pi, m1 * l, p));
      if (mpfr_zero_p(w.get()) || (m1 * l) % p == 0) continue;
      for (std::int64_t m2 = 1; m2 < ai; ++m2) {
        mpfr_cot(cx.get(), angle(pi, m2, ai).get(), MPFR_RNDN);
        // pi m1/p - pi m2 b_i/a_i = pi (m1 a_i - m2 b_i p)/(p a_i)
        mpfr_cot(cy.get(), angle(pi, m1 * ai - m2 * bi * p, p * ai).get(), MPFR_RNDN);
        mpfr_mul(y.get(), cx.get(), cy.get(), MPFR_RNDN);
        mpfr_mul(y.get(), y.get(), w.get(), MPFR_RNDN);
        mpfr_add(inner.get(), inner.get(), y.get(), MPFR_RNDN);
      }
    }
    mpfr_mul_si(inner.get(), inner.get(), 2, MPFR_RNDN);
    mpfr_div_si(inner.get(), inner.get(), static_cast<long>(p * ai), MPFR_RNDN);
    mpfr_add(total.get(), total.get(), inner.get(), MPFR_RNDN);
  }

  NumericRho out;
  out.precision_bits = precision_bits;
  out.approximate = to_decimal(total, 40);
  out.denominator_bound = BigInt(4 * p) * BigInt(a) * BigInt(a);
  out.reconstructed = reconstruct(total, out.denominator_bound, precision_bits / 2);
  return out;
}

}  // namespace instanton
