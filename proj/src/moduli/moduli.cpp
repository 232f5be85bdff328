#include "instanton/moduli/moduli.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "instanton/error.hpp"
#include "instanton/exactnum/residue.hpp"

namespace instanton {
namespace {

const Rational& require_rho(const FlatConnection& c) {
  if (!c.rho) {
    throw Error(ErrorCode::InconsistentInvariants, "rho invariant unknown for " + c.name, c.name);
  }
  return *c.rho;
}

std::int64_t require_integer(const Rational& value, const std::string& what) {
  if (!value.is_integer()) {
    throw Error(ErrorCode::InconsistentInvariants,
                "inconsistent invariant inputs: " + what + " is not an integer", value.to_string());
  }
  return value.numerator().get_si();
}

void require_prime_at_least_7(std::int64_t p) {
  require_field_prime(p);
  if (p < 7) throw Error(ErrorCode::InvalidArgument, "prime must be at least 7", std::to_string(p));
}

struct Search {
  const std::vector<const FlatConnection*>& pool;
  const FlatConnection& theta;
  std::vector<SplittingChain>& out;
  Rational total;

  void extend(const FlatConnection& cur, const Rational& remaining, std::int64_t dim_left,
              std::vector<ModuliPiece>& pieces) {
    std::vector<const FlatConnection*> targets;
    if (cur.is_trivial()) {
      targets.push_back(&theta);
    } else {
      targets = pool;
    }
    for (const FlatConnection* beta : targets) {
      for (Rational ell = energy_class(cur, *beta); ell <= remaining; ell += Rational(1)) {
        const std::int64_t d = dim_cylinder(ell, cur, *beta);
        if (d < 1 || d > dim_left) continue;
        pieces.push_back({PieceKind::Cylinder, cur.name, beta->name, ell, d});
        if (beta->is_trivial()) {
          if (ell == remaining && d == dim_left) out.push_back({"", pieces, total});
        } else if (ell < remaining) {
          extend(*beta, remaining - ell, dim_left - d, pieces);
        }
        pieces.pop_back();
      }
    }
  }
};

}  // namespace

std::int64_t dim_end(const Rational& ell, const FlatConnection& alpha, int chi, int sig) {
  const Rational value = Rational(8) * ell - Rational(3, 2) * Rational(chi + sig) -
                         Rational(alpha.h1 + alpha.h0, 2) + require_rho(alpha) * Rational(1, 2);
  return require_integer(value, "end-manifold dimension");
}

std::int64_t dim_cylinder(const Rational& ell, const FlatConnection& alpha,
                          const FlatConnection& beta) {
  const Rational value = Rational(8) * ell - Rational(alpha.h() + beta.h(), 2) +
                         (require_rho(beta) - require_rho(alpha)) * Rational(1, 2);
  return require_integer(value, "cylinder dimension");
}

int floer_dim_mod8(const FlatConnection& alpha, const FlatConnection& beta) {
  if (!alpha.mu || !beta.mu) {
    throw Error(ErrorCode::InconsistentInvariants, "Floer index unknown",
                alpha.mu ? beta.name : alpha.name);
  }
  return static_cast<int>(mod_floor(*alpha.mu - *beta.mu - beta.stab_dim(), 8));
}

std::vector<Rational> SplittingChain::energies() const {
  std::vector<Rational> v;
  for (const auto& p : pieces) v.push_back(p.energy);
  return v;
}

std::vector<std::int64_t> SplittingChain::dims() const {
  std::vector<std::int64_t> v;
  for (const auto& p : pieces) v.push_back(p.dim);
  return v;
}

std::vector<SplittingChain> enumerate_splittings(const std::vector<FlatConnection>& connections,
                                                 const Rational& total_charge,
                                                 std::int64_t target_dim,
                                                 const SplittingOptions& options) {
  const FlatConnection* theta = nullptr;
  std::vector<const FlatConnection*> irreducibles;
  for (const auto& c : connections) {
    if (c.is_trivial()) {
      theta = &c;
    } else if (c.kind == ConnectionKind::Irreducible) {
      irreducibles.push_back(&c);
    }
  }
  if (theta == nullptr) {
    throw Error(ErrorCode::InvalidArgument, "connection list must contain the trivial connection");
  }
  std::sort(irreducibles.begin(), irreducibles.end(),
            [](const FlatConnection* x, const FlatConnection* y) { return x->labels < y->labels; });
  std::map<std::string, int> rank;
  for (std::size_t i = 0; i < irreducibles.size(); ++i) rank[irreducibles[i]->name] = static_cast<int>(i);
  rank[theta->name] = static_cast<int>(irreducibles.size());

  std::vector<const FlatConnection*> pool = irreducibles;
  pool.push_back(theta);

  std::vector<SplittingChain> chains;
  Search search{pool, *theta, chains, total_charge};
  for (const FlatConnection* alpha0 : pool) {
    const Rational base = alpha0->is_trivial() ? Rational(0) : alpha0->cs.frac();
    for (Rational ell0 = base; ell0 < total_charge; ell0 += Rational(1)) {
      // The flat trivial connection on X is a single point.
      const std::int64_t d0 = (alpha0->is_trivial() && ell0.is_zero())
                                  ? 0
                                  : dim_end(ell0, *alpha0, options.chi, options.sig);
      if (d0 < 0 || d0 >= target_dim) continue;
      std::vector<ModuliPiece> pieces{{PieceKind::End, "", alpha0->name, ell0, d0}};
      search.extend(*alpha0, total_charge - ell0, target_dim - d0, pieces);
    }
  }

  auto key = [&rank](const SplittingChain& c) {
    std::vector<std::tuple<int, Rational>> seq;
    for (const auto& p : c.pieces) seq.emplace_back(rank.at(p.target), p.energy);
    return std::make_tuple(rank.at(c.pieces.front().target), c.pieces.size(), seq);
  };
  std::sort(chains.begin(), chains.end(),
            [&key](const SplittingChain& x, const SplittingChain& y) { return key(x) < key(y); });
  for (std::size_t i = 0; i < chains.size(); ++i) {
    chains[i].label = i < 26 ? std::string(1, static_cast<char>('A' + i)) : "Z" + std::to_string(i);
  }
  return chains;
}

std::set<std::int64_t> holonomy_filter(std::int64_t e, std::int64_t p) {
  require_prime_at_least_7(p);
  return {mod_floor(e, p), mod_floor(-e, p)};
}

ObstructionVerdict invariant_connection_obstruction(const Rational& ell,
                                                    const SeifertManifold& sigma, std::int64_t p) {
  if (gcd64(p, sigma.product()) != 1) {
    throw Error(ErrorCode::LevelNotCoprime, "level not coprime to a1a2a3",
                sigma.to_text() + "@p=" + std::to_string(p));
  }
  require_field_prime(p);
  if (ell.sign() <= 0 || ell > Rational(1)) {
    throw Error(ErrorCode::InvalidArgument, "energy must lie in (0, 1]", ell.to_string());
  }
  ObstructionVerdict v;
  v.quotient_energy = Rational(4) * ell / Rational(p);
  const BigInt den = v.quotient_energy.denominator();
  v.obstructed = BigInt(sigma.product()) % den != 0;
  v.reason = "4l/p = " + v.quotient_energy.to_string() + " has denominator " + den.get_str() +
             (v.obstructed ? " not dividing " : " dividing ") + std::to_string(sigma.product());
  return v;
}

std::int64_t isotropy_weight(std::int64_t a, std::int64_t b, std::int64_t p,
                             WeightLocation location) {
  require_field_prime(p);
  if (mod_floor(a, p) == 0 || mod_floor(b, p) == 0) {
    throw Error(ErrorCode::NotIsolatedFixedPoint, "not an isolated fixed point",
                "(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  const std::int64_t w = mod_floor(location == WeightLocation::OwnFiber ? b - a : a + b, 2 * p);
  return std::min(w, mod_floor(-w, 2 * p));
}

TrivialSplittingVerdict trivial_splitting_obstruction(std::int64_t a, std::int64_t b,
                                                      std::int64_t p) {
  const std::int64_t own = isotropy_weight(a, b, p, WeightLocation::OwnFiber);
  const std::int64_t other = isotropy_weight(a, b, p, WeightLocation::OtherFixedPoint);
  TrivialSplittingVerdict v;
  const std::int64_t two_a = mod_floor(2 * a, p), two_b = mod_floor(2 * b, p);
  v.steps.push_back("weights over the own fiber: +-" + std::to_string(own) + " mod " +
                    std::to_string(2 * p));
  v.steps.push_back("weights over the other fixed points: +-" + std::to_string(other) + " mod " +
                    std::to_string(2 * p));
  v.steps.push_back("a+b = b-a mod p forces 2a = 0; here 2a = " + std::to_string(two_a) +
                    " mod " + std::to_string(p));
  v.steps.push_back("a+b = -(b-a) mod p forces 2b = 0; here 2b = " + std::to_string(two_b) +
                    " mod " + std::to_string(p));
  v.obstructed = two_a != 0 && two_b != 0;
  v.steps.push_back(v.obstructed ? "no compatible lift: splitting obstructed"
                                 : "compatible lift possible");
  return v;
}

}  // namespace instanton
