#ifndef REESTYPE_TESTS_HELPERS_HPP
#define REESTYPE_TESTS_HELPERS_HPP

#include <functional>
#include <random>
#include <span>
#include <vector>

#include "reestype/errors.hpp"
#include "reestype/gf_linalg.hpp"
#include "reestype/monres.hpp"
#include "reestype/multipliers.hpp"
#include "reestype/quotient.hpp"
#include "reestype/rees.hpp"

namespace testutil {

using namespace reestype;

inline PolyRing ring_xy() { return PolyRing(kDefaultPrime, {"x", "y"}); }

inline QuotientRing two_planes_ring() {
  PolyRing amb(kDefaultPrime, {"a", "b", "c", "d"});
  return QuotientRing(amb, amb.parse_list("a*b, a*d, c*b, c*d", amb.grevlex()));
}

/// The counterexample ring k[x,y,z,w]/(w^2, wz).
inline QuotientRing section2_ring(std::uint32_t p = kDefaultPrime) {
  PolyRing amb(p, {"x", "y", "z", "w"});
  return QuotientRing(amb, amb.parse_list("w^2, w*z", amb.grevlex()));
}

inline Polynomial random_poly(const PolyRing& ring, const MonomialOrder& ord,
                              std::mt19937_64& rng, std::uint32_t maxdeg = 3,
                              std::size_t maxterms = 4) {
  std::uniform_int_distribution<std::size_t> nterms(0, maxterms);
  std::uniform_int_distribution<std::uint32_t> coef(0, ring.characteristic() - 1);
  std::uniform_int_distribution<std::uint32_t> expo(0, maxdeg);
  std::vector<Term> terms;
  std::size_t n = nterms(rng);
  for (std::size_t t = 0; t < n; ++t) {
    Monomial m(ring.nvars());
    std::uint32_t budget = maxdeg;
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      std::uint32_t e = expo(rng) % (budget + 1);
      m.set(v, e);
      budget -= e;
    }
    terms.push_back({coef(rng), m});
  }
  return Polynomial::normalized(std::move(terms), ring.field(), ord);
}

/// Sparse low-degree sample used by the Frobenius-closure sampling.
inline Polynomial random_sparse_poly(const PolyRing& ring, const MonomialOrder& ord,
                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> nterms(1, 3);
  std::uniform_int_distribution<std::uint32_t> coef(1, ring.characteristic() - 1);
  std::uniform_int_distribution<std::uint32_t> expo(0, 2);
  std::vector<Term> terms;
  std::size_t n = nterms(rng);
  for (std::size_t t = 0; t < n; ++t) {
    Monomial m(ring.nvars());
    std::uint32_t budget = 2;
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      std::uint32_t e = expo(rng) % (budget + 1);
      m.set(v, e);
      budget -= e;
    }
    terms.push_back({coef(rng), m});
  }
  return Polynomial::normalized(std::move(terms), ring.field(), ord);
}

inline Monomial random_monomial(std::size_t nvars, std::uint32_t maxexp,
                                std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> expo(0, maxexp);
  Monomial m(nvars);
  for (std::size_t v = 0; v < nvars; ++v) m.set(v, expo(rng));
  return m;
}

/// Brute-force ideal membership for tiny cases: f in (gens) iff some
/// combination sum q_i*gens_i with deg q_i <= cap matches f, solved as an
/// F_p linear system over the monomial basis. Independent of the Groebner
/// path.
inline bool member_by_linear_algebra(const Polynomial& f,
                                     std::span<const Polynomial> gens,
                                     const PolyRing& ring, std::uint32_t degcap) {
  MonomialOrder ord = ring.grevlex();
  // collect all monomials of degree <= degcap as the equation index set
  std::vector<Monomial> all;
  std::vector<std::uint32_t> cur(ring.nvars(), 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t v,
                                                            std::uint32_t left) {
    if (v == ring.nvars()) {
      all.push_back(Monomial::from(cur));
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur[v] = e;
      rec(v + 1, left - e);
    }
    cur[v] = 0;
  };
  rec(0, degcap);
  auto index_of = [&](const Monomial& m) -> std::size_t {
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i] == m) return i;
    }
    return all.size();
  };
  // unknowns: coefficients of each multiplier monomial per generator
  std::vector<std::pair<std::size_t, Monomial>> unknowns;  // (gen index, mono)
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::uint32_t gd = gens[g].total_degree();
    for (const auto& m : all) {
      if (m.degree() + gd <= degcap) unknowns.push_back({g, m});
    }
  }
  std::vector<std::vector<std::uint32_t>> A(
      all.size(), std::vector<std::uint32_t>(unknowns.size(), 0));
  std::vector<std::uint32_t> b(all.size(), 0);
  const PrimeField& F = ring.field();
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& [g, mult] = unknowns[u];
    for (const Term& t : gens[g].terms()) {
      Monomial prod = t.mono.times(mult);
      std::size_t row = index_of(prod);
      if (row == all.size()) return false;  // exceeded cap, bail out
      A[row][u] = F.add(A[row][u], t.coef);
    }
  }
  for (const Term& t : f.terms()) {
    std::size_t row = index_of(t.mono);
    if (row == all.size()) return false;
    b[row] = t.coef;
  }
  return gf_solve(std::move(A), std::move(b), F).has_value();
}

/// Exact composition check d_i . d_{i+1} == 0 for every adjacent pair.
inline bool complex_composes_to_zero(const FreeComplex& C, const PolyRing& ring) {
  MonomialOrder ord = ring.grevlex();
  const PrimeField& F = ring.field();
  for (std::size_t i = 0; i + 1 < C.mats.size(); ++i) {
    const Matrix& A = C.mats[i];
    const Matrix& B = C.mats[i + 1];
    if (A.empty() || B.empty()) continue;
    for (std::size_t r = 0; r < A.size(); ++r) {
      for (std::size_t c = 0; c < B[0].size(); ++c) {
        Polynomial acc;
        for (std::size_t k = 0; k < B.size(); ++k) {
          acc = poly_add(acc, poly_mul(A[r][k], B[k][c], F, ord), F, ord);
        }
        if (!acc.is_zero()) return false;
      }
    }
  }
  return true;
}

/// Random monomial ideal in <= 4 variables with <= 6 generators.
inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t nvars,
                                           std::size_t max_gens = 6,
                                           std::uint32_t max_exp = 3) {
  std::uniform_int_distribution<std::size_t> dgens(2, max_gens);
  std::vector<Monomial> gens;
  std::size_t ng = dgens(rng);
  for (std::size_t g = 0; g < ng; ++g) {
    Monomial m = random_monomial(nvars, max_exp, rng);
    if (m.is_one()) m.set(rng() % nvars, 1);
    gens.push_back(m);
  }
  return MonomialIdeal(nvars, gens);
}

}  // namespace testutil

#endif
