#include "reestype/monres.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "reestype/errors.hpp"
#include "reestype/gf_linalg.hpp"

namespace reestype {

namespace {
constexpr std::uint32_t kMinorCap = 8;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens)
    : nvars_(nvars) {
  for (const auto& g : gens) {
    if (g.nvars() != nvars_) {
      throw PreconditionError("monomial ideal generator has wrong variable count");
    }
  }
  // minimalize: drop duplicates and anything divisible by another
  // generator; ascending order, so every potential divisor is kept first
  MonomialOrder ord = MonomialOrder::grevlex(nvars);
  std::sort(gens.begin(), gens.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens_) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(g);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_) {
    if (g.divides(m)) return true;
  }
  return false;
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> quot;
  quot.reserve(gens_.size());
  for (const auto& g : gens_) {
    quot.push_back(g.divided_by(Monomial::gcd(g, m)));
  }
  return MonomialIdeal(nvars_, std::move(quot));
}

bool is_stable(const MonomialIdeal& I, std::span<const std::size_t> variable_order) {
  if (variable_order.size() != I.nvars()) {
    throw PreconditionError("stability test: variable order must list every variable");
  }
  for (const Monomial& m : I.gens()) {
    // leading position: first listed variable dividing m
    std::size_t lead_pos = variable_order.size();
    for (std::size_t pos = 0; pos < variable_order.size(); ++pos) {
      if (m[variable_order[pos]] > 0) {
        lead_pos = pos;
        break;
      }
    }
    if (lead_pos == variable_order.size()) continue;  // m == 1
    std::size_t lead_var = variable_order[lead_pos];
    for (std::size_t pos = lead_pos + 1; pos < variable_order.size(); ++pos) {
      std::size_t v = variable_order[pos];
      if (m[v] == 0) continue;
      Monomial ex = m;
      ex.set(v, ex[v] - 1);
      ex.set(lead_var, ex[lead_var] + 1);
      if (!I.contains(ex)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> FreeComplex::betti() const {
  std::vector<std::size_t> b;
  b.reserve(twists.size());
  for (const auto& t : twists) b.push_back(t.size());
  return b;
}

std::vector<long> FreeComplex::expected_ranks() const {
  std::size_t n = length();
  std::vector<long> r(n + 2, 0);  // r[1..n], r[n+1] = 0
  for (std::size_t i = n; i >= 1; --i) {
    r[i] = static_cast<long>(twists[i].size()) - r[i + 1];
  }
  return r;
}

namespace {

struct ConeBuilder {
  const PolyRing& ring;
  const PrimeField& F;
  MonomialOrder ord;

  Polynomial entry(std::uint32_t coef, const Monomial& m) const {
    return ring.monomial_poly(m, ord, coef);
  }

  // scalar and monomial of a single-term entry; zero polynomial -> coef 0
  std::pair<std::uint32_t, Monomial> split(const Polynomial& p) const {
    if (p.is_zero()) return {0, Monomial(ring.nvars())};
    return {p.leading_coef(), p.leading_monomial()};
  }

  FreeComplex resolve(const MonomialIdeal& I) {
    FreeComplex C;
    if (I.num_gens() == 0) {
      C.twists.push_back({Monomial(ring.nvars())});
      return C;
    }
    if (I.num_gens() == 1) {
      C.twists.push_back({Monomial(ring.nvars())});
      C.twists.push_back({I.gens()[0]});
      C.mats.push_back({{entry(1, I.gens()[0])}});
      return C;
    }

    // split off the generator with the largest exponent of the last active
    // variable, grevlex-largest on ties
    std::size_t last_active = 0;
    for (const auto& g : I.gens()) {
      for (std::size_t v = 0; v < I.nvars(); ++v) {
        if (g[v] > 0) last_active = std::max(last_active, v);
      }
    }
    std::size_t pick = 0;
    for (std::size_t k = 1; k < I.num_gens(); ++k) {
      const Monomial& cand = I.gens()[k];
      const Monomial& cur = I.gens()[pick];
      if (cand[last_active] > cur[last_active] ||
          (cand[last_active] == cur[last_active] && ord.greater(cand, cur))) {
        pick = k;
      }
    }
    Monomial m = I.gens()[pick];
    std::vector<Monomial> rest;
    for (std::size_t k = 0; k < I.num_gens(); ++k) {
      if (k != pick) rest.push_back(I.gens()[k]);
    }
    MonomialIdeal Iprime(I.nvars(), rest);
    MonomialIdeal Colon = Iprime.colon(m);

    FreeComplex B = resolve(Iprime);
    FreeComplex A = resolve(Colon);

    // chain map phi lifting multiplication by m, A_i -> B_i
    std::vector<Matrix> phi(A.length() + 1);
    phi[0] = {{entry(1, m)}};
    for (std::size_t i = 1; i <= A.length(); ++i) {
      std::size_t acols = A.twists[i].size();
      std::size_t brows = i < B.twists.size() ? B.twists[i].size() : 0;
      phi[i].assign(brows, std::vector<Polynomial>(acols, Polynomial::zero()));
      if (brows == 0) continue;
      for (std::size_t c = 0; c < acols; ++c) {
        Monomial source = A.twists[i][c].times(m);
        // unknowns: rows whose twist divides the shifted source twist
        std::vector<std::size_t> unknowns;
        for (std::size_t r = 0; r < brows; ++r) {
          if (B.twists[i][r].divides(source)) unknowns.push_back(r);
        }
        std::size_t eq_rows = B.twists[i - 1].size();
        std::vector<std::vector<std::uint32_t>> Asys(
            eq_rows, std::vector<std::uint32_t>(unknowns.size(), 0));
        std::vector<std::uint32_t> bsys(eq_rows, 0);
        for (std::size_t rho = 0; rho < eq_rows; ++rho) {
          // rhs: (phi_{i-1} * dA_i)[rho][c], a single multidegree
          std::uint32_t rhs = 0;
          for (std::size_t s = 0; s < A.twists[i - 1].size(); ++s) {
            auto [c1, m1] = split(phi[i - 1][rho][s]);
            auto [c2, m2] = split(A.mats[i - 1][s][c]);
            if (c1 == 0 || c2 == 0) continue;
            rhs = F.add(rhs, F.mul(c1, c2));
          }
          bsys[rho] = rhs;
          for (std::size_t u = 0; u < unknowns.size(); ++u) {
            auto [cb, mb] = split(B.mats[i - 1][rho][unknowns[u]]);
            Asys[rho][u] = cb;
          }
        }
        auto sol = gf_solve(std::move(Asys), std::move(bsys), F);
        if (!sol) {
          throw PreconditionError(
              "internal error: mapping cone comparison map has no lift");
        }
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
          if ((*sol)[u] == 0) continue;
          Monomial quot = source.divided_by(B.twists[i][unknowns[u]]);
          phi[i][unknowns[u]][c] = entry((*sol)[u], quot);
        }
      }
    }

    // cone: G_i = B_i (+) A_{i-1}, twists of the A part shifted by m
    FreeComplex C2;
    std::size_t len = std::max(B.length(), A.length() + 1);
    C2.twists.resize(len + 1);
    C2.twists[0] = B.twists[0];
    for (std::size_t i = 1; i <= len; ++i) {
      if (i < B.twists.size()) C2.twists[i] = B.twists[i];
      if (i - 1 < A.twists.size()) {
        for (const auto& t : A.twists[i - 1]) C2.twists[i].push_back(t.times(m));
      }
    }
    C2.mats.resize(len);
    for (std::size_t i = 1; i <= len; ++i) {
      std::size_t rows = C2.twists[i - 1].size();
      std::size_t cols = C2.twists[i].size();
      Matrix d(rows, std::vector<Polynomial>(cols, Polynomial::zero()));
      std::size_t brows = i - 1 < B.twists.size() ? B.twists[i - 1].size() : 0;
      std::size_t bcols = i < B.twists.size() ? B.twists[i].size() : 0;
      if (i <= B.length()) {
        for (std::size_t r = 0; r < brows; ++r) {
          for (std::size_t c = 0; c < bcols; ++c) d[r][c] = B.mats[i - 1][r][c];
        }
      }
      // phi block: A_{i-1} columns mapping into B_{i-1} rows
      if (i - 1 < A.twists.size()) {
        for (std::size_t r = 0; r < brows; ++r) {
          for (std::size_t c = 0; c < A.twists[i - 1].size(); ++c) {
            d[r][bcols + c] = phi[i - 1][r][c];
          }
        }
        // -dA block
        if (i >= 2 && i - 2 < A.mats.size()) {
          for (std::size_t r = 0; r < A.twists[i - 2].size(); ++r) {
            for (std::size_t c = 0; c < A.twists[i - 1].size(); ++c) {
              auto [cc, mm] = split(A.mats[i - 2][r][c]);
              if (cc != 0) d[brows + r][bcols + c] = entry(F.neg(cc), mm);
            }
          }
        }
      }
      C2.mats[i - 1] = std::move(d);
    }
    return C2;
  }
};

}  // namespace

FreeComplex mapping_cone_resolution(const MonomialIdeal& I, const PolyRing& ring) {
  if (ring.nvars() != I.nvars()) {
    throw PreconditionError("resolution: ring and ideal variable counts differ");
  }
  ConeBuilder builder{ring, ring.field(), MonomialOrder::grevlex(ring.nvars())};
  return builder.resolve(I);
}

Matrix pairwise_syzygy_matrix(std::span<const Monomial> gens, const PolyRing& ring) {
  if (gens.size() < 2) {
    throw PreconditionError("pairwise syzygies need at least two generators");
  }
  MonomialOrder ord = MonomialOrder::grevlex(ring.nvars());
  const PrimeField& F = ring.field();
  std::size_t n = gens.size();
  std::size_t ncols = n * (n - 1) / 2;
  Matrix M(n, std::vector<Polynomial>(ncols, Polynomial::zero()));
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Monomial l = Monomial::lcm(gens[i], gens[j]);
      M[i][col] = ring.monomial_poly(l.divided_by(gens[i]), ord, F.neg(1));
      M[j][col] = ring.monomial_poly(l.divided_by(gens[j]), ord, 1);
      ++col;
    }
  }
  return M;
}

// ---------------------------------------------------------------------------

namespace {

Polynomial det_by_expansion(const Matrix& M, std::span<const std::size_t> rows,
                            std::span<const std::size_t> cols, const PrimeField& F,
                            const MonomialOrder& ord) {
  std::size_t t = rows.size();
  // DP over column subsets: dp[mask] = det of rows[0..popcount(mask)) x cols(mask)
  std::vector<Polynomial> dp(1u << t);
  dp[0] = Polynomial::normalized({{1, Monomial(ord.nvars())}}, F, ord);
  for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
    std::size_t k = static_cast<std::size_t>(std::popcount(mask)) - 1;
    Polynomial acc;
    std::size_t pos = 0;  // position of the column within the mask
    for (std::size_t c = 0; c < t; ++c) {
      if (!(mask & (1u << c))) continue;
      const Polynomial& e = M[rows[k]][cols[c]];
      if (!e.is_zero()) {
        Polynomial piece = poly_mul(e, dp[mask ^ (1u << c)], F, ord);
        if ((k + pos) % 2 == 1) piece = poly_neg(piece, F);
        acc = poly_add(acc, piece, F, ord);
      }
      ++pos;
    }
    dp[mask] = std::move(acc);
  }
  return dp[(1u << t) - 1];
}

void subsets_of_size(std::size_t n, std::size_t k,
                     const std::function<bool(std::span<const std::size_t>)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    if (visit(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Polynomial> minor_generators(const Matrix& M, std::size_t t,
                                         const PolyRing& ring,
                                         const MonomialOrder& ord) {
  std::vector<Polynomial> out;
  if (t == 0 || M.empty()) return out;
  std::size_t rows = M.size(), cols = M[0].size();
  if (t > rows || t > cols) return out;
  const PrimeField& F = ring.field();
  subsets_of_size(rows, t, [&](std::span<const std::size_t> rsel) {
    std::vector<std::size_t> rcopy(rsel.begin(), rsel.end());
    subsets_of_size(cols, t, [&](std::span<const std::size_t> csel) {
      Polynomial d = det_by_expansion(M, rcopy, csel, F, ord);
      if (!d.is_zero()) out.push_back(std::move(d));
      return false;
    });
    return false;
  });
  return out;
}

}  // namespace

std::uint32_t rank_over_quotient(const QuotientRing& R, const Matrix& M) {
  if (M.empty() || M[0].empty()) return 0;
  std::size_t rows = M.size(), cols = M[0].size();
  const PrimeField& F = R.ambient().field();
  MonomialOrder ord = R.ambient().grevlex();
  std::uint32_t limit =
      static_cast<std::uint32_t>(std::min<std::size_t>(std::min(rows, cols), kMinorCap));
  std::uint32_t rank = 0;
  for (std::uint32_t t = 1; t <= limit; ++t) {
    bool found = false;
    subsets_of_size(rows, t, [&](std::span<const std::size_t> rsel) {
      std::vector<std::size_t> rcopy(rsel.begin(), rsel.end());
      subsets_of_size(cols, t, [&](std::span<const std::size_t> csel) {
        Polynomial d = det_by_expansion(M, rcopy, csel, F, ord);
        if (!d.is_zero() && !R.is_zero_in_quotient(d)) {
          found = true;
          return true;
        }
        return false;
      });
      return found;
    });
    if (!found) return rank;
    rank = t;
  }
  if (rank == kMinorCap && std::min(rows, cols) > kMinorCap) {
    throw PreconditionError("matrix rank exceeds the desk-scale minor cap");
  }
  return rank;
}

std::uint32_t rank_over_polynomial_ring(const PolyRing& ring, const Matrix& M) {
  if (M.empty() || M[0].empty()) return 0;
  const PrimeField& F = ring.field();
  MonomialOrder ord = ring.grevlex();
  Matrix W = M;
  std::size_t rows = W.size(), cols = W[0].size();
  Polynomial prev = ring.constant(1, ord);
  std::size_t k = 0;
  while (k < rows && k < cols) {
    // pivot search
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows && pr == rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (!W[i][j].is_zero()) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == rows) break;
    std::swap(W[pr], W[k]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(W[i][pc], W[i][k]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        Polynomial num = poly_sub(poly_mul(W[i][j], W[k][k], F, ord),
                                  poly_mul(W[i][k], W[k][j], F, ord), F, ord);
        W[i][j] = num.is_zero() ? num : poly_exact_divide(num, prev, F, ord);
      }
      W[i][k] = Polynomial::zero();
    }
    prev = W[k][k];
    ++k;
  }
  return static_cast<std::uint32_t>(k);
}

FreeComplex base_change(const FreeComplex& C, const PolyRing& source,
                        std::span<const Polynomial> images,
                        const QuotientRing& target) {
  if (images.size() != source.nvars()) {
    throw PreconditionError("base change needs one image per source variable");
  }
  std::vector<std::optional<Polynomial>> img(images.begin(), images.end());
  const PrimeField& F = target.ambient().field();
  MonomialOrder ord = target.ambient().grevlex();
  FreeComplex out;
  out.twists = C.twists;
  out.mats.reserve(C.mats.size());
  for (const Matrix& M : C.mats) {
    Matrix N(M.size());
    for (std::size_t r = 0; r < M.size(); ++r) {
      N[r].reserve(M[r].size());
      for (const Polynomial& e : M[r]) {
        N[r].push_back(target.normal_form(poly_substitute(e, img, F, ord)));
      }
    }
    out.mats.push_back(std::move(N));
  }
  return out;
}

RankHeightReport verify_rank_height(const QuotientRing& R, const FreeComplex& C,
                                    bool check_radical_containment) {
  RankHeightReport report;
  const PolyRing& amb = R.ambient();
  MonomialOrder ord = amb.grevlex();
  bool over_polynomial_ring = R.defining_ideal().is_zero_ideal();
  std::vector<long> r = C.expected_ranks();
  int dimR = R.dimension();
  std::size_t d = amb.nvars();

  for (std::size_t i = 1; i <= C.length(); ++i) {
    RankHeightEntry e;
    e.index = i;
    e.expected_rank = r[i];
    const Matrix& alpha = C.mats[i - 1];
    e.rank = over_polynomial_ring ? rank_over_polynomial_ring(amb, alpha)
                                  : rank_over_quotient(R, alpha);
    e.rank_ok = r[i] >= 0 && e.rank == static_cast<std::uint32_t>(r[i]);

    if (r[i] <= 0) {
      // I_0 = (1): height condition holds vacuously
      e.height = static_cast<int>(d) + 1;
      e.height_ok = true;
      report.entries.push_back(e);
      report.all_rank_ok = report.all_rank_ok && e.rank_ok;
      continue;
    }
    std::vector<Polynomial> minors =
        minor_generators(alpha, static_cast<std::size_t>(r[i]), amb, ord);
    Ideal minor_ideal = R.defining_ideal().plus(minors);
    int dim_quot = minor_ideal.dimension();
    e.height = dimR - dim_quot;  // codimension inside R
    e.height_ok = e.height >= static_cast<int>(i);

    if (check_radical_containment) {
      // product of all (X_{j1},...,X_{ji}) is, up to radical, the
      // intersection of those ideals: generated by the squarefree
      // monomials of support size d - i + 1
      e.radical_ok = true;
      if (i <= d) {
        std::size_t support = d - i + 1;
        subsets_of_size(d, support, [&](std::span<const std::size_t> sel) {
          Monomial mu(d);
          for (auto v : sel) mu.set(v, 1);
          if (!minor_ideal.radical_contains(amb.monomial_poly(mu, ord))) {
            e.radical_ok = false;
            return true;
          }
          return false;
        });
      }
      report.all_radical_ok = report.all_radical_ok && e.radical_ok;
    }
    report.all_rank_ok = report.all_rank_ok && e.rank_ok;
    report.all_height_ok = report.all_height_ok && e.height_ok;
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace reestype
