#include "reestype/groebner.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>
#include <unordered_set>

#include "reestype/errors.hpp"

namespace reestype {

namespace {

int find_reducer(const Monomial& m, std::span<const Polynomial> basis) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].leading_monomial().divides(m)) return static_cast<int>(k);
  }
  return -1;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const PrimeField& F,
                 const MonomialOrder& ord) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Term tf{F.inv(f.leading_coef()), l.divided_by(f.leading_monomial())};
  Term tg{F.inv(g.leading_coef()), l.divided_by(g.leading_monomial())};
  return poly_sub(poly_term_mul(tf, f, F, ord), poly_term_mul(tg, g, F, ord), F, ord);
}

struct Pair {
  std::uint32_t lcm_deg;
  Monomial lcm;
  std::uint32_t i, j;  // i < j
};

struct PairQueueCmp {
  const MonomialOrder* ord;
  // min-heap: smallest lcm degree first, ties by order then indices
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg > b.lcm_deg;
    auto c = ord->compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  }
};

std::uint64_t pair_key(std::uint32_t i, std::uint32_t j) {
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

void check_cap(const Polynomial& f, std::uint32_t cap) {
  if (f.total_degree() > cap) {
    throw DegreeCapError("Groebner element of degree " +
                         std::to_string(f.total_degree()) +
                         " exceeds the degree cap " + std::to_string(cap));
  }
}

// Core loop shared by the plain and representation-tracking variants.
// When `reps` is non-null it is kept in sync with `G`.
void buchberger_loop(std::vector<Polynomial>& G,
                     std::vector<std::vector<Polynomial>>* reps,
                     const PrimeField& F, const MonomialOrder& ord,
                     std::uint32_t cap) {
  std::priority_queue<Pair, std::vector<Pair>, PairQueueCmp> queue(
      PairQueueCmp{&ord});
  std::unordered_set<std::uint64_t> pending;

  auto push_pairs_for = [&](std::uint32_t j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(G[i].leading_monomial(), G[j].leading_monomial());
      queue.push(Pair{l.degree(), l, i, j});
      pending.insert(pair_key(i, j));
    }
  };
  for (std::uint32_t j = 0; j < G.size(); ++j) push_pairs_for(j);

  auto reduce_tracked = [&](Polynomial f, std::vector<Polynomial> frep)
      -> std::pair<Polynomial, std::vector<Polynomial>> {
    Polynomial rem;
    std::vector<Term> rem_terms;
    while (!f.is_zero()) {
      int k = find_reducer(f.leading_monomial(), G);
      if (k < 0) {
        rem_terms.push_back(f.leading_term());
        Polynomial lt = Polynomial::normalized({f.leading_term()}, F, ord);
        f = poly_sub(f, lt, F, ord);
        continue;
      }
      const Polynomial& g = G[static_cast<std::size_t>(k)];
      Term q{F.mul(f.leading_coef(), F.inv(g.leading_coef())),
             f.leading_monomial().divided_by(g.leading_monomial())};
      f = poly_sub(f, poly_term_mul(q, g, F, ord), F, ord);
      if (reps) {
        // invariant: current f + already-reduced part = sum frep[t]*gens[t]
        auto& grep = (*reps)[static_cast<std::size_t>(k)];
        for (std::size_t t = 0; t < frep.size(); ++t) {
          frep[t] = poly_sub(frep[t], poly_term_mul(q, grep[t], F, ord), F, ord);
        }
      }
    }
    return {Polynomial::normalized(std::move(rem_terms), F, ord), std::move(frep)};
  };

  std::size_t ngens = reps ? (*reps).empty() ? 0 : (*reps)[0].size() : 0;

  while (!queue.empty()) {
    Pair p = queue.top();
    queue.pop();
    pending.erase(pair_key(p.i, p.j));

    const Monomial& lmi = G[p.i].leading_monomial();
    const Monomial& lmj = G[p.j].leading_monomial();
    // first criterion: coprime leading monomials
    if (Monomial::coprime(lmi, lmj)) continue;
    // second (chain) criterion
    bool skip = false;
    for (std::uint32_t k = 0; k < G.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!G[k].leading_monomial().divides(p.lcm)) continue;
      auto key_ik = pair_key(std::min(p.i, k), std::max(p.i, k));
      auto key_jk = pair_key(std::min(p.j, k), std::max(p.j, k));
      if (!pending.contains(key_ik) && !pending.contains(key_jk)) skip = true;
    }
    if (skip) continue;

    Polynomial s = spoly(G[p.i], G[p.j], F, ord);
    std::vector<Polynomial> srep;
    if (reps) {
      Monomial l = p.lcm;
      Term ti{F.inv(G[p.i].leading_coef()), l.divided_by(lmi)};
      Term tj{F.neg(F.inv(G[p.j].leading_coef())), l.divided_by(lmj)};
      srep.assign(ngens, Polynomial::zero());
      for (std::size_t t = 0; t < ngens; ++t) {
        srep[t] = poly_add(poly_term_mul(ti, (*reps)[p.i][t], F, ord),
                           poly_term_mul(tj, (*reps)[p.j][t], F, ord), F, ord);
      }
    }
    auto [r, rrep] = reduce_tracked(std::move(s), std::move(srep));
    if (r.is_zero()) continue;
    check_cap(r, cap);
    // make monic so coefficients stay canonical
    std::uint32_t c = F.inv(r.leading_coef());
    r = poly_scale(r, c, F);
    if (reps) {
      for (auto& rp : rrep) rp = poly_scale(rp, c, F);
      reps->push_back(std::move(rrep));
    }
    G.push_back(std::move(r));
    push_pairs_for(static_cast<std::uint32_t>(G.size() - 1));
  }
}

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis,
                  const PrimeField& F, const MonomialOrder& ord) {
  Polynomial h = f;
  std::vector<Term> rem;
  while (!h.is_zero()) {
    int k = find_reducer(h.leading_monomial(), basis);
    if (k < 0) {
      rem.push_back(h.leading_term());
      Polynomial lt = Polynomial::normalized({h.leading_term()}, F, ord);
      h = poly_sub(h, lt, F, ord);
      continue;
    }
    const Polynomial& g = basis[static_cast<std::size_t>(k)];
    Term q{F.mul(h.leading_coef(), F.inv(g.leading_coef())),
           h.leading_monomial().divided_by(g.leading_monomial())};
    h = poly_sub(h, poly_term_mul(q, g, F, ord), F, ord);
  }
  return Polynomial::normalized(std::move(rem), F, ord);
}

DivisionResult reduce_with_cofactors(const Polynomial& f,
                                     std::span<const Polynomial> basis,
                                     const PrimeField& F,
                                     const MonomialOrder& ord) {
  DivisionResult out;
  out.cofactors.assign(basis.size(), Polynomial::zero());
  Polynomial h = f;
  std::vector<Term> rem;
  while (!h.is_zero()) {
    int k = find_reducer(h.leading_monomial(), basis);
    if (k < 0) {
      rem.push_back(h.leading_term());
      Polynomial lt = Polynomial::normalized({h.leading_term()}, F, ord);
      h = poly_sub(h, lt, F, ord);
      continue;
    }
    const Polynomial& g = basis[static_cast<std::size_t>(k)];
    Term q{F.mul(h.leading_coef(), F.inv(g.leading_coef())),
           h.leading_monomial().divided_by(g.leading_monomial())};
    h = poly_sub(h, poly_term_mul(q, g, F, ord), F, ord);
    Polynomial qp = Polynomial::normalized({q}, F, ord);
    out.cofactors[static_cast<std::size_t>(k)] =
        poly_add(out.cofactors[static_cast<std::size_t>(k)], qp, F, ord);
  }
  out.remainder = Polynomial::normalized(std::move(rem), F, ord);
  return out;
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens,
                                   const PrimeField& F, const MonomialOrder& ord,
                                   const BuchbergerOptions& opt) {
  std::vector<Polynomial> G;
  for (const Polynomial& g : gens) {
    if (!g.is_zero()) {
      check_cap(g, opt.degree_cap);
      G.push_back(poly_monic(poly_reorder(g, F, ord), F));
    }
  }
  buchberger_loop(G, nullptr, F, ord, opt.degree_cap);

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = G[i].leading_monomial();
      const Monomial& mj = G[j].leading_monomial();
      if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // interreduce tails
  std::vector<Polynomial> reduced(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced[i] = poly_monic(reduce(minimal[i], others, F, ord), F);
  }
  std::erase_if(reduced, [](const Polynomial& f) { return f.is_zero(); });
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ord.less(a.leading_monomial(), b.leading_monomial());
            });
  return reduced;
}

TrackedBasis buchberger_tracked(std::span<const Polynomial> gens,
                                const PrimeField& F, const MonomialOrder& ord,
                                const BuchbergerOptions& opt) {
  TrackedBasis out;
  Monomial one(ord.nvars());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    check_cap(gens[i], opt.degree_cap);
    out.basis.push_back(poly_reorder(gens[i], F, ord));
    std::vector<Polynomial> rep(gens.size(), Polynomial::zero());
    rep[i] = Polynomial::normalized({{1, one}}, F, ord);
    out.reps.push_back(std::move(rep));
  }
  if (out.basis.empty()) return out;
  buchberger_loop(out.basis, &out.reps, F, ord, opt.degree_cap);
  return out;
}

std::optional<std::vector<Polynomial>> lift_membership(
    const Polynomial& f, std::span<const Polynomial> gens, const PrimeField& F,
    const MonomialOrder& ord, const BuchbergerOptions& opt) {
  Polynomial fn = poly_reorder(f, F, ord);
  TrackedBasis tb = buchberger_tracked(gens, F, ord, opt);
  if (tb.basis.empty()) {
    if (fn.is_zero()) return std::vector<Polynomial>(gens.size(), Polynomial::zero());
    return std::nullopt;
  }
  DivisionResult div = reduce_with_cofactors(fn, tb.basis, F, ord);
  if (!div.remainder.is_zero()) return std::nullopt;
  std::vector<Polynomial> out(gens.size(), Polynomial::zero());
  for (std::size_t k = 0; k < tb.basis.size(); ++k) {
    if (div.cofactors[k].is_zero()) continue;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      out[i] = poly_add(out[i], poly_mul(div.cofactors[k], tb.reps[k][i], F, ord),
                        F, ord);
    }
  }
  // exactness check: the representation must reproduce f on the nose
  Polynomial check;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    check = poly_add(check, poly_mul(out[i], poly_reorder(gens[i], F, ord), F, ord),
                     F, ord);
  }
  if (!(check == fn)) {
    throw PreconditionError("internal error: membership witness failed verification");
  }
  return out;
}

// ---------------------------------------------------------------------------

Ideal::Ideal(PolyRing ring, MonomialOrder ord, std::vector<Polynomial> gens,
             std::uint32_t degree_cap)
    : ring_(std::move(ring)), ord_(std::move(ord)), gens_(std::move(gens)),
      degree_cap_(degree_cap) {
  if (ord_.nvars() != ring_.nvars()) {
    throw PreconditionError("order variable count does not match the ring");
  }
  for (auto& g : gens_) g = poly_reorder(g, ring_.field(), ord_);
  std::erase_if(gens_, [](const Polynomial& f) { return f.is_zero(); });
}

Ideal Ideal::with_known_gb(PolyRing ring, MonomialOrder ord,
                           std::vector<Polynomial> gb, std::uint32_t degree_cap) {
  Ideal I(std::move(ring), std::move(ord), gb, degree_cap);
  I.gb_ = std::make_shared<const std::vector<Polynomial>>(std::move(gb));
  return I;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  if (!gb_) {
    BuchbergerOptions opt;
    opt.degree_cap = degree_cap_;
    gb_ = std::make_shared<const std::vector<Polynomial>>(
        buchberger(gens_, ring_.field(), ord_, opt));
  }
  return *gb_;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  return reduce(poly_reorder(f, ring_.field(), ord_), groebner_basis(),
                ring_.field(), ord_);
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::is_zero_ideal() const { return groebner_basis().empty(); }

bool Ideal::is_unit_ideal() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].leading_monomial().is_one();
}

bool Ideal::equals(const Ideal& other) const {
  if (!(ring_ == other.ring_)) throw PreconditionError("ambient ring mismatch");
  for (const auto& g : other.generators()) {
    if (!contains(g)) return false;
  }
  for (const auto& g : gens_) {
    if (!other.contains(g)) return false;
  }
  return true;
}

Ideal Ideal::plus(std::span<const Polynomial> more) const {
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), more.begin(), more.end());
  return Ideal(ring_, ord_, std::move(gens), degree_cap_);
}

Ideal Ideal::eliminate(std::span<const std::size_t> front) const {
  MonomialOrder elim = MonomialOrder::block_elimination(ring_.nvars(), front);
  BuchbergerOptions opt;
  opt.degree_cap = degree_cap_;
  std::vector<Polynomial> gb = buchberger(gens_, ring_.field(), elim, opt);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb) {
    if (poly_degree_at(g, front) == 0) {
      kept.push_back(poly_reorder(g, ring_.field(), ord_));
    }
  }
  return Ideal(ring_, ord_, std::move(kept), degree_cap_);
}

namespace {
std::string fresh_var_name(const PolyRing& ring, const std::string& base) {
  if (!ring.var_index(base)) return base;
  for (int k = 0;; ++k) {
    std::string name = base + std::to_string(k);
    if (!ring.var_index(name)) return name;
  }
}
}  // namespace

Ideal Ideal::intersect(const Ideal& other) const {
  if (!(ring_ == other.ring_)) throw PreconditionError("ambient ring mismatch");
  std::string u = fresh_var_name(ring_, "_u");
  PolyRing ext = ring_.extended({u});
  std::size_t ui = ext.nvars() - 1;
  MonomialOrder eord = MonomialOrder::grevlex(ext.nvars());
  Polynomial up = ext.var(ui, eord);
  Polynomial one_minus_u = poly_sub(ext.constant(1, eord), up, ring_.field(), eord);

  std::vector<Polynomial> gens;
  for (const auto& g : gens_) {
    gens.push_back(poly_mul(up, ring_.map_to(g, ext, eord), ring_.field(), eord));
  }
  for (const auto& h : other.gens_) {
    gens.push_back(
        poly_mul(one_minus_u, ring_.map_to(h, ext, eord), ring_.field(), eord));
  }
  Ideal extended_ideal(ext, eord, std::move(gens), degree_cap_);
  std::size_t front[] = {ui};
  Ideal elim = extended_ideal.eliminate(front);
  std::vector<Polynomial> back;
  for (const auto& g : elim.generators()) {
    back.push_back(ext.map_to(g, ring_, ord_));
  }
  return Ideal(ring_, ord_, std::move(back), degree_cap_);
}

Ideal Ideal::colon(const Polynomial& f) const {
  if (f.is_zero()) throw PreconditionError("colon by the zero polynomial");
  Ideal principal(ring_, ord_, {poly_reorder(f, ring_.field(), ord_)}, degree_cap_);
  Ideal inter = intersect(principal);
  std::vector<Polynomial> quot;
  for (const auto& g : inter.generators()) {
    quot.push_back(poly_exact_divide(g, poly_reorder(f, ring_.field(), ord_),
                                     ring_.field(), ord_));
  }
  return Ideal(ring_, ord_, std::move(quot), degree_cap_);
}

Ideal Ideal::colon(const Ideal& K) const {
  if (!(ring_ == K.ring_)) throw PreconditionError("ambient ring mismatch");
  std::vector<Polynomial> nonzero;
  for (const auto& g : K.generators()) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) {
    // colon by the zero ideal is the unit ideal
    return Ideal(ring_, ord_, {ring_.constant(1, ord_)}, degree_cap_);
  }
  Ideal acc = colon(nonzero[0]);
  for (std::size_t i = 1; i < nonzero.size(); ++i) {
    acc = acc.intersect(colon(nonzero[i]));
  }
  return acc;
}

Ideal Ideal::saturate(const Polynomial& f) const {
  if (f.is_zero()) throw PreconditionError("saturation by the zero polynomial");
  std::string u = fresh_var_name(ring_, "_u");
  PolyRing ext = ring_.extended({u});
  std::size_t ui = ext.nvars() - 1;
  MonomialOrder eord = MonomialOrder::grevlex(ext.nvars());
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(ring_.map_to(g, ext, eord));
  Polynomial uf = poly_mul(ext.var(ui, eord), ring_.map_to(f, ext, eord),
                           ring_.field(), eord);
  gens.push_back(poly_sub(ext.constant(1, eord), uf, ring_.field(), eord));
  Ideal extended_ideal(ext, eord, std::move(gens), degree_cap_);
  std::size_t front[] = {ui};
  Ideal elim = extended_ideal.eliminate(front);
  std::vector<Polynomial> back;
  for (const auto& g : elim.generators()) back.push_back(ext.map_to(g, ring_, ord_));
  return Ideal(ring_, ord_, std::move(back), degree_cap_);
}

bool Ideal::radical_contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  std::string u = fresh_var_name(ring_, "_u");
  PolyRing ext = ring_.extended({u});
  std::size_t ui = ext.nvars() - 1;
  MonomialOrder eord = MonomialOrder::grevlex(ext.nvars());
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(ring_.map_to(g, ext, eord));
  Polynomial uf = poly_mul(ext.var(ui, eord), ring_.map_to(f, ext, eord),
                           ring_.field(), eord);
  gens.push_back(poly_sub(ext.constant(1, eord), uf, ring_.field(), eord));
  Ideal extended_ideal(ext, eord, std::move(gens), degree_cap_);
  return extended_ideal.is_unit_ideal();
}

int Ideal::dimension() const {
  const auto& gb = groebner_basis();
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) {
    if (g.leading_monomial().is_one()) return -1;  // unit ideal sentinel
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < ring_.nvars(); ++v) {
      if (g.leading_monomial()[v] > 0) mask |= (1u << v);
    }
    supports.push_back(mask);
  }
  std::size_t n = ring_.nvars();
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    bool independent = true;
    for (std::uint32_t s : supports) {
      if ((s & ~subset) == 0) {  // a leading monomial lives inside the subset
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, std::popcount(subset));
  }
  return best;
}

int height_as_codimension(const Ideal& I) {
  int d = I.dimension();
  if (d < 0) return static_cast<int>(I.ring().nvars()) + 1;  // unit ideal
  return static_cast<int>(I.ring().nvars()) - d;
}

}  // namespace reestype
