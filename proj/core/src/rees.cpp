#include "reestype/rees.hpp"

#include <algorithm>

#include "reestype/errors.hpp"

namespace reestype {

namespace {

std::string fresh_name(const PolyRing& ring, const std::string& base) {
  if (!ring.var_index(base)) return base;
  for (int k = 0;; ++k) {
    std::string name = base + std::to_string(k);
    if (!ring.var_index(name)) return name;
  }
}

MonomialOrder t_weighted_order(std::size_t nvars, std::size_t nx) {
  std::vector<std::uint32_t> w(nvars, 0);
  for (std::size_t i = nx; i < nvars; ++i) w[i] = 1;
  return MonomialOrder::weighted_grevlex(std::move(w));
}

}  // namespace

ReesContext::ReesContext(QuotientRing base, std::vector<Polynomial> gens)
    : base_(std::move(base)),
      gens_(std::move(gens)),
      tring_(PolyRing(base_.characteristic(), {})),
      tord_(MonomialOrder::grevlex(0)),
      nx_(base_.ambient().nvars()) {
  if (gens_.empty()) throw PreconditionError("Rees context needs at least one generator");
  for (auto& g : gens_) {
    g = base_.normal_form(g);
    if (g.is_zero()) {
      throw PreconditionError("ideal generator is zero in the quotient ring");
    }
  }
  std::vector<std::string> tnames;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    std::string name = "T" + std::to_string(i + 1);
    if (base_.ambient().var_index(name)) {
      throw PreconditionError("ring variable '" + name +
                              "' collides with a relation variable");
    }
    tnames.push_back(name);
  }
  tring_ = base_.ambient().extended(tnames);
  tord_ = t_weighted_order(tring_.nvars(), nx_);
  for (std::size_t i = 0; i < gens_.size(); ++i) t_idx_.push_back(nx_ + i);
  for (const auto& g : base_.defining_ideal().groebner_basis()) {
    j_gens_.push_back(base_.ambient().map_to(g, tring_, tord_));
  }
}

Polynomial ReesContext::t_var(std::size_t i, std::uint32_t e) const {
  return tring_.var(t_idx_[i], tord_, e);
}

Polynomial ReesContext::from_base(const Polynomial& f) const {
  return base_.ambient().map_to(f, tring_, tord_);
}

std::uint32_t ReesContext::t_degree(const Polynomial& F) const {
  return poly_degree_at(F, t_idx_);
}

bool ReesContext::is_t_homogeneous(const Polynomial& F) const {
  return poly_is_homogeneous_at(F, t_idx_);
}

Polynomial ReesContext::substitute_gens(const Polynomial& F) const {
  const PolyRing& amb = base_.ambient();
  const MonomialOrder ord = amb.grevlex();
  std::vector<std::optional<Polynomial>> images(tring_.nvars());
  for (std::size_t i = 0; i < nx_; ++i) images[i] = amb.var(i, ord);
  for (std::size_t i = 0; i < gens_.size(); ++i) images[t_idx_[i]] = gens_[i];
  return poly_substitute(F, images, amb.field(), ord);
}

bool ReesContext::is_relation(const Polynomial& F) const {
  if (!is_t_homogeneous(F)) {
    throw PreconditionError("relation candidate is not homogeneous in the T-grading");
  }
  return base_.is_zero_in_quotient(substitute_gens(F));
}

std::vector<Polynomial> ReesContext::koszul_relations() const {
  std::vector<Polynomial> out;
  const PrimeField& F = tring_.field();
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      Polynomial gi = from_base(gens_[i]);
      Polynomial gj = from_base(gens_[j]);
      Polynomial rel = poly_sub(poly_mul(gj, t_var(i), F, tord_),
                                poly_mul(gi, t_var(j), F, tord_), F, tord_);
      out.push_back(normal_form(rel));
    }
  }
  return out;
}

Polynomial ReesContext::normal_form(const Polynomial& F) const {
  return reduce(poly_reorder(F, tring_.field(), tord_), j_gens_, tring_.field(),
                tord_);
}

// ---------------------------------------------------------------------------

ReesPresentation::ReesPresentation(ReesContext ctx, std::vector<Polynomial> q_basis)
    : ctx_(std::move(ctx)), q_(std::move(q_basis)), inhomogeneous_(false) {
  if (!ctx_.base().defining_homogeneous()) inhomogeneous_ = true;
  for (const auto& g : ctx_.ideal_gens()) {
    if (!poly_is_homogeneous(g)) inhomogeneous_ = true;
  }
}

std::vector<std::uint32_t> ReesPresentation::q_degrees() const {
  std::vector<std::uint32_t> d;
  d.reserve(q_.size());
  for (const auto& g : q_) d.push_back(ctx_.t_degree(g));
  return d;
}

std::uint32_t ReesPresentation::max_degree() const {
  std::uint32_t m = 0;
  for (const auto& g : q_) m = std::max(m, ctx_.t_degree(g));
  return m;
}

ReesPresentation rees_presentation(const QuotientRing& R,
                                   std::vector<Polynomial> gens) {
  ReesContext ctx(R, std::move(gens));
  const PolyRing& amb = R.ambient();
  const PrimeField& F = amb.field();

  // elimination ring [x..., t, T...]
  std::string tname = fresh_name(ctx.relation_ring(), "t");
  std::vector<std::string> names(amb.vars());
  names.push_back(tname);
  for (std::size_t i = 0; i < ctx.num_gens(); ++i) {
    names.push_back(ctx.relation_ring().var_name(ctx.t_indices()[i]));
  }
  PolyRing ering(amb.characteristic(), names);
  std::size_t ti = amb.nvars();
  // eliminate t first, refine by (t,T)-degree so the surviving basis is
  // compatible with the T-grading
  std::vector<std::uint32_t> weights(ering.nvars(), 0);
  for (std::size_t i = ti; i < ering.nvars(); ++i) weights[i] = 1;
  std::size_t front[] = {ti};
  MonomialOrder eord = MonomialOrder::block_weighted(ering.nvars(), front,
                                                     std::move(weights));

  std::vector<Polynomial> kernel_gens;
  for (const auto& g : R.defining_ideal().generators()) {
    kernel_gens.push_back(amb.map_to(g, ering, eord));
  }
  Polynomial tpoly = ering.var(ti, eord);
  for (std::size_t i = 0; i < ctx.num_gens(); ++i) {
    Polynomial Ti = ering.var(ti + 1 + i, eord);
    Polynomial tg = poly_mul(tpoly, amb.map_to(ctx.ideal_gens()[i], ering, eord),
                             F, eord);
    kernel_gens.push_back(poly_sub(Ti, tg, F, eord));
  }

  BuchbergerOptions opt;
  opt.degree_cap = R.degree_cap();
  std::vector<Polynomial> gb = buchberger(kernel_gens, F, eord, opt);

  std::size_t tonly[] = {ti};
  std::vector<Polynomial> q;
  for (const auto& g : gb) {
    if (poly_degree_at(g, tonly) != 0) continue;  // still involves t
    Polynomial mapped = ering.map_to(g, ctx.relation_ring(), ctx.relation_order());
    Polynomial nf = ctx.normal_form(mapped);
    if (!nf.is_zero()) q.push_back(poly_monic(nf, F));
  }
  std::sort(q.begin(), q.end(), [&](const Polynomial& a, const Polynomial& b) {
    std::uint32_t da = ctx.t_degree(a), db = ctx.t_degree(b);
    if (da != db) return da < db;
    return ctx.relation_order().less(a.leading_monomial(), b.leading_monomial());
  });
  return ReesPresentation(std::move(ctx), std::move(q));
}

std::uint32_t relation_type(const ReesPresentation& P) {
  const auto& q = P.q_generators();
  if (q.empty()) return 1;  // free presentation: linear type by convention
  const ReesContext& ctx = P.context();
  const PolyRing& tring = ctx.relation_ring();
  const PrimeField& F = tring.field();
  BuchbergerOptions opt;
  opt.degree_cap = ctx.base().degree_cap();

  std::vector<std::uint32_t> degs;
  for (const auto& g : q) degs.push_back(ctx.t_degree(g));
  std::uint32_t dmax = *std::max_element(degs.begin(), degs.end());

  for (std::uint32_t d = dmax; d >= 2; --d) {
    bool present = false;
    for (auto dd : degs) present = present || (dd == d);
    if (!present) continue;
    std::vector<Polynomial> lower = ctx.j_in_relation_ring();
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (degs[i] < d) lower.push_back(q[i]);
    }
    std::vector<Polynomial> lgb = buchberger(lower, F, ctx.relation_order(), opt);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (degs[i] != d) continue;
      Polynomial r = reduce(q[i], lgb, F, ctx.relation_order());
      if (!r.is_zero()) return d;  // a genuine generator in degree d
    }
  }
  return 1;
}

bool reducible_to_lower_degree(const ReesPresentation& P, const Polynomial& F) {
  const ReesContext& ctx = P.context();
  if (!ctx.is_relation(F)) {
    throw PreconditionError("reducibility test on a polynomial outside Q");
  }
  std::uint32_t d = ctx.t_degree(F);
  std::vector<Polynomial> lower = ctx.j_in_relation_ring();
  for (const auto& g : P.q_generators()) {
    if (ctx.t_degree(g) < d) lower.push_back(g);
  }
  BuchbergerOptions opt;
  opt.degree_cap = ctx.base().degree_cap();
  std::vector<Polynomial> lgb =
      buchberger(lower, ctx.relation_ring().field(), ctx.relation_order(), opt);
  Polynomial r = reduce(poly_reorder(F, ctx.relation_ring().field(),
                                     ctx.relation_order()),
                        lgb, ctx.relation_ring().field(), ctx.relation_order());
  return r.is_zero();
}

// ---------------------------------------------------------------------------

namespace {

// coefficient r_k of T1^(N-k)*T2^k, as a polynomial of the base ambient ring
std::vector<Polynomial> t_coefficients(const ReesContext& ctx, const Polynomial& F,
                                       std::uint32_t N) {
  const PolyRing& tring = ctx.relation_ring();
  const PolyRing& amb = ctx.base().ambient();
  const MonomialOrder ord = amb.grevlex();
  std::size_t i2 = ctx.t_indices()[1];
  std::vector<std::vector<Term>> raw(N + 1);
  for (const Term& t : F.terms()) {
    std::uint32_t e2 = t.mono[i2];
    Monomial xpart(amb.nvars());
    for (std::size_t v = 0; v < amb.nvars(); ++v) xpart.set(v, t.mono[v]);
    raw[e2].push_back({t.coef, xpart});
  }
  std::vector<Polynomial> out(N + 1);
  for (std::uint32_t k = 0; k <= N; ++k) {
    out[k] = Polynomial::normalized(std::move(raw[k]), tring.field(), ord);
  }
  return out;
}

// PS_j(T1, T2) = sum_{k<j} r_k T1^(j-1-k) T2^k in the relation ring
Polynomial partial_sum_in_t(const ReesContext& ctx,
                            std::span<const Polynomial> r, std::uint32_t j) {
  const PrimeField& F = ctx.relation_ring().field();
  const MonomialOrder& ord = ctx.relation_order();
  Polynomial acc;
  for (std::uint32_t k = 0; k < j; ++k) {
    Polynomial term = ctx.from_base(r[k]);
    term = poly_mul(term, ctx.t_var(0, j - 1 - k), F, ord);
    term = poly_mul(term, ctx.t_var(1, k), F, ord);
    acc = poly_add(acc, term, F, ord);
  }
  return acc;
}

}  // namespace

DescentResult two_param_descent(const ReesContext& ctx, const Polynomial& F,
                                const Polynomial& gamma) {
  const QuotientRing& R = ctx.base();
  if (ctx.num_gens() != 2) {
    throw PreconditionError("descent requires exactly two parameters");
  }
  if (R.dimension() != 2) {
    throw PreconditionError("descent requires a two-dimensional base ring");
  }
  if (!R.is_regular(gamma)) {
    throw PreconditionError("descent multiplier is a zerodivisor");
  }
  if (!ctx.is_relation(F)) {
    throw PreconditionError("descent input is not a relation");
  }

  const PolyRing& amb = R.ambient();
  const PrimeField& Fld = amb.field();
  const MonomialOrder ord = amb.grevlex();
  const Polynomial& x = ctx.ideal_gens()[0];
  const Polynomial& y = ctx.ideal_gens()[1];
  std::uint32_t N = ctx.t_degree(F);
  if (N == 0) throw PreconditionError("descent input has T-degree zero");

  std::vector<Polynomial> r = t_coefficients(ctx, F, N);
  for (auto& rk : r) rk = R.normal_form(rk);
  if (r[0].is_zero()) {
    throw PreconditionError("descent input has zero leading coefficient r_N");
  }

  const auto& jgb = R.defining_ideal().groebner_basis();
  BuchbergerOptions opt;
  opt.degree_cap = R.degree_cap();

  Polynomial gamma_nf = R.normal_form(gamma);

  // gamma * PS_j = s_j * y^j in R; recover the s_j as normal forms
  std::vector<Polynomial> s(N + 1);  // s[1..N]
  std::vector<Polynomial> xpow = {amb.constant(1, ord)};
  std::vector<Polynomial> ypow = {amb.constant(1, ord)};
  for (std::uint32_t k = 1; k <= N; ++k) {
    xpow.push_back(R.normal_form(poly_mul(xpow[k - 1], x, Fld, ord)));
    ypow.push_back(R.normal_form(poly_mul(ypow[k - 1], y, Fld, ord)));
  }
  for (std::uint32_t j = 1; j <= N; ++j) {
    Polynomial ps;
    for (std::uint32_t k = 0; k < j; ++k) {
      ps = poly_add(ps, poly_mul(r[k], poly_mul(xpow[j - 1 - k], ypow[k], Fld, ord),
                                 Fld, ord),
                    Fld, ord);
    }
    Polynomial cj = R.normal_form(poly_mul(gamma_nf, ps, Fld, ord));
    std::vector<Polynomial> basis = {ypow[j]};
    basis.insert(basis.end(), jgb.begin(), jgb.end());
    auto witness = lift_membership(cj, basis, Fld, ord, opt);
    if (!witness) {
      DescentResult res;
      res.status = DescentResult::Status::Failed;
      res.message = "multiplier transfer failed at step " + std::to_string(j) +
                    ": gamma*(partial sum) is not in (y^" + std::to_string(j) + ")";
      return res;
    }
    s[j] = R.normal_form((*witness)[0]);
  }

  for (std::uint32_t p = 1; p + 1 <= N; ++p) {
    std::vector<Polynomial> basis = {gamma_nf};
    for (std::uint32_t i = 1; i <= p; ++i) basis.push_back(s[i]);
    basis.insert(basis.end(), jgb.begin(), jgb.end());
    auto witness = lift_membership(s[p + 1], basis, Fld, ord, opt);
    if (!witness) continue;
    Polynomial a = (*witness)[0];
    // G = PS_{p+1}(T) - a*y*T2^p - sum_i b_i * T2^(p+1-i) * PS_i(T)
    const MonomialOrder& tord = ctx.relation_order();
    Polynomial G = partial_sum_in_t(ctx, r, p + 1);
    Polynomial ay = poly_mul(a, y, Fld, ord);
    G = poly_sub(G, poly_mul(ctx.from_base(ay), ctx.t_var(1, p), Fld, tord), Fld,
                 tord);
    for (std::uint32_t i = 1; i <= p; ++i) {
      const Polynomial& bi = (*witness)[i];
      if (bi.is_zero()) continue;
      Polynomial piece = poly_mul(ctx.from_base(bi), ctx.t_var(1, p + 1 - i), Fld,
                                  tord);
      piece = poly_mul(piece, partial_sum_in_t(ctx, r, i), Fld, tord);
      G = poly_sub(G, piece, Fld, tord);
    }
    G = ctx.normal_form(G);
    if (!ctx.is_relation(G)) {
      DescentResult res;
      res.status = DescentResult::Status::Failed;
      res.message = "internal: descent output failed the relation check";
      return res;
    }
    DescentResult res;
    res.status = DescentResult::Status::Descended;
    res.relation = G;
    res.degree = p;
    res.steps = p;
    return res;
  }

  if (N == 1) {
    DescentResult res;
    res.status = DescentResult::Status::DegeneratePassThrough;
    res.relation = ctx.normal_form(F);
    res.degree = 1;
    res.steps = 1;
    res.message = "degree-1 input passed through";
    return res;
  }
  DescentResult res;
  res.status = DescentResult::Status::Failed;
  res.message = "no p < deg F with s_{p+1} in (gamma, s_1..s_p); "
                "module-length hypothesis violated at this degree";
  return res;
}

}  // namespace reestype
