#include "reestype/multipliers.hpp"

#include <algorithm>

#include "reestype/errors.hpp"

namespace reestype {

namespace {

MultiplierCertificate check_single_power(const QuotientRing& R,
                                         const Polynomial& zpow,
                                         std::span<const Polynomial> sop) {
  MultiplierCertificate cert;
  cert.element = zpow;
  cert.sop.assign(sop.begin(), sop.end());
  cert.degenerate_zero = R.is_zero_in_quotient(zpow);
  const PrimeField& F = R.ambient().field();
  MonomialOrder ord = R.ambient().grevlex();
  bool all = true;
  for (std::size_t k = 0; k < sop.size(); ++k) {
    std::vector<Polynomial> prefix(sop.begin(), sop.begin() + k);
    std::vector<Polynomial> xk = {sop[k]};
    Ideal colon = R.colon_in_quotient(prefix, xk);
    Ideal prefix_ideal = R.lifted_ideal(prefix);
    bool ok = true;
    for (const auto& g : colon.generators()) {
      Polynomial prod = poly_mul(zpow, g, F, ord);
      if (!prefix_ideal.contains(prod)) {
        ok = false;
        break;
      }
    }
    cert.index_pass.push_back(ok);
    all = all && ok;
  }
  cert.pass = all;
  return cert;
}

}  // namespace

MultiplierCertificate cm_multiplier_check(const QuotientRing& R,
                                          const Polynomial& z,
                                          std::span<const Polynomial> sop,
                                          std::uint32_t power_cap) {
  if (!R.is_system_of_parameters(sop)) {
    throw PreconditionError("multiplier check requires a system of parameters");
  }
  const PrimeField& F = R.ambient().field();
  MonomialOrder ord = R.ambient().grevlex();
  Polynomial znf = R.normal_form(z);
  Polynomial zpow = znf;
  MultiplierCertificate cert;
  for (std::uint32_t e = 1; e <= std::max<std::uint32_t>(power_cap, 1); ++e) {
    cert = check_single_power(R, zpow, sop);
    cert.power = e;
    if (cert.pass) return cert;
    zpow = R.normal_form(poly_mul(zpow, znf, F, ord));
  }
  return cert;
}

bool colon_transfer_check(const QuotientRing& R, const Polynomial& z,
                          std::span<const Polynomial> sop,
                          const MonomialIdeal& exponents, const Monomial& m) {
  if (!R.is_system_of_parameters(sop)) {
    throw PreconditionError("colon transfer requires a system of parameters");
  }
  if (exponents.nvars() != sop.size() || m.nvars() != sop.size()) {
    throw PreconditionError("exponent data must have one slot per parameter");
  }
  const PrimeField& F = R.ambient().field();
  MonomialOrder ord = R.ambient().grevlex();

  auto eval = [&](const Monomial& e) {
    Polynomial prod = R.ambient().constant(1, ord);
    for (std::size_t i = 0; i < sop.size(); ++i) {
      if (e[i] > 0) prod = poly_mul(prod, poly_pow(sop[i], e[i], F, ord), F, ord);
    }
    return R.normal_form(prod);
  };

  std::vector<Polynomial> igens;
  for (const auto& e : exponents.gens()) igens.push_back(eval(e));
  Polynomial xm = eval(m);
  if (xm.is_zero()) {
    throw PreconditionError("parameter monomial evaluates to zero in the quotient");
  }

  // left side: (IR : x^m) in the quotient
  std::vector<Polynomial> xmv = {xm};
  Ideal left = R.colon_in_quotient(igens, xmv);

  // right side: (I : X^m) computed on exponents, evaluated at the sop
  MonomialIdeal colon_exp = exponents.colon(m);
  std::vector<Polynomial> right_gens;
  for (const auto& e : colon_exp.gens()) right_gens.push_back(eval(e));
  Ideal right = R.lifted_ideal(right_gens);

  // z*(left) inside right, and right inside left
  Polynomial znf = R.normal_form(z);
  for (const auto& g : left.generators()) {
    if (!right.contains(poly_mul(znf, g, F, ord))) return false;
  }
  Ideal left_full = R.lifted_ideal(left.generators());
  for (const auto& g : right_gens) {
    if (!left_full.contains(g)) return false;
  }
  return true;
}

PerturbationReport rt_perturbation_experiment(const QuotientRing& R,
                                              std::span<const Polynomial> sop,
                                              const Polynomial& alpha,
                                              std::size_t index) {
  if (index >= sop.size()) throw PreconditionError("perturbation index out of range");
  if (!R.is_system_of_parameters(sop)) {
    throw PreconditionError("perturbation experiment requires a system of parameters");
  }
  const PrimeField& F = R.ambient().field();
  MonomialOrder ord = R.ambient().grevlex();
  std::vector<Polynomial> perturbed(sop.begin(), sop.end());
  perturbed[index] = R.normal_form(poly_add(perturbed[index], alpha, F, ord));
  if (!R.is_system_of_parameters(perturbed)) {
    throw PreconditionError("perturbed tuple is not a system of parameters");
  }
  ReesPresentation base =
      rees_presentation(R, std::vector<Polynomial>(sop.begin(), sop.end()));
  ReesPresentation moved = rees_presentation(R, std::move(perturbed));
  PerturbationReport rep;
  rep.rt_base = relation_type(base);
  rep.rt_perturbed = relation_type(moved);
  rep.equal = rep.rt_base == rep.rt_perturbed;
  rep.inhomogeneous_warning =
      base.inhomogeneous_input() || moved.inhomogeneous_input();
  return rep;
}

bool superficial_check(const QuotientRing& R, std::span<const Polynomial> igens,
                       const Polynomial& x, std::uint32_t c, std::uint32_t nmax) {
  if (nmax <= c) throw PreconditionError("superficiality sweep needs nmax > c");
  Polynomial xnf = R.normal_form(x);
  if (xnf.is_zero()) return false;
  Ideal I = R.lifted_ideal(igens);
  if (!I.contains(xnf)) {
    throw PreconditionError("superficiality test requires x in I");
  }

  const PrimeField& F = R.ambient().field();
  MonomialOrder ord = R.ambient().grevlex();

  // powers of I as generator lists (products of n generators)
  auto power_gens = [&](std::uint32_t n) {
    std::vector<Polynomial> out = {R.ambient().constant(1, ord)};
    for (std::uint32_t step = 0; step < n; ++step) {
      std::vector<Polynomial> next;
      for (const auto& f : out) {
        for (const auto& g : igens) {
          Polynomial p = R.normal_form(poly_mul(f, g, F, ord));
          if (!p.is_zero()) next.push_back(p);
        }
      }
      std::sort(next.begin(), next.end(),
                [&](const Polynomial& a, const Polynomial& b) {
                  return ord.less(a.leading_monomial(), b.leading_monomial());
                });
      next.erase(std::unique(next.begin(), next.end()), next.end());
      out = std::move(next);
    }
    return out;
  };

  std::vector<std::vector<Polynomial>> pw(nmax + 1);
  for (std::uint32_t n = 0; n <= nmax; ++n) pw[n] = power_gens(n);

  for (std::uint32_t n = c + 1; n <= nmax; ++n) {
    std::vector<Polynomial> xv = {xnf};
    Ideal colon = R.lifted_ideal(R.colon_in_quotient(pw[n], xv).generators());
    Ideal ic = R.lifted_ideal(pw[c]);
    Ideal lhs = colon.intersect(ic);
    Ideal rhs = R.lifted_ideal(pw[n - 1]);
    if (!lhs.equals(rhs)) return false;
  }
  return true;
}

}  // namespace reestype
