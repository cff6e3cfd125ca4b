#include "reestype/polynomial.hpp"

#include <algorithm>

#include "reestype/errors.hpp"

namespace reestype {

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::size_t Polynomial::nvars() const {
  return terms_.empty() ? 0 : terms_.front().mono.nvars();
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coef != o.terms_[i].coef || !(terms_[i].mono == o.terms_[i].mono))
      return false;
  }
  return true;
}

Polynomial Polynomial::normalized(std::vector<Term> raw, const PrimeField& F,
                                  const MonomialOrder& ord) {
  std::sort(raw.begin(), raw.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.mono, b.mono);
  });
  Polynomial out;
  for (const Term& t : raw) {
    std::uint32_t c = t.coef % F.p();
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coef = F.add(out.terms_.back().coef, c);
    } else {
      out.terms_.push_back({c, t.mono});
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.coef == 0; });
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b,
                    const PrimeField& F, const MonomialOrder& ord) {
  Polynomial out;
  out.terms_.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = ord.compare(a.terms()[i].mono, b.terms()[j].mono);
    if (cmp == std::strong_ordering::greater) {
      out.terms_.push_back(a.terms()[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.terms_.push_back(b.terms()[j++]);
    } else {
      std::uint32_t c = F.add(a.terms()[i].coef, b.terms()[j].coef);
      if (c != 0) out.terms_.push_back({c, a.terms()[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.terms_.push_back(a.terms()[i]);
  for (; j < b.size(); ++j) out.terms_.push_back(b.terms()[j]);
  return out;
}

Polynomial poly_neg(const Polynomial& a, const PrimeField& F) {
  return poly_scale(a, F.neg(1), F);
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b,
                    const PrimeField& F, const MonomialOrder& ord) {
  return poly_add(a, poly_neg(b, F), F, ord);
}

Polynomial poly_term_mul(const Term& t, const Polynomial& a,
                         const PrimeField& F, const MonomialOrder& ord) {
  (void)ord;  // multiplicativity keeps the sequence sorted
  Polynomial out;
  if (t.coef % F.p() == 0) return out;
  out.terms_.reserve(a.size());
  for (const Term& s : a.terms()) {
    std::uint32_t c = F.mul(s.coef, t.coef);
    if (c != 0) out.terms_.push_back({c, s.mono.times(t.mono)});
  }
  return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b,
                    const PrimeField& F, const MonomialOrder& ord) {
  Polynomial acc;
  for (const Term& t : a.terms()) {
    acc = poly_add(acc, poly_term_mul(t, b, F, ord), F, ord);
  }
  return acc;
}

Polynomial poly_scale(const Polynomial& a, std::uint32_t c, const PrimeField& F) {
  Polynomial out;
  c %= F.p();
  if (c == 0) return out;
  out.terms_.reserve(a.size());
  for (const Term& t : a.terms()) out.terms_.push_back({F.mul(t.coef, c), t.mono});
  return out;
}

Polynomial poly_monic(const Polynomial& a, const PrimeField& F) {
  if (a.is_zero()) return a;
  return poly_scale(a, F.inv(a.leading_coef()), F);
}

Polynomial poly_pow(const Polynomial& a, std::uint32_t e, const PrimeField& F,
                    const MonomialOrder& ord) {
  Monomial one(ord.nvars());
  Polynomial result = Polynomial::normalized({{1, one}}, F, ord);
  Polynomial base = a;
  while (e > 0) {
    if (e & 1) result = poly_mul(result, base, F, ord);
    base = (e >>= 1) ? poly_mul(base, base, F, ord) : base;
  }
  return result;
}

Polynomial poly_reorder(const Polynomial& a, const PrimeField& F,
                        const MonomialOrder& ord) {
  return Polynomial::normalized(a.terms(), F, ord);
}

std::uint32_t poly_degree_at(const Polynomial& a,
                             std::span<const std::size_t> indices) {
  std::uint32_t d = 0;
  for (const Term& t : a.terms()) d = std::max(d, t.mono.degree_at(indices));
  return d;
}

bool poly_is_homogeneous(const Polynomial& a) {
  if (a.is_zero()) return true;
  std::uint32_t d = a.terms().front().mono.degree();
  for (const Term& t : a.terms()) {
    if (t.mono.degree() != d) return false;
  }
  return true;
}

bool poly_is_homogeneous_at(const Polynomial& a,
                            std::span<const std::size_t> indices) {
  if (a.is_zero()) return true;
  std::uint32_t d = a.terms().front().mono.degree_at(indices);
  for (const Term& t : a.terms()) {
    if (t.mono.degree_at(indices) != d) return false;
  }
  return true;
}

Polynomial poly_substitute(const Polynomial& f,
                           std::span<const std::optional<Polynomial>> images,
                           const PrimeField& F, const MonomialOrder& out_ord) {
  Monomial one(out_ord.nvars());
  Polynomial acc;
  for (const Term& t : f.terms()) {
    Polynomial prod = Polynomial::normalized({{t.coef, one}}, F, out_ord);
    for (std::size_t v = 0; v < t.mono.nvars(); ++v) {
      std::uint32_t e = t.mono[v];
      if (e == 0) continue;
      if (v >= images.size() || !images[v].has_value()) {
        throw PreconditionError("substitution is missing an image for a variable of f");
      }
      prod = poly_mul(prod, poly_pow(*images[v], e, F, out_ord), F, out_ord);
      if (prod.is_zero()) break;
    }
    acc = poly_add(acc, prod, F, out_ord);
  }
  return acc;
}

Polynomial poly_exact_divide(const Polynomial& a, const Polynomial& b,
                             const PrimeField& F, const MonomialOrder& ord) {
  if (b.is_zero()) throw PreconditionError("division by zero polynomial");
  Polynomial rem = a;
  std::vector<Term> quot;
  const Term& lb = b.leading_term();
  std::uint32_t lb_inv = F.inv(lb.coef);
  while (!rem.is_zero()) {
    const Term& lr = rem.leading_term();
    if (!lb.mono.divides(lr.mono)) {
      throw PreconditionError("polynomial division is not exact");
    }
    Term q{F.mul(lr.coef, lb_inv), lr.mono.divided_by(lb.mono)};
    quot.push_back(q);
    rem = poly_sub(rem, poly_term_mul(q, b, F, ord), F, ord);
  }
  return Polynomial::normalized(std::move(quot), F, ord);
}

}  // namespace reestype
