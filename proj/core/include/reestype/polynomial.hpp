#ifndef REESTYPE_POLYNOMIAL_HPP
#define REESTYPE_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "reestype/field.hpp"
#include "reestype/monomial.hpp"

namespace reestype {

struct Term {
  std::uint32_t coef;  // nonzero residue mod p
  Monomial mono;
};

/// Terms sorted strictly descending in the active order, no zero
/// coefficients. The canonical form is unique per (polynomial, order);
/// arithmetic assumes both operands were built under the same order.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero() { return Polynomial(); }
  /// Merge like terms, drop zeros, sort descending.
  static Polynomial normalized(std::vector<Term> raw, const PrimeField& F,
                               const MonomialOrder& ord);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  std::uint32_t leading_coef() const { return leading_term().coef; }
  std::uint32_t total_degree() const;
  std::size_t nvars() const;

  bool operator==(const Polynomial& o) const;

 private:
  friend Polynomial poly_add(const Polynomial&, const Polynomial&,
                             const PrimeField&, const MonomialOrder&);
  friend Polynomial poly_term_mul(const Term&, const Polynomial&,
                                  const PrimeField&, const MonomialOrder&);
  friend Polynomial poly_scale(const Polynomial&, std::uint32_t,
                               const PrimeField&);
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b,
                    const PrimeField& F, const MonomialOrder& ord);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b,
                    const PrimeField& F, const MonomialOrder& ord);
Polynomial poly_neg(const Polynomial& a, const PrimeField& F);
/// Multiplication by a single term keeps the term sequence sorted because
/// the order is multiplicative.
Polynomial poly_term_mul(const Term& t, const Polynomial& a,
                         const PrimeField& F, const MonomialOrder& ord);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b,
                    const PrimeField& F, const MonomialOrder& ord);
Polynomial poly_scale(const Polynomial& a, std::uint32_t c, const PrimeField& F);
/// Scale so the leading coefficient becomes 1.
Polynomial poly_monic(const Polynomial& a, const PrimeField& F);
Polynomial poly_pow(const Polynomial& a, std::uint32_t e, const PrimeField& F,
                    const MonomialOrder& ord);

/// Re-sort an existing polynomial under a different order.
Polynomial poly_reorder(const Polynomial& a, const PrimeField& F,
                        const MonomialOrder& ord);

/// Max over terms of the exponent sum at the given variable indices.
std::uint32_t poly_degree_at(const Polynomial& a,
                             std::span<const std::size_t> indices);
/// All terms have the same total degree (zero polynomial counts as
/// homogeneous).
bool poly_is_homogeneous(const Polynomial& a);
/// All terms have the same exponent sum at the given indices.
bool poly_is_homogeneous_at(const Polynomial& a,
                            std::span<const std::size_t> indices);

/// Homomorphic substitution: variable i of `f` maps to images[i]. Every
/// variable actually appearing in `f` must have an image, otherwise a
/// PreconditionError is raised. The images (and the result) live under
/// `out_ord`, which may belong to a different ring.
Polynomial poly_substitute(const Polynomial& f,
                           std::span<const std::optional<Polynomial>> images,
                           const PrimeField& F, const MonomialOrder& out_ord);

/// Exact division a / b; throws PreconditionError when the division is not
/// exact. Valid over F_p[x] (used by fraction-free elimination and colon
/// ideals, where exactness is guaranteed).
Polynomial poly_exact_divide(const Polynomial& a, const Polynomial& b,
                             const PrimeField& F, const MonomialOrder& ord);

}  // namespace reestype

#endif
