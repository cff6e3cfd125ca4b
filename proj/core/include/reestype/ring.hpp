#ifndef REESTYPE_RING_HPP
#define REESTYPE_RING_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reestype/field.hpp"
#include "reestype/monomial.hpp"
#include "reestype/polynomial.hpp"

namespace reestype {

/// Ambient polynomial ring F_p[x1, ..., xn]: a prime field plus named
/// variables. Immutable after construction.
class PolyRing {
 public:
  PolyRing(std::uint32_t p, std::vector<std::string> vars);

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.p(); }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_[i]; }
  std::optional<std::size_t> var_index(std::string_view name) const;

  MonomialOrder grevlex() const { return MonomialOrder::grevlex(nvars()); }

  Polynomial zero() const { return Polynomial::zero(); }
  Polynomial constant(long long c, const MonomialOrder& ord) const;
  Polynomial var(std::size_t i, const MonomialOrder& ord,
                 std::uint32_t exponent = 1) const;
  Polynomial monomial_poly(const Monomial& m, const MonomialOrder& ord,
                           std::uint32_t coef = 1) const;

  /// Text syntax: `coef*x^e*y + ...`, coefficient and exponents optional.
  Polynomial parse(std::string_view text, const MonomialOrder& ord) const;
  std::vector<Polynomial> parse_list(std::string_view comma_separated,
                                     const MonomialOrder& ord) const;
  std::string to_string(const Polynomial& f) const;
  std::string to_string(const Monomial& m) const;

  /// New ring with extra variables appended.
  PolyRing extended(const std::vector<std::string>& extra) const;
  /// Map a polynomial of this ring into `target`, matching variables by
  /// name. Every variable appearing in f must exist in the target.
  Polynomial map_to(const Polynomial& f, const PolyRing& target,
                    const MonomialOrder& target_ord) const;

  bool operator==(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
};

}  // namespace reestype

#endif
