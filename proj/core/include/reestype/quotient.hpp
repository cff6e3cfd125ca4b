#ifndef REESTYPE_QUOTIENT_HPP
#define REESTYPE_QUOTIENT_HPP

#include <span>
#include <vector>

#include "reestype/groebner.hpp"

namespace reestype {

/// R = k[x]/J, the graded stand-in for the local rings all higher modules
/// compute in. Normal forms modulo the Groebner basis of J are the
/// canonical representatives. Immutable after construction.
class QuotientRing {
 public:
  QuotientRing(PolyRing ambient, std::vector<Polynomial> j_gens,
               std::uint32_t degree_cap = kDefaultDegreeCap);

  const PolyRing& ambient() const { return ambient_; }
  const MonomialOrder& order() const { return defining_.order(); }
  const Ideal& defining_ideal() const { return defining_; }
  std::uint32_t characteristic() const { return ambient_.characteristic(); }
  std::uint32_t degree_cap() const { return defining_.degree_cap(); }
  bool defining_homogeneous() const { return homogeneous_; }

  Polynomial normal_form(const Polynomial& f) const {
    return defining_.normal_form(f);
  }
  bool is_zero_in_quotient(const Polynomial& f) const {
    return defining_.contains(f);
  }

  /// Krull dimension of the quotient.
  int dimension() const { return defining_.dimension(); }

  /// Nonzerodivisor test: J : f == J. Raises PreconditionError if f lies
  /// in J.
  bool is_regular(const Polynomial& f) const;

  /// d elements cutting the quotient down to dimension zero, d = dim R.
  bool is_system_of_parameters(std::span<const Polynomial> elems) const;

  /// (I + J) : (K) in the ambient ring, generators reduced mod J. Lifts the
  /// colon of ideals of the quotient.
  Ideal colon_in_quotient(std::span<const Polynomial> I,
                          std::span<const Polynomial> K) const;

  /// Ideal (gens) + J of the ambient ring, usable for membership tests in
  /// the quotient.
  Ideal lifted_ideal(std::span<const Polynomial> gens) const;

  bool operator==(const QuotientRing& o) const;

 private:
  PolyRing ambient_;
  Ideal defining_;
  bool homogeneous_;
};

/// Fedder's F-purity test for S/J over F_p: forms the ideal of p-th powers
/// J^[p], the colon J^[p] : J, and decides non-containment in n^[p] where n
/// is the ideal of all variables. Requires p == characteristic of J's ring.
bool fedder_fpure(const Ideal& J, std::uint32_t p);

}  // namespace reestype

#endif
