#include "reestype/quotient.hpp"

#include <algorithm>

#include "reestype/errors.hpp"

namespace reestype {

QuotientRing::QuotientRing(PolyRing ambient, std::vector<Polynomial> j_gens,
                           std::uint32_t degree_cap)
    : ambient_(ambient),
      defining_(ambient, MonomialOrder::grevlex(ambient.nvars()),
                std::move(j_gens), degree_cap),
      homogeneous_(true) {
  if (defining_.is_unit_ideal()) {
    throw PreconditionError("defining ideal of a quotient ring must be proper");
  }
  for (const auto& g : defining_.generators()) {
    if (!poly_is_homogeneous(g)) homogeneous_ = false;
  }
  defining_.groebner_basis();  // fill the cache; the ring is shared read-only
}

bool QuotientRing::is_regular(const Polynomial& f) const {
  if (defining_.contains(f)) {
    throw PreconditionError("regularity test on an element of the defining ideal");
  }
  Ideal c = defining_.colon(normal_form(f));
  return c.equals(defining_);
}

bool QuotientRing::is_system_of_parameters(std::span<const Polynomial> elems) const {
  int d = dimension();
  if (static_cast<int>(elems.size()) != d) return false;
  std::vector<Polynomial> nf;
  nf.reserve(elems.size());
  for (const auto& e : elems) nf.push_back(normal_form(e));
  Ideal sum = defining_.plus(nf);
  return sum.dimension() == 0;
}

Ideal QuotientRing::lifted_ideal(std::span<const Polynomial> gens) const {
  return defining_.plus(gens);
}

Ideal QuotientRing::colon_in_quotient(std::span<const Polynomial> I,
                                      std::span<const Polynomial> K) const {
  Ideal lifted = defining_.plus(I);
  Ideal kideal(ambient_, order(), std::vector<Polynomial>(K.begin(), K.end()),
               degree_cap());
  Ideal c = lifted.colon(kideal);
  std::vector<Polynomial> nf;
  for (const auto& g : c.generators()) {
    Polynomial r = normal_form(g);
    if (!r.is_zero()) nf.push_back(r);
  }
  return Ideal(ambient_, order(), std::move(nf), degree_cap());
}

bool QuotientRing::operator==(const QuotientRing& o) const {
  return ambient_ == o.ambient_ && defining_.generators() == o.defining_.generators();
}

bool fedder_fpure(const Ideal& J, std::uint32_t p) {
  const PolyRing& ring = J.ring();
  if (ring.characteristic() != p) {
    throw PreconditionError("Fedder test: p must equal the ring characteristic");
  }
  const PrimeField& F = ring.field();
  const MonomialOrder& ord = J.order();

  std::vector<Polynomial> jp;
  for (const auto& g : J.generators()) {
    jp.push_back(poly_pow(g, p, F, ord));
  }
  Ideal frobenius_power(ring, ord, std::move(jp), J.degree_cap());
  Ideal c = frobenius_power.colon(J);

  // n^[p] = (x1^p, ..., xn^p) is its own Groebner basis
  std::vector<Polynomial> np;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    np.push_back(ring.var(i, ord, p));
  }
  Ideal nbracket = Ideal::with_known_gb(ring, ord, std::move(np), J.degree_cap());
  for (const auto& g : c.groebner_basis()) {
    if (!nbracket.contains(g)) return true;
  }
  return false;
}

}  // namespace reestype
