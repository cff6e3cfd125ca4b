#ifndef REESTYPE_GROEBNER_HPP
#define REESTYPE_GROEBNER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "reestype/polynomial.hpp"
#include "reestype/ring.hpp"

namespace reestype {

inline constexpr std::uint32_t kDefaultDegreeCap = 60;

/// Remainder of multivariate division of f by `basis`: no term of the
/// result is divisible by any basis leading monomial, and f minus the
/// result lies in the ideal generated by the basis.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis,
                  const PrimeField& F, const MonomialOrder& ord);

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // f = sum cofactors[i]*basis[i] + remainder
};
DivisionResult reduce_with_cofactors(const Polynomial& f,
                                     std::span<const Polynomial> basis,
                                     const PrimeField& F,
                                     const MonomialOrder& ord);

struct BuchbergerOptions {
  std::uint32_t degree_cap = kDefaultDegreeCap;
};

/// Reduced Groebner basis (monic leads, fully interreduced). Deterministic
/// for fixed input and order: S-pairs are processed by minimal lcm degree
/// first, pairs skipped via the coprime-lead and chain criteria.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens,
                                   const PrimeField& F, const MonomialOrder& ord,
                                   const BuchbergerOptions& opt = {});

/// Groebner basis where every element carries its representation in terms
/// of the input generators. Not interreduced.
struct TrackedBasis {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> reps;  // basis[k] = sum reps[k][i]*gens[i]
};
TrackedBasis buchberger_tracked(std::span<const Polynomial> gens,
                                const PrimeField& F, const MonomialOrder& ord,
                                const BuchbergerOptions& opt = {});

/// Express f as an explicit combination of the generators, or nullopt when
/// f is not in the ideal. The returned combination is verified exactly.
std::optional<std::vector<Polynomial>> lift_membership(
    const Polynomial& f, std::span<const Polynomial> gens, const PrimeField& F,
    const MonomialOrder& ord, const BuchbergerOptions& opt = {});

/// An ideal of a polynomial ring together with a monomial order and a
/// lazily computed reduced Groebner basis. Once the cache is filled the
/// handle is immutable and safe to share across threads.
class Ideal {
 public:
  Ideal(PolyRing ring, MonomialOrder ord, std::vector<Polynomial> gens,
        std::uint32_t degree_cap = kDefaultDegreeCap);
  /// Wrap generators already known to be a reduced Groebner basis.
  static Ideal with_known_gb(PolyRing ring, MonomialOrder ord,
                             std::vector<Polynomial> gb,
                             std::uint32_t degree_cap = kDefaultDegreeCap);

  const PolyRing& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::uint32_t degree_cap() const { return degree_cap_; }

  const std::vector<Polynomial>& groebner_basis() const;
  bool gb_cached() const { return static_cast<bool>(gb_); }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool is_zero_ideal() const;
  bool is_unit_ideal() const;
  /// Same ideal membership both ways, via reduced-GB comparison.
  bool equals(const Ideal& other) const;

  Ideal plus(std::span<const Polynomial> more) const;

  /// Generators of I intersected with the subring omitting `front` (the
  /// returned handle lives in the same ambient ring, its generators free of
  /// the eliminated variables).
  Ideal eliminate(std::span<const std::size_t> front) const;
  /// {g : g*f in I}, via intersection with (f) and exact division.
  Ideal colon(const Polynomial& f) const;
  /// {g : g*K in I}; colon by the zero ideal is the unit ideal.
  Ideal colon(const Ideal& K) const;
  /// {g : f^n*g in I for some n}, by the auxiliary-variable trick.
  Ideal saturate(const Polynomial& f) const;
  Ideal intersect(const Ideal& other) const;
  /// f in sqrt(I), by the auxiliary-variable membership test.
  bool radical_contains(const Polynomial& f) const;
  /// Krull dimension of ring/I via independent variable sets modulo the
  /// initial ideal; -1 for the unit ideal.
  int dimension() const;

 private:
  PolyRing ring_;
  MonomialOrder ord_;
  std::vector<Polynomial> gens_;
  std::uint32_t degree_cap_;
  mutable std::shared_ptr<const std::vector<Polynomial>> gb_;
};

/// Height of I as codimension: dim(ring) - dim(I). Valid for the
/// equidimensional ambients used here.
int height_as_codimension(const Ideal& I);

}  // namespace reestype

#endif
