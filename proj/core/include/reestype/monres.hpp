#ifndef REESTYPE_MONRES_HPP
#define REESTYPE_MONRES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "reestype/quotient.hpp"

namespace reestype {

/// Monomial ideal stored by its minimal generators (no generator divides
/// another); minimalization happens on construction.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }
  bool contains(const Monomial& m) const;
  /// (I : m), generated by g_i / gcd(g_i, m), minimalized.
  MonomialIdeal colon(const Monomial& m) const;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Exchange-stability under a variable priority listing: for every minimal
/// generator m, moving any dividing variable listed after the leading one
/// up to the leading variable of m stays inside the ideal.
bool is_stable(const MonomialIdeal& I, std::span<const std::size_t> variable_order);

using Matrix = std::vector<std::vector<Polynomial>>;  // row-major

/// Finite free complex G_n -> ... -> G_1 -> G_0 with multigraded twists
/// recorded per free basis element. mats[i] is the map G_{i+1} -> G_i.
struct FreeComplex {
  std::vector<std::vector<Monomial>> twists;  // twists[i] for G_i
  std::vector<Matrix> mats;                   // mats[i]: G_{i+1} -> G_i

  std::size_t length() const { return mats.size(); }
  std::vector<std::size_t> betti() const;
  /// r_i = sum_{t>=i} (-1)^(t-i) b_t for i = 1..length, r_{length+1} = 0.
  std::vector<long> expected_ranks() const;
};

/// Resolution of R/I by the colon-split mapping cone: peel off the
/// generator m with the largest exponent of the last variable (grevlex
/// tie-break), resolve R/(I':m) and R/I', and emit the cone over the
/// multiplication-by-m comparison map. Length is at most the variable
/// count. All differentials compose to zero exactly.
FreeComplex mapping_cone_resolution(const MonomialIdeal& I, const PolyRing& ring);

/// One column per generator pair (i < j): -lcm/g_i in row i, +lcm/g_j in
/// row j; every column is a syzygy of the generator row.
Matrix pairwise_syzygy_matrix(std::span<const Monomial> gens, const PolyRing& ring);

/// Largest t such that some t x t minor of M is nonzero in R, by
/// exhaustive minor enumeration with early exit. Minor size is capped at 8.
std::uint32_t rank_over_quotient(const QuotientRing& R, const Matrix& M);

/// Rank over the polynomial ring (a domain) by fraction-free elimination.
std::uint32_t rank_over_polynomial_ring(const PolyRing& ring, const Matrix& M);

/// Apply a ring map to every entry (base change along X_i -> images[i]).
FreeComplex base_change(const FreeComplex& C, const PolyRing& source,
                        std::span<const Polynomial> images,
                        const QuotientRing& target);

struct RankHeightEntry {
  std::size_t index = 0;  // homological position i
  long expected_rank = 0;
  std::uint32_t rank = 0;
  bool rank_ok = false;
  int height = 0;
  bool height_ok = false;
  bool radical_ok = true;  // only meaningful when the radical check ran
};

struct RankHeightReport {
  std::vector<RankHeightEntry> entries;
  bool all_rank_ok = true;
  bool all_height_ok = true;
  bool all_radical_ok = true;
  bool pass() const { return all_rank_ok && all_height_ok && all_radical_ok; }
};

/// Standard rank and height conditions for the complex over R: computed
/// rank of each differential against r_i, and height of the ideal of
/// r_i-minors at least i. Optionally also the radical containment of the
/// products of i-subsets of the variables (checked on the intersection of
/// those subset ideals, which the products generate up to radical).
RankHeightReport verify_rank_height(const QuotientRing& R, const FreeComplex& C,
                                    bool check_radical_containment = false);

}  // namespace reestype

#endif
