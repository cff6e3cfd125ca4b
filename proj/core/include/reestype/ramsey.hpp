#ifndef REESTYPE_RAMSEY_HPP
#define REESTYPE_RAMSEY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace reestype {

/// Sequence of d-tuples of nonnegative integers with |A_i| = k + i
/// (1-based i), ordered by the componentwise partial order.
struct TupleSequence {
  std::size_t d = 1;
  std::uint32_t k = 0;
  std::vector<std::vector<std::uint32_t>> tuples;

  /// Validates the sum constraint |A_i| = k + i.
  static TupleSequence checked(std::size_t d, std::uint32_t k,
                               std::vector<std::vector<std::uint32_t>> tuples);
};

bool tuple_leq(const std::vector<std::uint32_t>& a,
               const std::vector<std::uint32_t>& b);

/// Longest chain A_{i_1} <= ... <= A_{i_l} as 0-based indices; among
/// maximal chains the lexicographically smallest index sequence is
/// returned.
std::vector<std::size_t> longest_chain(const TupleSequence& seq);

struct RamseySearchResult {
  /// Smallest M such that every valid sequence of length M contains a
  /// chain of length l; empty when the search exhausted m_max first.
  std::optional<std::uint64_t> value;
  /// A chain-free witness of length value-1 (or of length m_max when the
  /// threshold is unknown).
  std::optional<TupleSequence> witness;
  std::uint64_t searched_up_to = 0;
};

/// Exhaustive backtracking over all sum-constrained sequences: finds the
/// chain-avoidance threshold M(d, k, l), or reports "unknown above m_max".
RamseySearchResult ramsey_number_search(std::size_t d, std::uint32_t k,
                                        std::uint32_t l, std::uint64_t m_max);

/// M(d, k, l) supplier; empty result propagates as failure.
using RamseyOracle =
    std::function<std::optional<std::uint64_t>(std::size_t, std::uint32_t, std::uint32_t)>;

struct BoundConstants {
  std::size_t d = 0;
  std::uint32_t L = 0;
  std::vector<std::uint64_t> K;  // K[i], i >= 1
  std::vector<std::uint64_t> M;  // M[i], i >= 2 (M[0], M[1] unused)
  std::vector<std::uint64_t> N;  // N[i], i >= 1
};

/// Constant recursion K_1 = M(d,1,L) = N_1; M_i = sum of binomials
/// counting (i-1)-tuples of sum <= K_{i-1}; N_i = M(d, 2K_{i-1},
/// M_i(L-1)+1); K_i = 2K_{i-1} + N_i. Returns nullopt when the oracle
/// fails on a queried argument.
std::optional<BoundConstants> bound_constants(std::size_t d, std::uint32_t L,
                                              std::size_t steps,
                                              const RamseyOracle& oracle);

/// Number of w-tuples of nonnegative integers with sum <= cap, by direct
/// formula; used by the constant recursion.
std::uint64_t count_bounded_tuples(std::size_t width, std::uint64_t cap);

}  // namespace reestype

#endif
