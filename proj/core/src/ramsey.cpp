#include "reestype/ramsey.hpp"

#include <algorithm>
#include <string>

#include "reestype/errors.hpp"

namespace reestype {

TupleSequence TupleSequence::checked(std::size_t d, std::uint32_t k,
                                     std::vector<std::vector<std::uint32_t>> tuples) {
  if (d == 0) throw PreconditionError("tuple width must be positive");
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (tuples[i].size() != d) {
      throw PreconditionError("tuple " + std::to_string(i + 1) + " has wrong width");
    }
    std::uint64_t sum = 0;
    for (auto v : tuples[i]) sum += v;
    if (sum != k + i + 1) {
      throw PreconditionError("tuple " + std::to_string(i + 1) +
                              " violates the sum constraint |A_i| = k+i");
    }
  }
  return TupleSequence{d, k, std::move(tuples)};
}

bool tuple_leq(const std::vector<std::uint32_t>& a,
               const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) throw PreconditionError("tuple width mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::vector<std::size_t> longest_chain(const TupleSequence& seq) {
  std::size_t n = seq.tuples.size();
  if (n == 0) return {};
  // best[i]: longest chain starting at i (so the reconstruction can pick
  // lexicographically smallest indices greedily from the left)
  std::vector<std::size_t> best(n, 1);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (tuple_leq(seq.tuples[i], seq.tuples[j])) {
        best[i] = std::max(best[i], best[j] + 1);
      }
    }
  }
  std::size_t total = *std::max_element(best.begin(), best.end());
  std::vector<std::size_t> chain;
  std::size_t need = total;
  std::size_t prev = n;  // sentinel: no predecessor yet
  for (std::size_t i = 0; i < n && need > 0; ++i) {
    if (best[i] != need) continue;
    if (prev != n && !tuple_leq(seq.tuples[prev], seq.tuples[i])) continue;
    chain.push_back(i);
    prev = i;
    --need;
  }
  return chain;
}

namespace {

// enumerate d-tuples of nonnegative integers with a fixed sum
void enumerate_tuples(std::size_t d, std::uint32_t sum,
                      std::vector<std::uint32_t>& cur,
                      const std::function<bool(const std::vector<std::uint32_t>&)>& visit,
                      bool& stop) {
  if (stop) return;
  if (cur.size() == d - 1) {
    cur.push_back(sum);
    if (visit(cur)) stop = true;
    cur.pop_back();
    return;
  }
  for (std::uint32_t v = 0; v <= sum && !stop; ++v) {
    cur.push_back(v);
    enumerate_tuples(d, sum - v, cur, visit, stop);
    cur.pop_back();
  }
}

struct WitnessSearch {
  std::size_t d;
  std::uint32_t k;
  std::uint32_t l;
  std::size_t target_len;
  std::vector<std::vector<std::uint32_t>> seq;
  std::vector<std::uint32_t> chainlen;  // longest chain ending at position i

  bool extend() {
    if (seq.size() == target_len) return true;
    std::uint32_t sum = k + static_cast<std::uint32_t>(seq.size()) + 1;
    std::vector<std::uint32_t> cur;
    bool stop = false;
    bool found = false;
    enumerate_tuples(
        d, sum, cur,
        [&](const std::vector<std::uint32_t>& tup) {
          std::uint32_t len = 1;
          for (std::size_t i = 0; i < seq.size(); ++i) {
            if (tuple_leq(seq[i], tup)) len = std::max(len, chainlen[i] + 1);
          }
          if (len >= l) return false;  // would complete a chain, prune
          seq.push_back(tup);
          chainlen.push_back(len);
          if (extend()) {
            found = true;
            return true;
          }
          seq.pop_back();
          chainlen.pop_back();
          return false;
        },
        stop);
    return found;
  }
};

}  // namespace

RamseySearchResult ramsey_number_search(std::size_t d, std::uint32_t k,
                                        std::uint32_t l, std::uint64_t m_max) {
  if (d == 0 || l == 0) throw PreconditionError("ramsey search needs d, l >= 1");
  RamseySearchResult res;
  // M(d, k, 1) = 1: a single tuple is a chain of length 1
  if (l == 1) {
    res.value = 1;
    res.witness = TupleSequence{d, k, {}};
    res.searched_up_to = 0;
    return res;
  }
  std::optional<TupleSequence> last_witness;
  for (std::uint64_t M = 1; M <= m_max; ++M) {
    WitnessSearch ws{d, k, l, static_cast<std::size_t>(M), {}, {}};
    if (ws.extend()) {
      last_witness = TupleSequence{d, k, ws.seq};
      res.searched_up_to = M;
      continue;
    }
    // no chain-free sequence of length M exists
    res.value = M;
    res.witness = std::move(last_witness);
    res.searched_up_to = M;
    return res;
  }
  res.witness = std::move(last_witness);
  res.searched_up_to = m_max;
  return res;
}

std::uint64_t count_bounded_tuples(std::size_t width, std::uint64_t cap) {
  if (width == 0) return 1;
  // sum_{l=0..cap} C(l+width-1, width-1), computed incrementally
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(width-1, width-1)
  for (std::uint64_t l = 0; l <= cap; ++l) {
    total += binom;
    binom = binom * (l + width) / (l + 1);  // C(l+width, width-1)
  }
  return total;
}

std::optional<BoundConstants> bound_constants(std::size_t d, std::uint32_t L,
                                              std::size_t steps,
                                              const RamseyOracle& oracle) {
  if (steps == 0) throw PreconditionError("constant recursion needs at least one step");
  BoundConstants out;
  out.d = d;
  out.L = L;
  out.K.assign(steps + 1, 0);
  out.M.assign(steps + 1, 0);
  out.N.assign(steps + 1, 0);
  auto k1 = oracle(d, 1, L);
  if (!k1) return std::nullopt;
  out.K[1] = *k1;
  out.N[1] = *k1;
  for (std::size_t i = 2; i <= steps; ++i) {
    // M_i counts (i-1)-tuples of sum at most K_{i-1}
    out.M[i] = count_bounded_tuples(i - 1, out.K[i - 1]);
    std::uint64_t chain_target = out.M[i] * (L - 1) + 1;
    auto ni = oracle(d, static_cast<std::uint32_t>(2 * out.K[i - 1]),
                     static_cast<std::uint32_t>(chain_target));
    if (!ni) return std::nullopt;
    out.N[i] = *ni;
    out.K[i] = 2 * out.K[i - 1] + out.N[i];
  }
  return out;
}

}  // namespace reestype
