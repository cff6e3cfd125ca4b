#include "reestype/gf_linalg.hpp"

namespace reestype {

std::optional<std::vector<std::uint32_t>> gf_solve(
    std::vector<std::vector<std::uint32_t>> A, std::vector<std::uint32_t> b,
    const PrimeField& F) {
  std::size_t rows = A.size();
  std::size_t cols = rows == 0 ? 0 : A[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && A[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(A[pr], A[r]);
    std::swap(b[pr], b[r]);
    std::uint32_t inv = F.inv(A[r][c]);
    for (std::size_t k = c; k < cols; ++k) A[r][k] = F.mul(A[r][k], inv);
    b[r] = F.mul(b[r], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      std::uint32_t f = A[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        A[i][k] = F.sub(A[i][k], F.mul(f, A[r][k]));
      }
      b[i] = F.sub(b[i], F.mul(f, b[r]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<std::uint32_t> x(cols, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace reestype
