#include "qsc/linalg.hpp"

#include <utility>

namespace qsc {

std::size_t bareiss_rank(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  LaurentPoly prev(1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const LaurentPoly p = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const LaurentPoly f = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        LaurentPoly t = p * m[i][j] - f * m[rank][j];
        m[i][j] = *t.divide(prev);
      }
      m[i][c] = LaurentPoly();
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t mod_rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t s = modp::inv(m[rank][c], p);
    for (std::size_t j = c; j < cols; ++j) m[rank][j] = modp::mul(m[rank][j], s, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t f = m[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = modp::sub(m[i][j], modp::mul(f, m[rank][j], p), p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace qsc
