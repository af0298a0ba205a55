#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ueb/core.hpp"

namespace ueb {

// Zero pattern on a rows x cols grid: mask(r,c) == 1 marks a cell where a
// matrix in the patterned subspace may be nonzero.
struct SupportPattern {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> mask;

  SupportPattern() = default;
  SupportPattern(int r, int c, bool fill = false)
      : rows(r), cols(c), mask(static_cast<std::size_t>(r) * c, fill ? 1 : 0) {
    if (r <= 0 || c <= 0) throw std::invalid_argument("SupportPattern: dimensions must be positive");
  }

  bool at(int r, int c) const { return mask[static_cast<std::size_t>(r) * cols + c] != 0; }
  void set(int r, int c, bool value) { mask[static_cast<std::size_t>(r) * cols + c] = value ? 1 : 0; }

  int count() const {
    int n = 0;
    for (auto b : mask) n += b != 0;
    return n;
  }

  SupportPattern complement() const {
    SupportPattern out(rows, cols);
    for (std::size_t i = 0; i < mask.size(); ++i) out.mask[i] = mask[i] ? 0 : 1;
    return out;
  }

  bool operator==(const SupportPattern& other) const = default;
};

// Union of the entrywise supports of a list of matrices, thresholded at tol.
inline SupportPattern support_union(const std::vector<Matrix>& mats, int rows, int cols, double tol = kRankTol) {
  SupportPattern p(rows, cols);
  for (const Matrix& A : mats) {
    if (A.rows() != rows || A.cols() != cols)
      throw std::invalid_argument("support_union: matrix shape mismatch");
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (std::abs(A(r, c)) > tol) p.set(r, c, true);
  }
  return p;
}

// Largest rank any matrix supported on the pattern can have: the maximum
// bipartite matching between rows and columns through the allowed cells.
// Standard augmenting-path search, O(V*E); patterns here are tiny.
inline int pattern_max_rank(const SupportPattern& p) {
  std::vector<int> match_col(p.cols, -1);
  std::vector<char> seen(p.cols, 0);
  auto try_row = [&](auto&& self, int r) -> bool {
    for (int c = 0; c < p.cols; ++c) {
      if (!p.at(r, c) || seen[c]) continue;
      seen[c] = 1;
      if (match_col[c] < 0 || self(self, match_col[c])) {
        match_col[c] = r;
        return true;
      }
    }
    return false;
  };
  int matching = 0;
  for (int r = 0; r < p.rows; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    if (try_row(try_row, r)) ++matching;
  }
  return matching;
}

}  // namespace ueb
