#pragma once

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ueb/basis_set.hpp"
#include "ueb/core.hpp"

namespace ueb {

// Tiling of a rows x cols grid by generalized diagonals of length k: each
// diagonal touches k pairwise-distinct rows and k pairwise-distinct columns,
// and every cell lies on exactly one diagonal.
struct DiagonalPartition {
  int rows = 0;
  int cols = 0;
  int k = 0;
  std::vector<std::vector<std::pair<int, int>>> diagonals;

  void validate() const {
    if (rows <= 0 || cols <= 0 || k <= 0) throw std::invalid_argument("DiagonalPartition: bad dimensions");
    std::vector<char> covered(static_cast<std::size_t>(rows) * cols, 0);
    for (const auto& diag : diagonals) {
      if (static_cast<int>(diag.size()) != k)
        throw std::invalid_argument("DiagonalPartition: diagonal length differs from k");
      std::vector<char> row_used(rows, 0), col_used(cols, 0);
      for (auto [r, c] : diag) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
          throw std::invalid_argument("DiagonalPartition: cell out of range");
        if (row_used[r]++ || col_used[c]++)
          throw std::invalid_argument("DiagonalPartition: repeated row or column within a diagonal");
        if (covered[static_cast<std::size_t>(r) * cols + c]++)
          throw std::invalid_argument("DiagonalPartition: cell covered twice");
      }
    }
    if (static_cast<long>(diagonals.size()) * k != static_cast<long>(rows) * cols)
      throw std::invalid_argument("DiagonalPartition: diagonals do not tile the grid");
  }
};

// Thrown when the partition search exhausts its budget. Deliberately distinct
// from std::invalid_argument: it means "not found", not "does not exist".
class PartitionNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Bands of k consecutive rows, each band tiled by its cyclic diagonals.
inline DiagonalPartition band_partition(int rows, int cols, int k) {
  DiagonalPartition P{rows, cols, k, {}};
  for (int b = 0; b < rows / k; ++b)
    for (int t = 0; t < cols; ++t) {
      std::vector<std::pair<int, int>> diag;
      diag.reserve(k);
      for (int x = 0; x < k; ++x) diag.emplace_back(b * k + x, (t + x) % cols);
      P.diagonals.push_back(std::move(diag));
    }
  return P;
}

// Walk the wrapped diagonals of the grid end to end and cut the walk into
// chunks of k cells. Requires rows <= cols and k < rows; each chunk then has
// k consecutive row indices mod rows (distinct) and its column indices split
// into at most two short consecutive runs that cannot meet.
inline DiagonalPartition snake_partition(int rows, int cols, int k) {
  DiagonalPartition P{rows, cols, k, {}};
  std::vector<std::pair<int, int>> walk;
  walk.reserve(static_cast<std::size_t>(rows) * cols);
  for (int t = 0; t < cols; ++t)
    for (int x = 0; x < rows; ++x) walk.emplace_back(x, (t + x) % cols);
  for (std::size_t at = 0; at + k <= walk.size(); at += k)
    P.diagonals.emplace_back(walk.begin() + at, walk.begin() + at + k);
  return P;
}

inline DiagonalPartition transpose_partition(const DiagonalPartition& P) {
  DiagonalPartition Q{P.cols, P.rows, P.k, P.diagonals};
  for (auto& diag : Q.diagonals)
    for (auto& [r, c] : diag) std::swap(r, c);
  return Q;
}

// Exact-cover backtracking over lexicographically ordered cells, with a node
// budget. Only reached for inputs the closed-form schemes do not cover.
struct PartitionSearch {
  int rows, cols, k;
  long budget = 200000;
  std::vector<char> cell_used, row_used, col_used;
  std::vector<std::vector<std::pair<int, int>>> acc;

  bool extend_diagonal(std::vector<std::pair<int, int>>& diag, int from) {
    if (static_cast<int>(diag.size()) == k) {
      acc.push_back(diag);
      if (solve()) return true;
      acc.pop_back();
      return false;
    }
    for (int idx = from; idx < rows * cols; ++idx) {
      if (--budget < 0) throw PartitionNotFound("partition not found: search budget exhausted");
      const int r = idx / cols, c = idx % cols;
      if (cell_used[idx] || row_used[r] || col_used[c]) continue;
      cell_used[idx] = row_used[r] = col_used[c] = 1;
      diag.emplace_back(r, c);
      if (extend_diagonal(diag, idx + 1)) return true;
      diag.pop_back();
      cell_used[idx] = row_used[r] = col_used[c] = 0;
    }
    return false;
  }

  bool solve() {
    int first = 0;
    while (first < rows * cols && cell_used[first]) ++first;
    if (first == rows * cols) return true;
    std::fill(row_used.begin(), row_used.end(), 0);
    std::fill(col_used.begin(), col_used.end(), 0);
    const int r = first / cols, c = first % cols;
    cell_used[first] = row_used[r] = col_used[c] = 1;
    std::vector<std::pair<int, int>> diag{{r, c}};
    if (extend_diagonal(diag, first + 1)) return true;
    cell_used[first] = 0;
    return false;
  }
};

}  // namespace detail

// Builds a diagonal partition of the rows x cols grid with diagonal length k.
// Closed-form band/snake schemes cover every k dividing rows*cols; a bounded
// backtracking search backs them up and throws PartitionNotFound when its
// budget runs out.
inline DiagonalPartition diagonal_partition(int rows, int cols, int k) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("diagonal_partition: dimensions must be positive");
  if (k <= 0 || k > std::min(rows, cols))
    throw std::invalid_argument("diagonal_partition: need 1 <= k <= min(rows, cols)");
  if ((static_cast<long>(rows) * cols) % k != 0)
    throw std::invalid_argument("diagonal_partition: k must divide rows*cols");

  if (rows % k == 0) return detail::band_partition(rows, cols, k);
  if (cols % k == 0) return detail::transpose_partition(detail::band_partition(cols, rows, k));

  const bool flip = rows > cols;
  DiagonalPartition P = flip ? detail::transpose_partition(detail::snake_partition(cols, rows, k))
                             : detail::snake_partition(rows, cols, k);
  try {
    P.validate();
    return P;
  } catch (const std::invalid_argument&) {
    // fall through to the exact search
  }

  detail::PartitionSearch search{rows, cols, k};
  search.cell_used.assign(static_cast<std::size_t>(rows) * cols, 0);
  search.row_used.assign(rows, 0);
  search.col_used.assign(cols, 0);
  if (search.solve()) {
    DiagonalPartition Q{rows, cols, k, std::move(search.acc)};
    Q.validate();
    return Q;
  }
  throw PartitionNotFound("partition not found: search space exhausted");
}

// Rows of a k x k complex Hadamard matrix: unimodular entries with
// pairwise row inner products k*delta_ab.
struct PhaseSystem {
  int k = 0;
  Matrix rows;
  std::string label = "custom";

  double max_deviation() const {
    double worst = 0.0;
    for (int a = 0; a < k; ++a)
      for (int m = 0; m < k; ++m) worst = std::max(worst, std::abs(std::abs(rows(a, m)) - 1.0));
    const Matrix gram = rows * rows.adjoint();
    const Matrix target = Matrix::Identity(k, k) * static_cast<double>(k);
    worst = std::max(worst, (gram - target).cwiseAbs().maxCoeff());
    return worst;
  }

  void validate(double tol = kAlgebraTol) const {
    if (k <= 0 || rows.rows() != k || rows.cols() != k)
      throw std::invalid_argument("PhaseSystem: need a k x k matrix");
    if (max_deviation() > tol) throw std::invalid_argument("PhaseSystem: rows are not complex Hadamard");
  }
};

// omega_k^{a*m} with omega_k = e^{2*pi*i/k}; exact at quarter turns.
inline PhaseSystem fourier_phases(int k) {
  if (k <= 0) throw std::invalid_argument("fourier_phases: k must be positive");
  PhaseSystem ph{k, Matrix(k, k), "fourier"};
  for (int a = 0; a < k; ++a)
    for (int m = 0; m < k; ++m) ph.rows(a, m) = root_of_unity(static_cast<long>(a) * m, k);
  return ph;
}

// n-fold tensor power of the 2x2 Hadamard matrix: entries (-1)^{popcount(a&m)},
// defined when k is a power of two. All-real alternative to fourier_phases.
inline PhaseSystem tensor_hadamard_phases(int k) {
  if (k <= 0 || !std::has_single_bit(static_cast<unsigned>(k)))
    throw std::invalid_argument("tensor_hadamard_phases: k must be a power of 2");
  PhaseSystem ph{k, Matrix(k, k), "tensor-hadamard"};
  for (int a = 0; a < k; ++a)
    for (int m = 0; m < k; ++m)
      ph.rows(a, m) = (std::popcount(static_cast<unsigned>(a & m)) % 2 == 0) ? 1.0 : -1.0;
  return ph;
}

// Complete basis of rows*cols matrices with k singular values 1: one matrix
// per (phase row, diagonal) pair, placing the a-th phase row along each
// diagonal. Output order is phase row major, diagonal minor.
inline BasisSet build_sv1bk(const DiagonalPartition& P, const PhaseSystem& phases) {
  P.validate();
  phases.validate();
  if (phases.k != P.k) throw std::invalid_argument("build_sv1bk: phase system size differs from diagonal length");
  BasisSet S;
  S.d = P.rows;
  S.dprime = P.cols;
  S.k = P.k;
  S.kind = (P.k == P.rows && P.rows == P.cols) ? BasisKind::MEB : BasisKind::SV1B;
  S.provenance.construction = "sebk";
  S.provenance.add("rows", std::to_string(P.rows));
  S.provenance.add("cols", std::to_string(P.cols));
  S.provenance.add("k", std::to_string(P.k));
  S.provenance.add("phases", phases.label);
  S.matrices.reserve(static_cast<std::size_t>(P.rows) * P.cols);
  for (int a = 0; a < P.k; ++a)
    for (const auto& diag : P.diagonals) {
      Matrix A = Matrix::Zero(P.rows, P.cols);
      for (int x = 0; x < P.k; ++x) A(diag[x].first, diag[x].second) = phases.rows(a, x);
      S.matrices.push_back(std::move(A));
    }
  return S;
}

}  // namespace ueb
