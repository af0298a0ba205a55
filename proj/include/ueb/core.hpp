#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace ueb {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Decision tolerances used throughout. Rank and orthogonality tests compare
// against kRankTol; exact algebraic identities are checked at kAlgebraTol.
inline constexpr double kRankTol = 1e-9;
inline constexpr double kAlgebraTol = 1e-12;

// e^{2*pi*i*num/den}, exact for quarter turns so that +-1 and +-i come out
// with zero imaginary/real parts.
inline Complex root_of_unity(long num, long den) {
  if (den <= 0) throw std::invalid_argument("root_of_unity: den must be positive");
  num %= den;
  if (num < 0) num += den;
  if (num == 0) return {1.0, 0.0};
  if (4 * num == den) return {0.0, 1.0};
  if (2 * num == den) return {-1.0, 0.0};
  if (4 * num == 3 * den) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den));
}

// A pure state of C^d (x) C^{d'} stored as the coefficient vector of the
// product basis |i>|j>, flattened as i*dprime + j.
struct BipartiteState {
  int d = 0;
  int dprime = 0;
  Vector amplitudes;
};

// Singular values of the coefficient matrix, descending, plus the number of
// them that clear the tolerance (the Schmidt number of the state).
struct SchmidtProfile {
  Eigen::VectorXd singular_values;
  int schmidt_number = 0;
};

inline Matrix matrix_from_state(const BipartiteState& psi) {
  if (psi.d <= 0 || psi.dprime <= 0)
    throw std::invalid_argument("matrix_from_state: dimensions must be positive");
  if (psi.amplitudes.size() != static_cast<Eigen::Index>(psi.d) * psi.dprime)
    throw std::invalid_argument("matrix_from_state: amplitude length does not match d*dprime");
  Matrix A(psi.d, psi.dprime);
  for (int i = 0; i < psi.d; ++i)
    for (int j = 0; j < psi.dprime; ++j) A(i, j) = psi.amplitudes(static_cast<Eigen::Index>(i) * psi.dprime + j);
  return A;
}

inline BipartiteState state_from_matrix(const Matrix& A) {
  BipartiteState psi;
  psi.d = static_cast<int>(A.rows());
  psi.dprime = static_cast<int>(A.cols());
  psi.amplitudes.resize(A.size());
  for (int i = 0; i < psi.d; ++i)
    for (int j = 0; j < psi.dprime; ++j) psi.amplitudes(static_cast<Eigen::Index>(i) * psi.dprime + j) = A(i, j);
  return psi;
}

// Hilbert-Schmidt inner product Tr(A^dag B), conjugate-linear in A.
inline Complex hs_inner(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw std::invalid_argument("hs_inner: shape mismatch");
  return (A.adjoint() * B).trace();
}

inline SchmidtProfile schmidt_profile(const Matrix& A, double tol = kRankTol) {
  Eigen::JacobiSVD<Matrix> svd(A);
  SchmidtProfile p;
  p.singular_values = svd.singularValues();
  p.schmidt_number = 0;
  for (Eigen::Index i = 0; i < p.singular_values.size(); ++i)
    if (p.singular_values(i) > tol) ++p.schmidt_number;
  return p;
}

namespace detail {

inline Vector vectorize(const Matrix& A) {
  return Eigen::Map<const Vector>(A.data(), A.size());
}

inline Matrix unvectorize(const Vector& v, int rows, int cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

// Two-pass modified Gram-Schmidt projection, enough to hold orthogonality
// near machine precision for the sizes this library works at.
inline void project_out(Vector& v, const std::vector<Vector>& basis) {
  for (int pass = 0; pass < 2; ++pass)
    for (const Vector& q : basis) v -= q * q.dot(v);
}

}  // namespace detail

// Orthonormal basis of the orthogonal complement of span(spanning) inside the
// rows x cols matrix space. The complement is built by sweeping the coordinate
// matrices E_{u,v} in lexicographic (u,v) order and keeping each residual that
// survives projection, so the output is deterministic. Throws if the spanning
// list is linearly dependent or has mismatched shapes.
inline std::vector<Matrix> complement_basis(const std::vector<Matrix>& spanning, int rows, int cols,
                                            double tol = kRankTol) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("complement_basis: dimensions must be positive");
  const Eigen::Index dim = static_cast<Eigen::Index>(rows) * cols;
  std::vector<Vector> ortho;
  ortho.reserve(spanning.size());
  for (const Matrix& A : spanning) {
    if (A.rows() != rows || A.cols() != cols)
      throw std::invalid_argument("complement_basis: matrix shape mismatch");
    Vector v = detail::vectorize(A);
    const double scale = std::max(1.0, v.norm());
    detail::project_out(v, ortho);
    if (v.norm() <= tol * scale)
      throw std::invalid_argument("complement_basis: spanning set is linearly dependent");
    ortho.push_back(v.normalized());
  }
  std::vector<Matrix> comp;
  std::vector<Vector> comp_vecs;
  for (int u = 0; u < rows; ++u) {
    for (int v = 0; v < cols; ++v) {
      Vector e = Vector::Zero(dim);
      e(static_cast<Eigen::Index>(v) * rows + u) = 1.0;  // E_{u,v} in column-major layout
      detail::project_out(e, ortho);
      detail::project_out(e, comp_vecs);
      if (e.norm() > tol) {
        comp_vecs.push_back(e.normalized());
        comp.push_back(detail::unvectorize(comp_vecs.back(), rows, cols));
      }
    }
  }
  return comp;
}

}  // namespace ueb
