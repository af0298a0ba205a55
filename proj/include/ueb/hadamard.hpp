#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "ueb/basis_set.hpp"
#include "ueb/core.hpp"
#include "ueb/extension.hpp"

namespace ueb {

// m rows of a would-be d x d complex Hadamard matrix: unimodular entries,
// pairwise row inner products d*delta.
struct PartialHadamard {
  int m = 0;
  int d = 0;
  Matrix entries;
  std::string label = "custom";

  double max_modulus_deviation() const {
    double worst = 0.0;
    for (int y = 0; y < m; ++y)
      for (int x = 0; x < d; ++x) worst = std::max(worst, std::abs(std::abs(entries(y, x)) - 1.0));
    return worst;
  }

  double max_orthogonality_deviation() const {
    const Matrix gram = entries * entries.adjoint();
    const Matrix target = Matrix::Identity(m, m) * static_cast<double>(d);
    return (gram - target).cwiseAbs().maxCoeff();
  }

  void validate(double modulus_tol = 1e-10, double orthogonality_tol = kRankTol) const {
    if (m <= 0 || d <= 0 || m > d) throw std::invalid_argument("PartialHadamard: need 1 <= m <= d");
    if (entries.rows() != m || entries.cols() != d)
      throw std::invalid_argument("PartialHadamard: entry matrix shape mismatch");
    if (max_modulus_deviation() > modulus_tol)
      throw std::invalid_argument("PartialHadamard: entries must be unimodular");
    if (max_orthogonality_deviation() > orthogonality_tol)
      throw std::invalid_argument("PartialHadamard: rows must be orthogonal with norm sqrt(d)");
  }
};

// First m rows of the d x d Fourier matrix. Always extendible (the remaining
// Fourier rows extend it), so it doubles as a negative control.
inline PartialHadamard fourier_partial_hadamard(int m, int d) {
  if (m <= 0 || d <= 0 || m > d) throw std::invalid_argument("fourier_partial_hadamard: need 1 <= m <= d");
  PartialHadamard H{m, d, Matrix(m, d), "fourier"};
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < d; ++x) H.entries(y, x) = root_of_unity(static_cast<long>(y) * x, d);
  return H;
}

// A 3 x 5 partial Hadamard whose rows admit no fourth orthogonal unimodular
// row. Entries in the third row mix sqrt(5), sqrt(6) and cube roots of unity.
inline PartialHadamard builtin_h3x5() {
  const Complex i(0.0, 1.0);
  const Complex w = root_of_unity(1, 3);
  const double s5 = std::sqrt(5.0);
  const double s6 = std::sqrt(6.0);
  PartialHadamard H{3, 5, Matrix(3, 5), "builtin:h3x5"};
  H.entries.row(0) << 1.0, 1.0, 1.0, 1.0, 1.0;
  H.entries.row(1) << 1.0, -1.0, 1.0, w, w * w;
  H.entries.row(2) << (s5 + i) / s6, i, (-s5 + i) / s6, (s6 * w * w * i + (w - 1.0) * i) / 3.0,
      (s6 * w * i + (w * w - 1.0) * i) / 3.0;
  return H;
}

// Searches for a row extending H to an (m+1) x d partial Hadamard. When
// m == d no search is needed: the rows already span C^d and the verdict is
// exact (NoExtensionFound with infinite residual, heuristic flag off).
inline ExtensionVerdict check_extension(const PartialHadamard& H, const ExtensionSearchOptions& opt = {}) {
  H.validate();
  return find_unimodular_orthogonal(H.entries, opt);
}

// UMEB in C^d (x) C^{d'} from an inextensible m x d partial Hadamard:
// d(d'-1) matrices of Fourier phases on the shifted diagonals l = 1..d'-1,
// plus the m rows of H placed on the main diagonal. Anything orthogonal to
// the set is a diagonal matrix whose diagonal is orthogonal to the rows of H,
// so an extension would be exactly a new Hadamard row; the (heuristic)
// absence of one ships as the certificate. Throws std::invalid_argument if
// the search does find an extension. With m == d the result is a complete
// maximally entangled basis.
inline BasisSet build_umeb_from_hadamard(const PartialHadamard& H, int dprime,
                                         const ExtensionSearchOptions& opt = {}) {
  H.validate();
  const int d = H.d;
  if (dprime < d) throw std::invalid_argument("build_umeb_from_hadamard: need dprime >= d");

  BasisSet S;
  S.d = d;
  S.dprime = dprime;
  S.k = d;
  S.kind = (H.m == d) ? BasisKind::MEB : BasisKind::UMEB;
  S.matrices.reserve(static_cast<std::size_t>(d) * (dprime - 1) + H.m);
  for (int l = 1; l < dprime; ++l)
    for (int a = 0; a < d; ++a) {
      Matrix A = Matrix::Zero(d, dprime);
      for (int x = 0; x < d; ++x) A(x, (x + l) % dprime) = root_of_unity(static_cast<long>(a) * x, d);
      S.matrices.push_back(std::move(A));
    }
  for (int y = 0; y < H.m; ++y) {
    Matrix B = Matrix::Zero(d, dprime);
    for (int x = 0; x < d; ++x) B(x, x) = H.entries(y, x);
    S.matrices.push_back(std::move(B));
  }

  if (H.m < d) {
    const ExtensionVerdict verdict = check_extension(H, opt);
    if (verdict.found())
      throw std::invalid_argument(
          "build_umeb_from_hadamard: the rows extend to a larger partial Hadamard; the set would be extendible");
    Certificate cert;
    cert.detail = HadamardNoExtension{verdict};
    cert.tolerance = kRankTol;
    S.certificate = cert;
  }

  S.provenance.construction = "hadamard";
  S.provenance.add("m", std::to_string(H.m));
  S.provenance.add("d", std::to_string(d));
  S.provenance.add("dprime", std::to_string(dprime));
  S.provenance.add("matrix", H.label);
  S.provenance.seed = opt.seed;

  validate_shape(S);
  return S;
}

}  // namespace ueb
