#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ueb/basis_set.hpp"
#include "ueb/core.hpp"
#include "ueb/verify.hpp"

namespace ueb {

// q zero-one matrices of size p x q (p <= q) that sum to the all-ones matrix,
// each with exactly one 1 per row and at most one per column. These steer
// which block of the lifted matrix each inner matrix lands in.
struct PermutationDecomposition {
  int p = 0;
  int q = 0;
  std::vector<Eigen::MatrixXi> perms;

  void validate() const {
    if (p <= 0 || q <= 0 || p > q) throw std::invalid_argument("PermutationDecomposition: need 1 <= p <= q");
    if (static_cast<int>(perms.size()) != q)
      throw std::invalid_argument("PermutationDecomposition: expected q matrices");
    Eigen::MatrixXi sum = Eigen::MatrixXi::Zero(p, q);
    for (const auto& P : perms) {
      if (P.rows() != p || P.cols() != q)
        throw std::invalid_argument("PermutationDecomposition: matrix shape mismatch");
      for (int i = 0; i < p; ++i) {
        int row_ones = 0;
        for (int j = 0; j < q; ++j) {
          if (P(i, j) != 0 && P(i, j) != 1)
            throw std::invalid_argument("PermutationDecomposition: entries must be 0 or 1");
          row_ones += P(i, j);
        }
        if (row_ones != 1) throw std::invalid_argument("PermutationDecomposition: each row needs exactly one 1");
      }
      for (int j = 0; j < q; ++j) {
        int col_ones = 0;
        for (int i = 0; i < p; ++i) col_ones += P(i, j);
        if (col_ones > 1) throw std::invalid_argument("PermutationDecomposition: a column has two 1s");
      }
      sum += P;
    }
    if (!(sum.array() == 1).all())
      throw std::invalid_argument("PermutationDecomposition: matrices must sum to the all-ones matrix");
  }
};

// P_l(i, j) = 1 iff j = i + l (mod q); the canonical decomposition.
inline PermutationDecomposition cyclic_decomposition(int p, int q) {
  if (p <= 0 || q <= 0 || p > q) throw std::invalid_argument("cyclic_decomposition: need 1 <= p <= q");
  PermutationDecomposition D{p, q, {}};
  for (int l = 0; l < q; ++l) {
    Eigen::MatrixXi P = Eigen::MatrixXi::Zero(p, q);
    for (int i = 0; i < p; ++i) P(i, (i + l) % q) = 1;
    D.perms.push_back(std::move(P));
  }
  return D;
}

// Q_l^a: the l-th permutation matrix with its row-i entry multiplied by
// xi_p^{a*i}, xi_p = e^{2*pi*i/p}. The p phase variants of one permutation
// are Hilbert-Schmidt orthogonal.
inline Matrix phase_matrix(const PermutationDecomposition& D, int l, int a) {
  if (l < 0 || l >= D.q) throw std::invalid_argument("phase_matrix: l out of range");
  if (a < 0 || a >= D.p) throw std::invalid_argument("phase_matrix: a out of range");
  Matrix Q = Matrix::Zero(D.p, D.q);
  for (int i = 0; i < D.p; ++i)
    for (int j = 0; j < D.q; ++j)
      if (D.perms[l](i, j) == 1) Q(i, j) = root_of_unity(static_cast<long>(a) * i, D.p);
  return Q;
}

struct LiftOptions {
  int rank_trials = 8;
  std::uint64_t seed = 0;
  double tol = kRankTol;
  ExtensionSearchOptions search;
};

namespace detail {

inline Matrix block_kron(const Matrix& Q, const Matrix& M) {
  Matrix C = Matrix::Zero(Q.rows() * M.rows(), Q.cols() * M.cols());
  for (Eigen::Index i = 0; i < Q.rows(); ++i)
    for (Eigen::Index j = 0; j < Q.cols(); ++j)
      if (Q(i, j) != Complex(0.0)) C.block(i * M.rows(), j * M.cols(), M.rows(), M.cols()) = Q(i, j) * M;
  return C;
}

inline void check_lift_inputs(const BasisSet& inner, const BasisSet& filler, const PermutationDecomposition& D,
                              double tol) {
  D.validate();
  validate_shape(inner);
  validate_shape(filler);
  if (!is_unextendible_kind(inner.kind))
    throw std::invalid_argument("lift: inner set must be unextendible (USV1B or UMEB)");
  if (!is_complete_kind(filler.kind) || filler.count() != filler.space_dim())
    throw std::invalid_argument("lift: filler must be a complete basis");
  if (filler.d != inner.d || filler.dprime != inner.dprime || filler.k != inner.k)
    throw std::invalid_argument("lift: filler must match the inner set's space and Schmidt number");
  if (!verify_gram(inner, tol).ok || !verify_singular_profile(inner, tol).ok)
    throw std::invalid_argument("lift: inner set fails orthonormality or profile checks");
  if (!verify_gram(filler, tol).ok || !verify_singular_profile(filler, tol).ok)
    throw std::invalid_argument("lift: filler fails orthonormality or profile checks");
}

// Blocks ordered l ascending (inner block l = 0 first), then phase a, then
// member index.
inline BasisSet assemble_lift(const BasisSet& inner, const BasisSet& filler, const PermutationDecomposition& D) {
  BasisSet S;
  S.d = D.p * inner.d;
  S.dprime = D.q * inner.dprime;
  S.k = D.p * inner.k;
  S.matrices.reserve(static_cast<std::size_t>(D.p) *
                     (inner.matrices.size() + static_cast<std::size_t>(D.q - 1) * filler.matrices.size()));
  for (int l = 0; l < D.q; ++l)
    for (int a = 0; a < D.p; ++a) {
      const Matrix Q = phase_matrix(D, l, a);
      const auto& members = (l == 0) ? inner.matrices : filler.matrices;
      for (const Matrix& M : members) S.matrices.push_back(block_kron(Q, M));
    }
  return S;
}

inline void stamp_lift_provenance(BasisSet& S, const BasisSet& inner, const PermutationDecomposition& D,
                                  const char* mode) {
  S.provenance.construction = "lift";
  S.provenance.add("mode", mode);
  S.provenance.add("p", std::to_string(D.p));
  S.provenance.add("q", std::to_string(D.q));
  S.provenance.add("inner_construction", inner.provenance.construction);
  S.provenance.add("inner_count", std::to_string(inner.count()));
  S.provenance.add("inner_k", std::to_string(inner.k));
  S.provenance.add("inner_d", std::to_string(inner.d));
  S.provenance.add("inner_dprime", std::to_string(inner.dprime));
}

}  // namespace detail

// Lifts an unextendible set in C^d (x) C^{d'} with a rank-deficient
// complement to one in C^{pd} (x) C^{qd'} with Schmidt number p*k: the inner
// set rides in the l = 0 diagonal blocks, the filler basis saturates every
// off-diagonal block, and phases keep everything orthogonal. Output count is
// p*q*d*d' - p*(d*d' - N). The inner set must carry a certificate bounding
// its complement rank below k (PatternBound or ComplementRankDeficient);
// that bound is what makes the lifted set unextendible.
inline BasisSet lift_suebk(const BasisSet& inner, const BasisSet& filler, const PermutationDecomposition& D,
                           const LiftOptions& opt = {}) {
  detail::check_lift_inputs(inner, filler, D, opt.tol);
  bool bounded = false;
  if (inner.certificate) {
    if (const auto* pb = std::get_if<PatternBound>(&inner.certificate->detail)) bounded = pb->matching < inner.k;
    if (const auto* rd = std::get_if<ComplementRankDeficient>(&inner.certificate->detail))
      bounded = rd->max_rank < inner.k;
  }
  if (!bounded)
    throw std::invalid_argument("lift_suebk: inner set needs a certificate bounding its complement rank below k");

  BasisSet S = detail::assemble_lift(inner, filler, D);
  S.kind = (S.k == S.d) ? BasisKind::UMEB : BasisKind::USV1B;

  const std::vector<Matrix> comp = complement_basis(S.matrices, S.d, S.dprime, opt.tol);
  const int rank = generic_max_rank(comp, opt.rank_trials, opt.seed, opt.tol);
  if (rank >= S.k)
    throw std::runtime_error("lift_suebk: lifted complement reached rank k; inner certificate was not honest");
  Certificate cert;
  cert.detail = ComplementRankDeficient{rank, opt.rank_trials, opt.seed};
  cert.tolerance = opt.tol;
  S.certificate = cert;

  detail::stamp_lift_provenance(S, inner, D, "suebk");
  validate_shape(S);
  return S;
}

// Same construction for an inner UMEB (k = d). No complement-rank
// certificate is needed: an extension of the lift would restrict to an
// extension of the inner UMEB, so unextendibility is inherited. The
// certificate on the output is recomputed from scratch; when the lifted
// complement is not rank-deficient (typical for partial-Hadamard inners)
// a seeded extension search over the block-diagonal support stands in.
inline BasisSet lift_umeb(const BasisSet& inner, const BasisSet& filler, const PermutationDecomposition& D,
                          const LiftOptions& opt = {}) {
  if (inner.kind != BasisKind::UMEB)
    throw std::invalid_argument("lift_umeb: inner set must be a UMEB");
  if (inner.k != inner.d) throw std::invalid_argument("lift_umeb: a UMEB needs k == d");
  detail::check_lift_inputs(inner, filler, D, opt.tol);

  BasisSet S = detail::assemble_lift(inner, filler, D);
  S.kind = BasisKind::UMEB;

  const std::vector<Matrix> comp = complement_basis(S.matrices, S.d, S.dprime, opt.tol);
  CertifyOptions copt;
  copt.rank_trials = opt.rank_trials;
  copt.seed = opt.seed;
  copt.search = opt.search;
  Certificate cert;
  cert.tolerance = opt.tol;
  const int rank = generic_max_rank(comp, opt.rank_trials, opt.seed, opt.tol);
  if (rank < S.k) {
    cert.detail = ComplementRankDeficient{rank, opt.rank_trials, opt.seed};
  } else if (auto diag = detail::try_diagonal_search(S, comp, opt.tol, copt)) {
    if (diag->counterexample)
      throw std::invalid_argument("lift_umeb: found an extension of the lifted set; the inner set is extendible");
    cert = *diag;
  } else {
    cert.detail = Inconclusive{"unextendibility inherited from the inner UMEB; no direct certificate derived"};
  }
  S.certificate = cert;

  detail::stamp_lift_provenance(S, inner, D, "umeb");
  validate_shape(S);
  return S;
}

}  // namespace ueb
