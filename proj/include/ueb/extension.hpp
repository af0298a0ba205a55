#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "ueb/core.hpp"

namespace ueb {

// Outcome of searching for a unimodular vector orthogonal to a given row
// system. ExtensionFound carries the witness; NoExtensionFound carries the
// best residual seen. heuristic is true when a failed search does not prove
// nonexistence (it is false only when the rows already span the full space,
// where nonexistence is exact linear algebra).
struct ExtensionVerdict {
  enum class Kind { ExtensionFound, NoExtensionFound };
  Kind kind = Kind::NoExtensionFound;
  Vector row;
  double best_residual = std::numeric_limits<double>::infinity();
  int attempts = 0;
  bool heuristic = true;

  bool found() const { return kind == Kind::ExtensionFound; }
};

struct ExtensionSearchOptions {
  int attempts = 200;
  int iterations = 1000;
  double tol = 1e-8;
  std::uint64_t seed = 0;
};

namespace detail {

// max_y |<h_y, g>| / ||h_y|| over the rows h_y of H, with <a,b> = a^dag b.
inline double row_orthogonality_residual(const Matrix& H, const Vector& g) {
  double worst = 0.0;
  for (Eigen::Index y = 0; y < H.rows(); ++y) {
    const double nrm = H.row(y).norm();
    if (nrm <= 0.0) continue;
    // Eigen's dot conjugates its left operand, giving <h_y, g>.
    worst = std::max(worst, std::abs(H.row(y).dot(g)) / nrm);
  }
  return worst;
}

inline void unimodularize(Vector& g) {
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    const double m = std::abs(g(i));
    g(i) = m > 1e-14 ? g(i) / m : Complex(1.0, 0.0);
  }
}

}  // namespace detail

// Searches for a unimodular vector g in C^n with <h_y, g> = 0 for every row
// h_y of H (n = H.cols()). Alternating projection: project g onto the null
// space of the row system, then renormalize each entry to the unit circle;
// multistart with seeded random phases. When the rows span C^n the answer is
// exact and no search runs.
inline ExtensionVerdict find_unimodular_orthogonal(const Matrix& H, const ExtensionSearchOptions& opt = {}) {
  const Eigen::Index n = H.cols();
  if (n <= 0) throw std::invalid_argument("find_unimodular_orthogonal: empty row system");
  ExtensionVerdict verdict;

  if (H.rows() == 0) {
    verdict.kind = ExtensionVerdict::Kind::ExtensionFound;
    verdict.row = Vector::Ones(n);
    verdict.best_residual = 0.0;
    verdict.heuristic = false;
    return verdict;
  }

  // Null space of the constraint map g -> (<h_y, g>)_y.
  Eigen::JacobiSVD<Matrix> svd(H.conjugate(), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double rank_cut = std::max(1.0, sv.size() > 0 ? sv(0) : 0.0) * 1e-12;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_cut) ++rank;
  if (rank >= n) {
    verdict.kind = ExtensionVerdict::Kind::NoExtensionFound;
    verdict.best_residual = std::numeric_limits<double>::infinity();
    verdict.attempts = 0;
    verdict.heuristic = false;
    return verdict;
  }
  const Matrix W = svd.matrixV().rightCols(n - rank);

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  double best = std::numeric_limits<double>::infinity();

  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    Vector g(n);
    for (Eigen::Index i = 0; i < n; ++i) g(i) = std::polar(1.0, angle(rng));
    double res = detail::row_orthogonality_residual(H, g);
    for (int it = 0; it < opt.iterations; ++it) {
      g = W * (W.adjoint() * g);
      detail::unimodularize(g);
      res = detail::row_orthogonality_residual(H, g);
      if (res < opt.tol) break;
    }
    if (res < opt.tol) {
      // Polish the witness toward the fixed point before reporting it.
      for (int it = 0; it < 500 && res > 1e-15; ++it) {
        g = W * (W.adjoint() * g);
        detail::unimodularize(g);
        const double next = detail::row_orthogonality_residual(H, g);
        if (next >= res) break;
        res = next;
      }
      verdict.kind = ExtensionVerdict::Kind::ExtensionFound;
      verdict.row = g;
      verdict.best_residual = res;
      verdict.attempts = attempt + 1;
      verdict.heuristic = false;
      return verdict;
    }
    best = std::min(best, res);
  }

  verdict.kind = ExtensionVerdict::Kind::NoExtensionFound;
  verdict.best_residual = best;
  verdict.attempts = opt.attempts;
  verdict.heuristic = true;
  return verdict;
}

}  // namespace ueb
