#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ueb/basis_set.hpp"
#include "ueb/pattern.hpp"
#include "ueb/sebk.hpp"

namespace ueb {

// The four zero-pattern families. Each one carves a top-left star block out
// of the d x d' grid and fills it with a complete basis of length-k diagonal
// states; the leftover cells form an L-shaped (or single-strip) pattern whose
// matching number stays below k.
//   C1: k | d,  drop i right columns             (i in 1..k-1, d'-i >= k)
//   C2: d = s*k + r with 0 < r < k, star is the top s*k rows minus t right
//       columns                                  (t in 0..k-r-1, d'-t >= k)
//   C3: k | d', drop i bottom rows               (i in 1..k-1, d-i >= k)
//   C4: d' = s*k + r with 0 < r < k, star is the left s*k columns minus t
//       bottom rows                              (t in 0..k-r-1, d-t >= k)
enum class Sec3Case { C1, C2, C3, C4 };

inline const char* to_string(Sec3Case c) {
  switch (c) {
    case Sec3Case::C1: return "C1";
    case Sec3Case::C2: return "C2";
    case Sec3Case::C3: return "C3";
    case Sec3Case::C4: return "C4";
  }
  throw std::logic_error("to_string(Sec3Case): bad value");
}

inline Sec3Case sec3_case_from_string(const std::string& s) {
  if (s == "C1") return Sec3Case::C1;
  if (s == "C2") return Sec3Case::C2;
  if (s == "C3") return Sec3Case::C3;
  if (s == "C4") return Sec3Case::C4;
  throw std::invalid_argument("unknown case: " + s + " (expected C1, C2, C3 or C4)");
}

struct Sec3Plan {
  int k = 0;
  int d = 0;
  int dprime = 0;
  Sec3Case kase = Sec3Case::C1;
  int param = 0;  // i for C1/C3, t for C2/C4
  int star_rows = 0;
  int star_cols = 0;
  SupportPattern star_pattern;
  SupportPattern complement_pattern;
  long expected_count = 0;
};

namespace detail {

inline Sec3Plan finish_plan(Sec3Plan plan) {
  plan.star_pattern = SupportPattern(plan.d, plan.dprime);
  for (int r = 0; r < plan.star_rows; ++r)
    for (int c = 0; c < plan.star_cols; ++c) plan.star_pattern.set(r, c, true);
  plan.complement_pattern = plan.star_pattern.complement();
  plan.expected_count = static_cast<long>(plan.star_rows) * plan.star_cols;
  return plan;
}

}  // namespace detail

// Builds and validates a single plan. Throws std::invalid_argument when the
// case does not apply to (k, d, dprime) or the parameter is out of range.
inline Sec3Plan make_sec3_plan(int k, int d, int dprime, Sec3Case kase, int param) {
  if (!(2 <= k && k <= d && d <= dprime))
    throw std::invalid_argument("make_sec3_plan: need 2 <= k <= d <= dprime");
  Sec3Plan plan;
  plan.k = k;
  plan.d = d;
  plan.dprime = dprime;
  plan.kase = kase;
  plan.param = param;
  switch (kase) {
    case Sec3Case::C1: {
      if (d % k != 0) throw std::invalid_argument("make_sec3_plan: C1 requires k | d");
      if (param < 1 || param > k - 1 || dprime - param < k)
        throw std::invalid_argument("make_sec3_plan: C1 requires 1 <= i <= k-1 and dprime-i >= k");
      plan.star_rows = d;
      plan.star_cols = dprime - param;
      break;
    }
    case Sec3Case::C2: {
      const int r = d % k;
      if (r == 0) throw std::invalid_argument("make_sec3_plan: C2 requires k to not divide d");
      if (param < 0 || param > k - r - 1 || dprime - param < k)
        throw std::invalid_argument("make_sec3_plan: C2 requires 0 <= t <= k-r-1 and dprime-t >= k");
      plan.star_rows = d - r;
      plan.star_cols = dprime - param;
      break;
    }
    case Sec3Case::C3: {
      if (dprime % k != 0) throw std::invalid_argument("make_sec3_plan: C3 requires k | dprime");
      if (param < 1 || param > k - 1 || d - param < k)
        throw std::invalid_argument("make_sec3_plan: C3 requires 1 <= i <= k-1 and d-i >= k");
      plan.star_rows = d - param;
      plan.star_cols = dprime;
      break;
    }
    case Sec3Case::C4: {
      const int r = dprime % k;
      if (r == 0) throw std::invalid_argument("make_sec3_plan: C4 requires k to not divide dprime");
      if (param < 0 || param > k - r - 1 || d - param < k)
        throw std::invalid_argument("make_sec3_plan: C4 requires 0 <= t <= k-r-1 and d-t >= k");
      plan.star_rows = d - param;
      plan.star_cols = dprime - r;
      break;
    }
  }
  return detail::finish_plan(plan);
}

// Every plan available for (k, d, dprime), cases in order C1..C4, parameters
// ascending within a case. Empty when no case applies (e.g. k = d = dprime).
inline std::vector<Sec3Plan> enumerate_constructions(int k, int d, int dprime) {
  if (!(2 <= k && k <= d && d <= dprime))
    throw std::invalid_argument("enumerate_constructions: need 2 <= k <= d <= dprime");
  std::vector<Sec3Plan> plans;
  if (d % k == 0) {
    for (int i = 1; i <= k - 1 && dprime - i >= k; ++i) plans.push_back(make_sec3_plan(k, d, dprime, Sec3Case::C1, i));
  } else {
    const int r = d % k;
    for (int t = 0; t <= k - r - 1 && dprime - t >= k; ++t)
      plans.push_back(make_sec3_plan(k, d, dprime, Sec3Case::C2, t));
  }
  if (dprime % k == 0) {
    for (int i = 1; i <= k - 1 && d - i >= k; ++i) plans.push_back(make_sec3_plan(k, d, dprime, Sec3Case::C3, i));
  } else {
    const int r = dprime % k;
    for (int t = 0; t <= k - r - 1 && d - t >= k; ++t)
      plans.push_back(make_sec3_plan(k, d, dprime, Sec3Case::C4, t));
  }
  return plans;
}

// Fills the plan's star block with a complete length-k diagonal basis and
// embeds it at the top-left of the d x d' grid. The result is unextendible
// because anything orthogonal to it lives on the complement pattern, whose
// matching number is below k; that bound ships as the certificate.
inline BasisSet construct_sec3(const Sec3Plan& plan, const PhaseSystem& phases) {
  if (phases.k != plan.k) throw std::invalid_argument("construct_sec3: phase system size differs from k");
  const DiagonalPartition part = diagonal_partition(plan.star_rows, plan.star_cols, plan.k);
  const BasisSet block = build_sv1bk(part, phases);

  BasisSet S;
  S.d = plan.d;
  S.dprime = plan.dprime;
  S.k = plan.k;
  S.kind = (plan.k == plan.d) ? BasisKind::UMEB : BasisKind::USV1B;
  S.matrices.reserve(block.matrices.size());
  for (const Matrix& B : block.matrices) {
    Matrix A = Matrix::Zero(plan.d, plan.dprime);
    A.topLeftCorner(plan.star_rows, plan.star_cols) = B;
    S.matrices.push_back(std::move(A));
  }

  const int matching = pattern_max_rank(plan.complement_pattern);
  if (matching >= plan.k) throw std::logic_error("construct_sec3: complement pattern admits rank k");
  Certificate cert;
  cert.detail = PatternBound{plan.complement_pattern, matching};
  cert.tolerance = kRankTol;
  S.certificate = cert;

  S.provenance.construction = "sec3";
  S.provenance.add("k", std::to_string(plan.k));
  S.provenance.add("d", std::to_string(plan.d));
  S.provenance.add("dprime", std::to_string(plan.dprime));
  S.provenance.add("case", to_string(plan.kase));
  S.provenance.add("param", std::to_string(plan.param));
  S.provenance.add("phases", phases.label);

  validate_shape(S);
  if (S.count() != plan.expected_count) throw std::logic_error("construct_sec3: count mismatch");
  return S;
}

}  // namespace ueb
