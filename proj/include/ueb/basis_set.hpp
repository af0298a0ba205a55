#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ueb/certificate.hpp"
#include "ueb/core.hpp"

namespace ueb {

// SV1B:  complete Hilbert-Schmidt basis of k-singular-value-1 matrices
// USV1B: unextendible incomplete set of the same kind
// MEB / UMEB: the k == d special case (maximally entangled states)
enum class BasisKind { SV1B, USV1B, MEB, UMEB };

inline const char* to_string(BasisKind k) {
  switch (k) {
    case BasisKind::SV1B: return "SV1B";
    case BasisKind::USV1B: return "USV1B";
    case BasisKind::MEB: return "MEB";
    case BasisKind::UMEB: return "UMEB";
  }
  throw std::logic_error("to_string(BasisKind): bad value");
}

inline BasisKind basis_kind_from_string(const std::string& s) {
  if (s == "SV1B") return BasisKind::SV1B;
  if (s == "USV1B") return BasisKind::USV1B;
  if (s == "MEB") return BasisKind::MEB;
  if (s == "UMEB") return BasisKind::UMEB;
  throw std::invalid_argument("unknown basis kind: " + s);
}

inline bool is_unextendible_kind(BasisKind k) { return k == BasisKind::USV1B || k == BasisKind::UMEB; }
inline bool is_complete_kind(BasisKind k) { return k == BasisKind::SV1B || k == BasisKind::MEB; }

struct Provenance {
  std::string construction;  // "sebk", "sec3", "lift", "hadamard", "file"
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t seed = 0;

  void add(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
};

// A set of d x d' matrices normalized so that Tr(Ai^dag Aj) = k*delta_ij,
// each with exactly k singular values equal to 1. The matching states are
// the rows of A/sqrt(k); keeping the integer-friendly normalization in
// memory lets constructions stay exact until serialization.
struct BasisSet {
  int d = 0;
  int dprime = 0;
  int k = 0;
  BasisKind kind = BasisKind::USV1B;
  std::vector<Matrix> matrices;
  Provenance provenance;
  std::optional<Certificate> certificate;

  long space_dim() const { return static_cast<long>(d) * dprime; }
  long count() const { return static_cast<long>(matrices.size()); }
};

// Structural invariants that hold for any well-formed set, independent of
// numerical content: dimensions, kind/cardinality consistency, shapes.
inline void validate_shape(const BasisSet& S) {
  if (!(1 <= S.k && S.k <= S.d && S.d <= S.dprime))
    throw std::invalid_argument("BasisSet: need 1 <= k <= d <= dprime");
  if ((S.kind == BasisKind::MEB || S.kind == BasisKind::UMEB) && S.k != S.d)
    throw std::invalid_argument("BasisSet: MEB/UMEB require k == d");
  if (S.count() > S.space_dim()) throw std::invalid_argument("BasisSet: more matrices than the space dimension");
  if (is_unextendible_kind(S.kind) && S.count() >= S.space_dim())
    throw std::invalid_argument("BasisSet: an unextendible set must leave a nonempty complement");
  if (is_complete_kind(S.kind) && S.count() != S.space_dim())
    throw std::invalid_argument("BasisSet: a complete basis must have d*dprime elements");
  for (const Matrix& A : S.matrices)
    if (A.rows() != S.d || A.cols() != S.dprime) throw std::invalid_argument("BasisSet: matrix shape mismatch");
}

inline std::vector<Matrix> complement_basis(const BasisSet& S, double tol = kRankTol) {
  return complement_basis(S.matrices, S.d, S.dprime, tol);
}

}  // namespace ueb
