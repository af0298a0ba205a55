#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "ueb/core.hpp"
#include "ueb/extension.hpp"
#include "ueb/pattern.hpp"

namespace ueb {

// Why a set cannot be extended: the generic rank of its orthogonal complement
// stays below the Schmidt number. max_rank is the largest rank seen over
// `trials` random combinations drawn from `seed`.
struct ComplementRankDeficient {
  int max_rank = 0;
  int trials = 0;
  std::uint64_t seed = 0;
};

// Why a set cannot be extended: every matrix orthogonal to it is supported on
// `pattern`, whose maximum row-column matching is below the Schmidt number.
struct PatternBound {
  SupportPattern pattern;
  int matching = 0;
};

// Heuristic evidence: a seeded multistart search for an extension within the
// complement came up empty.
struct HadamardNoExtension {
  ExtensionVerdict verdict;
};

struct Inconclusive {
  std::string reason;
};

struct Certificate {
  std::variant<ComplementRankDeficient, PatternBound, HadamardNoExtension, Inconclusive> detail =
      Inconclusive{"not certified"};
  double tolerance = kRankTol;
  // Set when certification stumbled on a concrete extension: the set is
  // provably extendible and any verification must fail.
  std::optional<Vector> counterexample;

  bool positive() const { return !std::holds_alternative<Inconclusive>(detail) && !counterexample; }

  const char* kind_name() const {
    if (std::holds_alternative<ComplementRankDeficient>(detail)) return "complement-rank-deficient";
    if (std::holds_alternative<PatternBound>(detail)) return "pattern-bound";
    if (std::holds_alternative<HadamardNoExtension>(detail)) return "hadamard-no-extension";
    return "inconclusive";
  }
};

}  // namespace ueb
