#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "testing.hpp"
#include "ueb/ueb.hpp"

using ueb::Complex;
using ueb::Matrix;

namespace {

ueb::BasisSet example_28() {
  return ueb::construct_sec3(ueb::make_sec3_plan(4, 6, 7, ueb::Sec3Case::C2, 0),
                             ueb::tensor_hadamard_phases(4));
}

ueb::ExtensionSearchOptions fast_search() {
  ueb::ExtensionSearchOptions opt;
  opt.attempts = 60;
  opt.iterations = 400;
  return opt;
}

}  // namespace

TEST_CASE("verify_gram and verify_singular_profile accept exact constructions") {
  const auto S = example_28();
  const auto gram = ueb::verify_gram(S);
  REQUIRE(gram.ok);
  REQUIRE(gram.deviation == 0.0);
  const auto prof = ueb::verify_singular_profile(S);
  REQUIRE(prof.ok);
  REQUIRE(prof.deviation < 1e-12);
}

TEST_CASE("verify_gram flags a rescaled member") {
  auto S = example_28();
  S.matrices[5] *= 1.001;
  const auto gram = ueb::verify_gram(S);
  REQUIRE_FALSE(gram.ok);
  REQUIRE(gram.deviation > 1e-3);
}

TEST_CASE("verify_singular_profile flags a rank-deficient member") {
  auto S = example_28();
  S.matrices[0](1, 1) = 0.0;  // breaks one diagonal entry; a singular value drops
  const auto prof = ueb::verify_singular_profile(S);
  REQUIRE_FALSE(prof.ok);
}

TEST_CASE("generic_max_rank basics") {
  REQUIRE(ueb::generic_max_rank({}) == 0);
  Matrix e00 = Matrix::Zero(2, 2), e11 = Matrix::Zero(2, 2);
  e00(0, 0) = 1.0;
  e11(1, 1) = 1.0;
  REQUIRE(ueb::generic_max_rank({e00}) == 1);
  REQUIRE(ueb::generic_max_rank({e00, e11}) == 2);
  REQUIRE_THROWS_AS(ueb::generic_max_rank({e00}, 0), std::invalid_argument);
}

TEST_CASE("generic_max_rank is deterministic in the seed") {
  std::vector<Matrix> mats{testing::random_matrix(4, 4, 1), testing::random_matrix(4, 4, 2)};
  REQUIRE(ueb::generic_max_rank(mats, 8, 99) == ueb::generic_max_rank(mats, 8, 99));
}

TEST_CASE("generic rank of coordinate spans equals the pattern matching number") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % 5);
    ueb::SupportPattern p(rows, cols);
    std::vector<Matrix> span;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (rng() % 2 == 0) {
          p.set(r, c, true);
          Matrix E = Matrix::Zero(rows, cols);
          E(r, c) = 1.0;
          span.push_back(E);
        }
    if (span.empty()) continue;
    REQUIRE(ueb::generic_max_rank(span, 8, rng()) == ueb::pattern_max_rank(p));
  }
}

TEST_CASE("certify_unextendible re-derives the attached certificate kind first") {
  // The lifted set's complement supports both a pattern bound (4 cells,
  // matching 2) and a rank bound (generic rank 2); the attached kind wins.
  const auto inner = ueb::construct_sec3(ueb::make_sec3_plan(2, 2, 3, ueb::Sec3Case::C1, 1),
                                         ueb::fourier_phases(2));
  const auto filler = ueb::build_sv1bk(ueb::diagonal_partition(2, 3, 2), ueb::fourier_phases(2));
  auto lifted = ueb::lift_umeb(inner, filler, ueb::cyclic_decomposition(2, 3));

  const auto kept = ueb::certify_unextendible(lifted);
  REQUIRE(std::holds_alternative<ueb::ComplementRankDeficient>(kept.detail));
  REQUIRE(std::get<ueb::ComplementRankDeficient>(kept.detail).max_rank == 2);

  auto bare = lifted;
  bare.certificate.reset();
  const auto fresh = ueb::certify_unextendible(bare);
  REQUIRE(std::holds_alternative<ueb::PatternBound>(fresh.detail));
  REQUIRE(std::get<ueb::PatternBound>(fresh.detail).matching == 2);
}

TEST_CASE("certify_unextendible picks the pattern bound for zero-pattern sets") {
  const auto S = example_28();
  const auto cert = ueb::certify_unextendible(S);
  REQUIRE(std::holds_alternative<ueb::PatternBound>(cert.detail));
  const auto& pb = std::get<ueb::PatternBound>(cert.detail);
  REQUIRE(pb.matching == 2);
  REQUIRE(pb.pattern.count() == 14);
  REQUIRE(cert.positive());
}

TEST_CASE("certify_unextendible reaches the diagonal search for Hadamard sets") {
  ueb::CertifyOptions opt;
  opt.search = fast_search();
  const auto S = ueb::build_umeb_from_hadamard(ueb::builtin_h3x5(), 6, fast_search());
  const auto cert = ueb::certify_unextendible(S, ueb::kRankTol, opt);
  REQUIRE(std::holds_alternative<ueb::HadamardNoExtension>(cert.detail));
  REQUIRE(cert.positive());
  REQUIRE_FALSE(cert.counterexample.has_value());
}

TEST_CASE("certify_unextendible finds the extension of a bad Hadamard claim") {
  // Hand-build the set from the first three Fourier rows: orthonormal, flat
  // profile, but extendible by the fourth Fourier row.
  const auto F = ueb::fourier_partial_hadamard(3, 5);
  ueb::BasisSet S;
  S.d = 5;
  S.dprime = 5;
  S.k = 5;
  S.kind = ueb::BasisKind::UMEB;
  for (int l = 1; l < 5; ++l)
    for (int a = 0; a < 5; ++a) {
      Matrix A = Matrix::Zero(5, 5);
      for (int x = 0; x < 5; ++x) A(x, (x + l) % 5) = ueb::root_of_unity(static_cast<long>(a) * x, 5);
      S.matrices.push_back(std::move(A));
    }
  for (int y = 0; y < 3; ++y) {
    Matrix B = Matrix::Zero(5, 5);
    for (int x = 0; x < 5; ++x) B(x, x) = F.entries(y, x);
    S.matrices.push_back(std::move(B));
  }

  ueb::CertifyOptions opt;
  opt.search = fast_search();
  const auto cert = ueb::certify_unextendible(S, ueb::kRankTol, opt);
  REQUIRE(cert.counterexample.has_value());
  REQUIRE_FALSE(cert.positive());

  const auto rep = ueb::verify(S, ueb::kRankTol, opt);
  REQUIRE(rep.overall == ueb::Overall::Failed);
  REQUIRE(rep.gram.ok);
  REQUIRE(rep.profile.ok);
}

TEST_CASE("certify_unextendible gives up gracefully") {
  // {identity, swap} in C^2 (x) C^2: complement has full support and generic
  // rank 2, and its support is not a 2-cell diagonal.
  ueb::BasisSet S;
  S.d = 2;
  S.dprime = 2;
  S.k = 2;
  S.kind = ueb::BasisKind::USV1B;
  Matrix id(2, 2), sw(2, 2);
  id << 1, 0, 0, 1;
  sw << 0, 1, 1, 0;
  S.matrices = {id, sw};
  const auto cert = ueb::certify_unextendible(S);
  REQUIRE(std::holds_alternative<ueb::Inconclusive>(cert.detail));
  const auto rep = ueb::verify(S);
  REQUIRE(rep.overall == ueb::Overall::Inconclusive);
}

TEST_CASE("verify certifies constructions end to end") {
  const auto rep = ueb::verify(example_28());
  REQUIRE(rep.overall == ueb::Overall::Certified);
  REQUIRE(rep.gram.ok);
  REQUIRE(rep.profile.ok);
  REQUIRE(rep.cardinality_ok);
  REQUIRE(std::string(rep.certificate.kind_name()) == "pattern-bound");
}

TEST_CASE("verify accepts complete bases without a certificate") {
  const auto S = ueb::build_sv1bk(ueb::diagonal_partition(3, 4, 2), ueb::fourier_phases(2));
  const auto rep = ueb::verify(S);
  REQUIRE(rep.overall == ueb::Overall::Certified);
}

TEST_CASE("verify fails tampered sets and cardinality lies") {
  auto S = example_28();
  S.matrices[3] *= Complex(0.0, 1.1);
  REQUIRE(ueb::verify(S).overall == ueb::Overall::Failed);

  auto complete = ueb::build_sv1bk(ueb::diagonal_partition(2, 3, 2), ueb::fourier_phases(2));
  complete.matrices.pop_back();  // now claims SV1B with a missing member
  REQUIRE_THROWS_AS(ueb::verify(complete), std::invalid_argument);

  auto liar = example_28();
  liar.kind = ueb::BasisKind::UMEB;  // k != d
  REQUIRE_THROWS_AS(ueb::verify(liar), std::invalid_argument);
}

TEST_CASE("deleting a member from the 28-state set reopens the complement") {
  const auto S = example_28();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto cut = S;
    cut.matrices.erase(cut.matrices.begin() + static_cast<long>(rng() % cut.matrices.size()));
    const auto comp = ueb::complement_basis(cut.matrices, cut.d, cut.dprime);
    REQUIRE(ueb::generic_max_rank(comp, 8, rng()) >= cut.k);
  }
}
