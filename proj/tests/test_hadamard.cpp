#include <catch2/catch_amalgamated.hpp>

#include "testing.hpp"
#include "ueb/ueb.hpp"

using ueb::Complex;
using ueb::Matrix;

namespace {

ueb::ExtensionSearchOptions fast_search() {
  ueb::ExtensionSearchOptions opt;
  opt.attempts = 60;
  opt.iterations = 400;
  return opt;
}

}  // namespace

TEST_CASE("the builtin 3x5 matrix is a partial Hadamard to machine precision") {
  const auto H = ueb::builtin_h3x5();
  REQUIRE(H.m == 3);
  REQUIRE(H.d == 5);
  REQUIRE(H.max_modulus_deviation() < 1e-12);
  REQUIRE(H.max_orthogonality_deviation() < 1e-12);
  REQUIRE_NOTHROW(H.validate());
  REQUIRE(H.entries(0, 0) == Complex(1.0, 0.0));
  REQUIRE(H.entries(2, 1) == Complex(0.0, 1.0));
}

TEST_CASE("fourier partial Hadamards validate and extend") {
  const auto F = ueb::fourier_partial_hadamard(3, 5);
  REQUIRE_NOTHROW(F.validate());
  const auto verdict = ueb::check_extension(F, fast_search());
  REQUIRE(verdict.found());
  REQUIRE(verdict.best_residual < 1e-8);
  for (int i = 0; i < 5; ++i) REQUIRE(std::abs(std::abs(verdict.row(i)) - 1.0) < 1e-10);
  // the witness really is orthogonal to every existing row
  for (int y = 0; y < 3; ++y) {
    Complex acc = 0.0;
    for (int x = 0; x < 5; ++x) acc += std::conj(F.entries(y, x)) * verdict.row(x);
    REQUIRE(std::abs(acc) < 1e-7);
  }
}

TEST_CASE("the builtin rows admit no extension in a bounded search") {
  const auto verdict = ueb::check_extension(ueb::builtin_h3x5(), fast_search());
  REQUIRE_FALSE(verdict.found());
  REQUIRE(verdict.heuristic);
  REQUIRE(verdict.best_residual > 0.05);
}

TEST_CASE("a square partial Hadamard is exactly inextensible") {
  const auto F = ueb::fourier_partial_hadamard(5, 5);
  const auto verdict = ueb::check_extension(F);
  REQUIRE_FALSE(verdict.found());
  REQUIRE_FALSE(verdict.heuristic);
  REQUIRE(verdict.attempts == 0);
  REQUIRE(std::isinf(verdict.best_residual));
}

TEST_CASE("partial Hadamard validation rejects bad inputs") {
  ueb::PartialHadamard bad{2, 5, Matrix::Ones(2, 5), "bad"};
  REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);  // rows not orthogonal
  ueb::PartialHadamard shape{2, 5, Matrix::Ones(2, 4), "bad"};
  REQUIRE_THROWS_AS(shape.validate(), std::invalid_argument);
  ueb::PartialHadamard tall{6, 5, Matrix::Ones(6, 5), "bad"};
  REQUIRE_THROWS_AS(tall.validate(), std::invalid_argument);
  ueb::PartialHadamard scaled = ueb::fourier_partial_hadamard(2, 4);
  scaled.entries(0, 0) = 1.5;
  REQUIRE_THROWS_AS(scaled.validate(), std::invalid_argument);
}

TEST_CASE("the 23-matrix UMEB in C^5 (x) C^5") {
  const auto S = ueb::build_umeb_from_hadamard(ueb::builtin_h3x5(), 5, fast_search());
  REQUIRE(S.count() == 23);
  REQUIRE(S.kind == ueb::BasisKind::UMEB);
  REQUIRE(S.k == 5);
  REQUIRE(testing::max_gram_deviation(S.matrices, 5.0) < 1e-12);
  for (const Matrix& A : S.matrices) REQUIRE(ueb::schmidt_profile(A).schmidt_number == 5);

  // first matrix: l = 1, a = 0, ones on the first shifted diagonal
  for (int x = 0; x < 5; ++x) REQUIRE(S.matrices[0](x, (x + 1) % 5) == Complex(1.0, 0.0));
  // last three matrices carry the Hadamard rows on the main diagonal
  const auto H = ueb::builtin_h3x5();
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 5; ++x) REQUIRE(S.matrices[20 + y](x, x) == H.entries(y, x));

  REQUIRE(S.certificate.has_value());
  const auto* hn = std::get_if<ueb::HadamardNoExtension>(&S.certificate->detail);
  REQUIRE(hn != nullptr);
  REQUIRE(hn->verdict.heuristic);
}

TEST_CASE("rectangular targets scale the count as d(dprime - 1) + m") {
  const auto S6 = ueb::build_umeb_from_hadamard(ueb::builtin_h3x5(), 6, fast_search());
  REQUIRE(S6.count() == 28);
  REQUIRE(S6.d == 5);
  REQUIRE(S6.dprime == 6);
  REQUIRE(testing::max_gram_deviation(S6.matrices, 5.0) < 1e-12);
  // shifted diagonals wrap modulo dprime, not d
  REQUIRE(S6.matrices[0](4, 5) == Complex(1.0, 0.0));
  REQUIRE(S6.matrices[0](0, 1) == Complex(1.0, 0.0));
}

TEST_CASE("an extendible matrix is rejected as a UMEB source") {
  REQUIRE_THROWS_AS(ueb::build_umeb_from_hadamard(ueb::fourier_partial_hadamard(3, 5), 5, fast_search()),
                    std::invalid_argument);
}

TEST_CASE("a full Hadamard yields a complete maximally entangled basis") {
  const auto S = ueb::build_umeb_from_hadamard(ueb::fourier_partial_hadamard(4, 4), 4);
  REQUIRE(S.kind == ueb::BasisKind::MEB);
  REQUIRE(S.count() == 16);
  REQUIRE_FALSE(S.certificate.has_value());
  REQUIRE(testing::max_gram_deviation(S.matrices, 4.0) < 1e-12);
}

TEST_CASE("dprime below d is rejected") {
  REQUIRE_THROWS_AS(ueb::build_umeb_from_hadamard(ueb::builtin_h3x5(), 4), std::invalid_argument);
}
