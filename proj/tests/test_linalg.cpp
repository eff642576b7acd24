#include <doctest.h>

#include "mrbld/matrix.hpp"
#include "mrbld/random_instances.hpp"
#include "oracles.hpp"

using namespace mrbld;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational::parse("12").is_integer());
  for (const char* bad : {"", "1/0", "1.5", "--1", "1/-2", "a", " 1", "1/"}) CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(pow(Rational(5), 0) == Rational(1));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rank and determinant agree with independent eliminations") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = rng.uniform(1, 5), cols = rng.uniform(1, 5);
    Matrix m = random_matrix(rng, rows, cols, -3, 3);
    // Force some rank deficiency.
    if (rows > 1 && rng.coin()) {
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Rational(2) - m(rows > 2 ? 1 : 0, c);
    }
    CHECK(rank(m) == oracle::rank(m));
    if (m.is_square()) CHECK(determinant(m) == oracle::determinant(m));
  }
}

TEST_CASE("nullspace, inverse and solve") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = rng.uniform(1, 5), cols = rng.uniform(1, 6);
    const Matrix m = random_matrix(rng, rows, cols, -2, 2);
    const auto null = nullspace_basis(m);
    CHECK(null.size() + rank(m) == cols);
    for (const auto& v : null) CHECK(is_zero(m * v));
    if (!null.empty()) CHECK(oracle::rank(Matrix::from_columns(null, cols)) == null.size());

    const Vector x = random_vector(rng, cols, -3, 3);
    const auto sol = solve(m, m * x);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == m * x);
    CHECK(in_column_space(m, m * x));
  }
  const Matrix u = random_unimodular(rng, 4);
  CHECK((determinant(u) == Rational(1) || determinant(u) == Rational(-1)));
  CHECK(u * inverse(u) == Matrix::identity(4));
  CHECK_THROWS_AS(inverse(Matrix(2, 2)), DimensionMismatch);
  const Matrix singular = Matrix::from_rows({{1, 2}, {2, 4}}, 2);
  CHECK_FALSE(solve(singular, {1, 0}).has_value());
}

TEST_CASE("quotient dimension and basis extension") {
  const Matrix big = Matrix::identity(3);
  const Matrix small = Matrix::from_columns({{1, 1, 0}}, 3);
  CHECK(quotient_dim(big, small) == 2);
  const Matrix plane = Matrix::from_columns({{1, 0, 0}, {0, 1, 0}}, 3);
  CHECK_THROWS_AS(quotient_dim(plane, Matrix::from_columns({{0, 0, 1}}, 3)), SubspaceViolation);
  const auto chosen = extend_basis({{1, 0, 0}}, {{2, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 5}}, 3);
  REQUIRE(chosen.size() == 2);
  CHECK(chosen[0] == Vector{0, 1, 0});
  CHECK(chosen[1] == Vector{0, 0, 5});
}

TEST_CASE("rref is reduced and deterministic") {
  const Matrix m = Matrix::from_rows({{0, 2, 4}, {1, 1, 1}, {2, 4, 6}}, 3);
  const RrefResult r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.form == Matrix::from_rows({{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}, 3));
}
