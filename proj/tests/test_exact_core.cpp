#include <random>

#include <doctest.h>

#include "linkparity/errors.hpp"
#include "linkparity/linalg.hpp"
#include "linkparity/rational.hpp"
#include "oracles.hpp"

using namespace linkparity;

namespace {

MatrixQ random_integer_matrix(std::mt19937_64& rng, int n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Rational(dist(rng));
  }
  return m;
}

MatrixQ random_rational_matrix(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
  }
  return m;
}

}  // namespace

TEST_CASE("rational normalizes eagerly") {
  const Rational q(Integer(6), Integer(-4));
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  CHECK(q == Rational::parse("-3/2"));
  CHECK(Rational(Integer(0), Integer(-7)).str() == "0");
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), ContractError);
}

TEST_CASE("rational text format") {
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("+7/1").str() == "7");
  CHECK(Rational::parse("-10/4").str() == "-5/2");
  CHECK(Rational::parse("123456789012345678901234567890/3").str() ==
        "41152263004115226300411522630");
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "1/-2", "a", " 1", "1 "}) {
    CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  }
}

TEST_CASE("rational parse/render round trip") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 100000);
  for (int i = 0; i < 500; ++i) {
    const Rational q(Integer(num(rng)), Integer(den(rng)));
    CHECK(Rational::parse(q.str()) == q);
  }
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third(Integer(1), Integer(3));
  CHECK(third + third + third == Rational(1));
  CHECK(third * Rational(3) == Rational(1));
  CHECK(Rational(1) / Rational(7) * Rational(7) == Rational(1));
  CHECK(pow(Rational(Integer(-2), Integer(3)), 3) == Rational(Integer(-8), Integer(27)));
  CHECK(abs(Rational(-5)) == Rational(5));
  CHECK(Rational(-1) < third);
  CHECK_THROWS_AS(third / Rational(0), ContractError);
}

TEST_CASE("determinant examples") {
  CHECK(determinant(MatrixQ::Identity(3, 3)) == Rational(1));
  MatrixQ m(2, 2);
  m << Rational(1), Rational(2), Rational(3), Rational(4);
  CHECK(determinant(m) == Rational(-2));
  CHECK(determinant(MatrixQ(0, 0)) == Rational(1));
  CHECK_THROWS_AS(determinant(MatrixQ(2, 3)), DimensionError);

  // Needs a row swap: zero leading entry.
  MatrixQ p(3, 3);
  p << Rational(0), Rational(1), Rational(2), Rational(1), Rational(0), Rational(3),
      Rational(4), Rational(-3), Rational(8);
  CHECK(determinant(p) == oracle::cofactor_det(p));
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const MatrixQ m = random_integer_matrix(rng, n, trial % 2 ? 3 : 50);
      REQUIRE(determinant(m) == oracle::cofactor_det(m));
      ++checked;
    }
    for (int trial = 0; trial < 10; ++trial) {
      const MatrixQ m = random_rational_matrix(rng, n);
      REQUIRE(determinant(m) == oracle::cofactor_det(m));
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("determinant is generic over the scalar") {
  Matrix<long long> m(3, 3);
  m << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  CHECK(determinant(m) == 4);
  CHECK(determinant(m) == oracle::cofactor_det(m));
}

TEST_CASE("solve examples") {
  VectorQ b(3);
  b << Rational(5), Rational(-1), Rational(Integer(2), Integer(3));
  const auto x = solve(MatrixQ::Identity(3, 3), b);
  REQUIRE(x);
  CHECK(*x == b);

  MatrixQ two(2, 2);
  two << Rational(2), Rational(0), Rational(0), Rational(2);
  VectorQ rhs(2);
  rhs << Rational(2), Rational(4);
  const auto y = solve(two, rhs);
  REQUIRE(y);
  CHECK((*y)(0) == Rational(1));
  CHECK((*y)(1) == Rational(2));

  MatrixQ singular(2, 2);
  singular << Rational(1), Rational(1), Rational(1), Rational(1);
  VectorQ r2(2);
  r2 << Rational(1), Rational(2);
  CHECK_FALSE(solve(singular, r2).has_value());

  CHECK_THROWS_AS(solve(MatrixQ(2, 3), VectorQ(2)), DimensionError);
  CHECK_THROWS_AS(solve(two, VectorQ(3)), DimensionError);
}

TEST_CASE("solve reproduces the right-hand side exactly; singular iff det = 0") {
  std::mt19937_64 rng(99);
  int singular = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    MatrixQ a = trial % 3 == 0 ? random_rational_matrix(rng, n) : random_integer_matrix(rng, n, 2);
    if (trial % 7 == 0 && n > 1) a.row(n - 1) = a.row(0) * Rational(Integer(3), Integer(2));
    VectorQ b(n);
    for (int i = 0; i < n; ++i) b(i) = Rational(static_cast<long>(rng() % 41) - 20);
    const auto x = solve(a, b);
    const bool zero_det = oracle::cofactor_det(a) == Rational(0);
    REQUIRE(x.has_value() == !zero_det);
    if (x) {
      REQUIRE(VectorQ(a * *x) == b);
    } else {
      ++singular;
    }
  }
  CHECK(singular > 0);
}
