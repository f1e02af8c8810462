#include <doctest.h>

#include <random>

#include "coxcat/exactnum.hpp"

using coxcat::ArithOp;
using coxcat::ExactMatrix;
using coxcat::FieldKind;
using coxcat::FieldScalar;

TEST_SUITE("exactnum") {

TEST_CASE("rational arithmetic") {
  const auto half = FieldScalar::rational(1, 2);
  const auto third = FieldScalar::rational(1, 3);
  CHECK(scalar_arith(half, third, ArithOp::Add) == FieldScalar::rational(5, 6));
  CHECK((half - third).to_string() == "1/6");
  CHECK((FieldScalar::rational(6, 4)).to_string() == "3/2");
  CHECK(FieldScalar::rational(-4, 2).to_string() == "-2");
  CHECK(FieldScalar::rational(2, -4) == FieldScalar::rational(-1, 2));
}

TEST_CASE("quadratic field arithmetic") {
  const auto a = FieldScalar::qsqrt5(1, 1, 1, 1);
  const auto b = FieldScalar::qsqrt5(1, 1, -1, 1);
  CHECK(a * b == FieldScalar(-4));
  const auto phi = FieldScalar::qsqrt5(1, 2, 1, 2);
  CHECK(phi * phi == FieldScalar::qsqrt5(3, 2, 1, 2));
  CHECK(phi * phi == phi + FieldScalar(1));
  CHECK(phi.to_string() == "1/2+1/2r5");
  CHECK(FieldScalar::qsqrt5(0, 1, -1, 1).to_string() == "-1r5");
  CHECK(FieldScalar::parse("1/2+1/2r5") == phi);
  CHECK(FieldScalar::parse("-3/7") == FieldScalar::rational(-3, 7));
  CHECK(phi.kind() == FieldKind::QSqrt5);
}

TEST_CASE("promotion and value equality") {
  const auto q = FieldScalar::qsqrt5(2, 1, 0, 1);
  CHECK(q == FieldScalar(2));
  CHECK(q.hash() == FieldScalar(2).hash());
  CHECK((FieldScalar(1) + FieldScalar::qsqrt5(0, 1, 1, 1)).kind() == FieldKind::QSqrt5);
}

TEST_CASE("sign and ordering in Q(sqrt5)") {
  CHECK(FieldScalar::qsqrt5(-2, 1, 1, 1).sign() == 1);   // sqrt5 > 2
  CHECK(FieldScalar::qsqrt5(-3, 1, 1, 1).sign() == -1);  // sqrt5 < 3
  CHECK(FieldScalar::qsqrt5(9, 4, -1, 1).sign() == 1);   // 9/4 > sqrt5
  CHECK(FieldScalar::qsqrt5(0, 1, 0, 1).sign() == 0);
  CHECK(FieldScalar(2) < FieldScalar::qsqrt5(0, 1, 1, 1));
}

TEST_CASE("division by zero is an arithmetic error") {
  CHECK_THROWS_AS(scalar_arith(FieldScalar(1), FieldScalar(0), ArithOp::Div), coxcat::ArithmeticError);
  CHECK_THROWS_AS(FieldScalar(1) / FieldScalar::qsqrt5(0, 1, 0, 1), coxcat::ArithmeticError);
}

TEST_CASE("round trips on random scalars") {
  std::mt19937_64 rng(7);
  auto small = [&]() { return static_cast<long>(rng() % 21) - 10; };
  auto pos = [&]() { return static_cast<long>(rng() % 9) + 1; };
  for (int t = 0; t < 300; ++t) {
    const auto a = FieldScalar::qsqrt5(small(), pos(), small(), pos());
    const auto b = FieldScalar::qsqrt5(small(), pos(), small(), pos());
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(FieldScalar::parse(a.to_string()) == a);
    if (a == b) CHECK(a.hash() == b.hash());
  }
}

TEST_CASE("matrix rank") {
  CHECK(mat_rank(ExactMatrix::identity(4)) == 4);
  CHECK(mat_rank(ExactMatrix(3, 5)) == 0);
  // t_alpha - I for the reflection of (1, 0, 0) in the standard inner product.
  ExactMatrix t = ExactMatrix::identity(3);
  t(0, 0) = FieldScalar(-1);
  CHECK(mat_rank(t - ExactMatrix::identity(3)) == 1);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = FieldScalar::qsqrt5(static_cast<long>(rng() % 3) - 1, 1, static_cast<long>(rng() % 3) - 1, 2);
    CHECK(mat_rank(m) == mat_rank(m.transpose()));
  }
}

TEST_CASE("rank over Q(sqrt5) sees irrational dependence") {
  // Rows (1, phi) and (phi, phi^2) are proportional.
  const auto phi = FieldScalar::qsqrt5(1, 2, 1, 2);
  ExactMatrix m(2, 2);
  m(0, 0) = FieldScalar(1);
  m(0, 1) = phi;
  m(1, 0) = phi;
  m(1, 1) = phi * phi;
  CHECK(mat_rank(m) == 1);
}

}
