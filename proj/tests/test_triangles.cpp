#include <doctest.h>

#include <random>

#include "coxcat/triangles.hpp"

using namespace coxcat;

namespace {

BiPoly random_bipoly(std::mt19937_64& rng) {
  BiPoly p;
  const int terms = static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t)
    p.add_to(static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<long>(rng() % 11) - 5);
  return p;
}

}  // namespace

TEST_SUITE("triangles") {

TEST_CASE("arithmetic examples") {
  const BiPoly x = BiPoly::x(), y = BiPoly::y(), one = BiPoly::constant(1);
  CHECK(bipoly_arith(x + y, BiPoly{}, PolyOp::Add) == x + y);
  CHECK(bipoly_arith(x + y, x + y, PolyOp::Mul).to_string() == "x^2 + 2xy + y^2");
  CHECK((one - y) * (one + y) == one - y * y);
  CHECK(bipoly_arith(x, x, PolyOp::Sub).is_zero());
  CHECK(BiPoly{}.to_string() == "0");
  CHECK((one - x).to_string() == "1 - x");
}

TEST_CASE("canonical trimming") {
  BiPoly p = BiPoly::monomial(3, 2, 5);
  p.add_to(3, 2, -5);
  CHECK(p.is_zero());
  CHECK(p == BiPoly{});
  CHECK(p.deg_x() == -1);
  Poly1 q{1, 2, 0, 0};
  CHECK(q.degree() == 1);
}

TEST_CASE("binomial expansions") {
  CHECK(binomial_expand(Base::XPlusY, 0) == BiPoly::constant(1));
  CHECK(binomial_expand(Base::OneMinusY, 3).to_string() == "1 - 3y + 3y^2 - y^3");
  CHECK((binomial_expand(Base::XPlusY, 2) * binomial_expand(Base::Y, 1)).to_string() == "x^2y + 2xy^2 + y^3");
  for (Base b : {Base::XPlusY, Base::OneMinusY, Base::Y})
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j)
        CHECK(binomial_expand(b, i) * binomial_expand(b, j) == binomial_expand(b, i + j));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const BiPoly a = random_bipoly(rng), b = random_bipoly(rng), c = random_bipoly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("evaluation") {
  const BiPoly f = BiPoly::constant(1) + BiPoly::x() + BiPoly::y();
  CHECK(eval_at(f, FieldScalar(1), FieldScalar(1)) == FieldScalar(3));
  const BiPoly m = BiPoly::constant(1) - BiPoly::x() + BiPoly::x() * BiPoly::y();
  CHECK(eval_at(m, FieldScalar(1), FieldScalar(1)) == FieldScalar(1));
  CHECK(eval_at(m, FieldScalar(0), FieldScalar(0)) == FieldScalar(1));
  CHECK(eval_at(m, FieldScalar::rational(1, 2), FieldScalar(3)) == FieldScalar(2));
}

TEST_CASE("specializations") {
  const BiPoly p = BiPoly::x() * BiPoly::x() + BiPoly::constant(2) * BiPoly::x() * BiPoly::y() + BiPoly::y();
  CHECK(p.at_y(0) == Poly1{0, 0, 1});
  CHECK(p.at_x(0) == Poly1{0, 1});
  CHECK(p.at_y(1) == Poly1{1, 2, 1});
  CHECK(p.total_degree() == 2);
  CHECK(Poly1{1, -3, 2}.to_string('q') == "1 - 3q + 2q^2");
}

}
