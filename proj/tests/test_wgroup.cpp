#include <doctest.h>

#include "coxcat/wgroup.hpp"
#include "oracles.hpp"

using namespace coxcat;

TEST_SUITE("wgroup") {

TEST_CASE("reflections act as expected") {
  auto rs = build_root_system("A2");
  const int a1 = rs->simple_roots()[0], a2 = rs->simple_roots()[1];
  const GroupElement t1 = reflection(*rs, a1);
  CHECK(t1(a1) == rs->negation(a1));
  const auto sum = rs->find_root({FieldScalar(1), FieldScalar(1)});
  REQUIRE(sum.has_value());
  CHECK(t1(a2) == *sum);

  auto a1xa1 = build_root_system("A1xA1");
  const GroupElement t = reflection(*a1xa1, a1xa1->simple_roots()[0]);
  CHECK(t(a1xa1->simple_roots()[1]) == a1xa1->simple_roots()[1]);

  CHECK_THROWS_AS(reflection(*rs, {FieldScalar(2), FieldScalar(0)}), ArgumentError);
  CHECK(reflection(*rs, {FieldScalar(-1), FieldScalar(-1)}) == reflection(*rs, *sum));
}

TEST_CASE("products and inverses") {
  auto rs = build_root_system("B3");
  for (const auto& t : reflections(*rs)) {
    CHECK((t * t).is_identity());
    CHECK(inverse(t) == t);
  }
  const GroupElement c = coxeter_element(*rs);
  CHECK((c * inverse(c)).is_identity());
  CHECK(element_order(c) == 6);

  auto other = build_root_system("A3");
  CHECK_THROWS_AS(multiply(c, coxeter_element(*other)), ArgumentError);
}

TEST_CASE("Coxeter element of A2 is a 3-cycle") {
  auto rs = build_root_system("A2");
  const GroupElement c = coxeter_element(*rs);
  CHECK(c == reflection(*rs, rs->simple_roots()[0]) * reflection(*rs, rs->simple_roots()[1]));
  CHECK(element_order(c) == 3);
  CHECK(reflection_length(c) == 2);

  auto a1 = build_root_system("A1");
  CHECK(coxeter_element(*a1) == reflection(*a1, a1->simple_roots()[0]));
}

TEST_CASE("Coxeter number is the order of the Coxeter element") {
  const std::vector<std::pair<std::string, int>> table{
      {"A4", 5}, {"B4", 8}, {"D5", 8}, {"E6", 12}, {"F4", 12}, {"G2", 6}, {"H3", 10}, {"H4", 30}, {"I2(9)", 9}};
  for (const auto& [label, h] : table) {
    CAPTURE(label);
    auto rs = build_root_system(label);
    CHECK(element_order(coxeter_element(*rs)) == h);
    CHECK(reflection_length(coxeter_element(*rs)) == rs->rank());
  }
}

TEST_CASE("matrix action agrees with the permutation") {
  auto rs = build_root_system("H3");
  const GroupElement c = coxeter_element(*rs);
  for (int r = 0; r < rs->num_roots(); ++r) CHECK(apply(c, rs->coords(r)) == rs->coords(c(r)));
  const ExactMatrix m = matrix(c);
  CHECK(mat_rank(m - ExactMatrix::identity(3)) == 3);
}

TEST_CASE("reflection length equals Cayley distance over all reflections") {
  for (const std::string label : {"A3", "B3", "H3", "A4", "I2(7)", "A1xA2"}) {
    CAPTURE(label);
    auto rs = build_root_system(label);
    const auto dist = oracle::cayley_t_distance(*rs);
    CHECK(dist.size() == oracle::whole_group(*rs).size());
    std::size_t agree = 0;
    for (const auto& [w, d] : dist) agree += reflection_length(w) == d;
    CHECK(agree == dist.size());
  }
}

TEST_CASE("reflection length is a class function") {
  auto rs = build_root_system("B3");
  const auto group = oracle::whole_group(*rs);
  LengthCache len;
  for (std::size_t i = 0; i < group.size(); i += 5)
    for (std::size_t j = 0; j < group.size(); j += 7)
      CHECK(len(group[j] * group[i] * inverse(group[j])) == len(group[i]));
}

TEST_CASE("absolute order") {
  for (const std::string label : {"A2", "A3", "B3"}) {
    CAPTURE(label);
    auto rs = build_root_system(label);
    const GroupElement c = coxeter_element(*rs);
    const GroupElement one = identity_element(*rs);
    for (const auto& t : reflections(*rs)) {
      CHECK(absolute_leq(t, c));
      CHECK_FALSE(absolute_leq(c, t));
      CHECK(absolute_leq(one, t));
    }
  }
}

TEST_CASE("absolute order is conjugation invariant and translates") {
  auto rs = build_root_system("A3");
  const auto group = oracle::whole_group(*rs);
  LengthCache len;
  for (std::size_t i = 0; i < group.size(); i += 3)
    for (std::size_t j = 0; j < group.size(); j += 2) {
      const GroupElement& u = group[i];
      const GroupElement& v = group[j];
      const bool le = absolute_leq(u, v, len);
      CHECK(le == (len(u) + len(inverse(u) * v) == len(v)));
      const GroupElement& g = group[(i + j) % group.size()];
      CHECK(le == absolute_leq(g * u * inverse(g), g * v * inverse(g), len));
      // The complement u^-1 v of u in v lies below v too.
      if (le) CHECK(absolute_leq(inverse(u) * v, v, len));
    }
}

}
