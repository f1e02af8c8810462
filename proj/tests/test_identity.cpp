#include <doctest.h>

#include <set>

#include "coxcat/identity.hpp"

using namespace coxcat;

namespace {

const SubCheck* find_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.sub_checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("identity") {

TEST_CASE("left-hand transform") {
  CHECK(lhs_transform(BiPoly::constant(1), 0) == BiPoly::constant(1));
  const BiPoly f1 = BiPoly::constant(1) + BiPoly::x() + BiPoly::y();
  CHECK(lhs_transform(f1, 1) == f1);
  CHECK(lhs_transform(BiPoly::x() * BiPoly::y(), 2).to_string() == "xy + y^2");
  CHECK_THROWS_AS(lhs_transform(BiPoly::x() * BiPoly::y(), 1), ArgumentError);
}

TEST_CASE("right-hand transform") {
  const BiPoly m1 = BiPoly::constant(1) - BiPoly::x() + BiPoly::x() * BiPoly::y();
  CHECK(rhs_transform(m1).to_string() == "1 + x + y");
  CHECK_THROWS_AS(rhs_transform(BiPoly::y()), InternalError);
  const auto a1 = noncrossing_lattice(build_root_system("A1"));
  CHECK(rhs_transform(a1) == rhs_transform(m1));
}

TEST_CASE("both sides for A2") {
  auto rs = build_root_system("A2");
  const auto lat = noncrossing_lattice(rs);
  const auto cx = enumerate_complex(rs);
  const BiPoly lhs = lhs_transform(f_triangle(cx), 2);
  CHECK(lhs.to_string() == "1 + 3x + 3y + 2x^2 + 3xy + y^2");
  CHECK(rhs_transform(lat) == lhs);
  CHECK(rhs_transform(m_triangle(lat)) == lhs);
  CHECK(lhs_by_links(cx) == lhs);
  CHECK(rhs_by_intervals(cx, lat) == lhs);
  CHECK(rhs_by_complement(lat) == lhs);
}

TEST_CASE("identity holds on small types") {
  for (const std::string label : {"A1", "A2", "B2", "A3", "B3", "H3", "G2", "I2(7)", "A1xA1", "A1xA2"}) {
    CAPTURE(label);
    const auto report = verify_fm(build_root_system(label));
    CHECK(report.passed());
    CHECK(report.equal);
    CHECK(report.residual.is_zero());
    CHECK(report.lhs.coeff(0, 0) == 1);
    for (const auto& c : report.sub_checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.status != CheckStatus::Fail);
    }
  }
}

TEST_CASE("identity scope runs only the identity checks") {
  VerifyOptions opts;
  opts.scope = VerifyScope::Identity;
  const auto report = verify_fm(build_root_system("A3"), opts);
  CHECK(report.passed());
  CHECK(report.sub_checks.size() == 2);
  CHECK(find_check(report, "fm-identity") != nullptr);
}

TEST_CASE("over-budget types are skipped, not failed") {
  VerifyOptions opts;
  opts.face_budget = 5;
  const auto report = verify_fm(build_root_system("A3"), opts);
  CHECK(report.status == CheckStatus::Skipped);
  CHECK(find_check(report, "budget") != nullptr);
}

TEST_CASE("reducible reports include the product check") {
  const auto report = verify_fm(build_root_system("A2xB2"));
  const SubCheck* c = find_check(report, "product-structure");
  REQUIRE(c != nullptr);
  CHECK(c->status == CheckStatus::Pass);
}

TEST_CASE("sampling is deterministic and distinct") {
  const auto a = sample_indices(1000, 50, 9);
  CHECK(a == sample_indices(1000, 50, 9));
  CHECK(a != sample_indices(1000, 50, 10));
  std::set<std::size_t> distinct(a.begin(), a.end());
  CHECK(distinct.size() == 50);
  CHECK(sample_indices(10, 50, 1).size() == 10);
}

}
