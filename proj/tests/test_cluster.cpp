#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "coxcat/cluster.hpp"
#include "oracles.hpp"

using namespace coxcat;

namespace {

std::shared_ptr<const ClusterModel> model_for(const std::string& label) {
  return std::make_shared<const ClusterModel>(build_root_system(label));
}

int vertex_with_coords(const ClusterModel& m, std::vector<FieldScalar> v) {
  const auto root = m.system().find_root(v);
  REQUIRE(root.has_value());
  const auto id = m.vertex_of_root(*root);
  REQUIRE(id.has_value());
  return *id;
}

std::set<std::vector<int>> face_set(const ClusterComplex& cx) {
  std::set<std::vector<int>> out;
  for (const auto& f : cx.faces()) out.insert(f.vertices);
  return out;
}

}  // namespace

TEST_SUITE("cluster") {

TEST_CASE("rho sequence of A1 and A2") {
  auto a1 = build_root_system("A1");
  const auto r1 = rho_sequence(*a1);
  CHECK(r1.sequence.size() == 2);
  CHECK(r1.sequence[0] == a1->simple_roots()[0]);
  CHECK(r1.sequence[1] == a1->negation(a1->simple_roots()[0]));

  auto a2 = build_root_system("A2");
  const auto r2 = rho_sequence(*a2);
  const int a = a2->simple_roots()[0], b = a2->simple_roots()[1];
  const int ab = *a2->find_root({FieldScalar(1), FieldScalar(1)});
  CHECK(r2.sequence == std::vector<int>{a, ab, b, a2->negation(a), a2->negation(ab), a2->negation(b)});
  CHECK(r2.first_index() == 0);
  CHECK(r2.vertex_roots.size() == 5);

  CHECK_THROWS_AS(rho_sequence(*build_root_system("A1xA1")), ArgumentError);
}

TEST_CASE("rho sequence covers the positive roots on every type") {
  for (const std::string label : {"A5", "B4", "D5", "E6", "F4", "H4", "G2", "I2(9)"}) {
    CAPTURE(label);
    auto rs = build_root_system(label);
    const auto r = rho_sequence(*rs);
    std::set<int> first(r.sequence.begin(), r.sequence.begin() + rs->num_positive());
    CHECK(first == std::set<int>(rs->positive_roots().begin(), rs->positive_roots().end()));
    CHECK(static_cast<int>(r.vertex_roots.size()) == rs->num_positive() + rs->rank());
  }
}

TEST_CASE("face element and face predicate in A2") {
  auto m = model_for("A2");
  const int a = vertex_with_coords(*m, {FieldScalar(1), FieldScalar(0)});
  const int ab = vertex_with_coords(*m, {FieldScalar(1), FieldScalar(1)});
  const int neg_a = vertex_with_coords(*m, {FieldScalar(-1), FieldScalar(0)});
  CHECK(face_element(*m, {}).is_identity());
  CHECK(face_element(*m, {a, ab}) == m->gamma());
  CHECK(face_element(*m, {a, ab}) == m->vertex_reflection(ab) * m->vertex_reflection(a));
  CHECK(is_face(*m, {}));
  CHECK(is_face(*m, {a, ab}));
  const std::vector<int> opposite = neg_a < a ? std::vector<int>{neg_a, a} : std::vector<int>{a, neg_a};
  CHECK(face_element(*m, opposite).is_identity());
  CHECK_FALSE(is_face(*m, opposite));
  CHECK_THROWS_AS(face_element(*m, {ab, a}), ArgumentError);
  CHECK_THROWS_AS(face_element(*m, {0, 99}), ArgumentError);
}

TEST_CASE("f-vectors and triangles") {
  CHECK(enumerate_complex(build_root_system("A1")).f_vector() == std::vector<std::int64_t>{1, 2});
  CHECK(enumerate_complex(build_root_system("A2")).f_vector() == std::vector<std::int64_t>{1, 5, 5});
  CHECK(enumerate_complex(build_root_system("B2")).f_vector() == std::vector<std::int64_t>{1, 6, 6});
  CHECK(f_triangle(enumerate_complex(build_root_system("A1"))).to_string() == "1 + x + y");
  CHECK(f_triangle(enumerate_complex(build_root_system("A2"))).to_string() == "1 + 3x + 2y + 2x^2 + 2xy + y^2");
  CHECK(f_triangle(enumerate_complex(build_root_system("B2"))).to_string() == "1 + 4x + 2y + 3x^2 + 2xy + y^2");
}

TEST_CASE("pruned search equals the brute-force subset scan") {
  for (const std::string label : {"A2", "B2", "A3", "B3", "G2", "H3", "I2(7)", "A1xA2"}) {
    CAPTURE(label);
    auto m = model_for(label);
    const auto brute = oracle::faces_by_subsets(*m);
    const std::set<std::vector<int>> expected(brute.begin(), brute.end());
    const auto plain = enumerate_complex(m);
    CHECK(face_set(plain) == expected);
    const auto lat = noncrossing_lattice(m->system_ptr());
    ComplexOptions opts;
    opts.lattice = &lat;
    const auto fast = enumerate_complex(m, opts);
    CHECK(face_set(fast) == expected);
    for (std::size_t i = 0; i < fast.num_faces(); ++i) {
      CHECK(fast.face_w(i) == face_element(*m, fast.face(i).vertices));
      CHECK(fast.face_w(i) == plain.face_w(i));
    }
  }
}

TEST_CASE("face counts") {
  const std::vector<std::pair<std::string, std::size_t>> table{
      {"A3", 45}, {"H3", 99}, {"D4", 233}, {"F4", 477}, {"I2(7)", 19}};
  for (const auto& [label, count] : table) {
    CAPTURE(label);
    CHECK(enumerate_complex(build_root_system(label)).num_faces() == count);
  }
}

TEST_CASE("face lookup and masks") {
  const auto cx = enumerate_complex(build_root_system("B3"));
  for (std::size_t i = 0; i < cx.num_faces(); ++i) {
    CHECK(cx.find(cx.mask(i)) == i);
    CHECK(cx.find(cx.face(i).vertices) == i);
    CHECK(from_mask(to_mask(cx.face(i).vertices)) == cx.face(i).vertices);
  }
  const auto [lo, hi] = cx.size_range(3);
  CHECK(hi - lo == 20);
}

TEST_CASE("h-polynomial") {
  CHECK(h_polynomial({1, 2}, 1) == Poly1{1, 1});
  CHECK(h_polynomial({1, 5, 5}, 2) == Poly1{1, 3, 1});
  CHECK(h_polynomial({1}, 0) == Poly1{1});
}

TEST_CASE("links") {
  auto m = model_for("A2");
  const auto cx = enumerate_complex(m);
  const auto whole = link(cx, {});
  std::size_t total = 0;
  for (const auto& by_size : whole) total += by_size.size();
  CHECK(total == cx.num_faces());

  const int a = vertex_with_coords(*m, {FieldScalar(1), FieldScalar(0)});
  const int b = vertex_with_coords(*m, {FieldScalar(0), FieldScalar(1)});
  const int ab = vertex_with_coords(*m, {FieldScalar(1), FieldScalar(1)});
  const auto lk = link(cx, {ab});
  REQUIRE(lk.size() >= 2);
  CHECK(lk[0].size() == 1);
  std::set<std::vector<int>> verts(lk[1].begin(), lk[1].end());
  CHECK(verts == std::set<std::vector<int>>{{a}, {b}});
  for (std::size_t s = 2; s < lk.size(); ++s) CHECK(lk[s].empty());

  const auto facet = link(cx, {a, ab});
  std::size_t facet_total = 0;
  for (const auto& by_size : facet) facet_total += by_size.size();
  CHECK(facet_total == 1);

  const int neg_a = vertex_with_coords(*m, {FieldScalar(-1), FieldScalar(0)});
  std::vector<int> non_face{std::min(a, neg_a), std::max(a, neg_a)};
  CHECK_THROWS_AS(link(cx, non_face), ArgumentError);
}

TEST_CASE("rotation") {
  auto m = model_for("A2");
  const int a = vertex_with_coords(*m, {FieldScalar(1), FieldScalar(0)});
  const int b = vertex_with_coords(*m, {FieldScalar(0), FieldScalar(1)});
  const int neg_a = vertex_with_coords(*m, {FieldScalar(-1), FieldScalar(0)});
  const int neg_b = vertex_with_coords(*m, {FieldScalar(0), FieldScalar(-1)});
  CHECK(m->system().in_pi_plus(0));
  CHECK(rotation_R(*m, a) == neg_a);
  CHECK(rotation_R(*m, neg_b) == b);
  CHECK(rotation_R(*m, b) == a);

  for (const std::string label : {"A3", "B3", "H3", "A1xA2"}) {
    CAPTURE(label);
    const auto cx = enumerate_complex(build_root_system(label));
    const auto& model = cx.model();
    for (const auto& f : cx.faces()) CHECK(cx.find(rotate_face(model, f.vertices)).has_value());
    std::set<int> image;
    for (int v = 0; v < model.num_vertices(); ++v) image.insert(rotation_R(model, v));
    CHECK(static_cast<int>(image.size()) == model.num_vertices());
  }
}

TEST_CASE("positive subcomplexes") {
  auto rs = build_root_system("A2");
  const auto cx = enumerate_complex(rs);
  const auto fibres = positive_subcomplexes(cx);
  CHECK(fibres.at(identity_element(*rs)) == 1);
  CHECK(fibres.at(coxeter_element(*rs)) == 2);
  for (int r : rs->positive_roots()) CHECK(fibres.at(reflection(*rs, r)) == 1);
  std::int64_t total = 0;
  for (const auto& entry : fibres) total += entry.second;
  std::int64_t positive_faces = 0;
  for (const auto& f : cx.faces()) positive_faces += f.l == 0;
  CHECK(total == positive_faces);
}

TEST_CASE("joins of components") {
  const auto whole = enumerate_complex(build_root_system("A1xA2"));
  CHECK(f_triangle(whole) == f_triangle(enumerate_complex(build_root_system("A1"))) *
                                 f_triangle(enumerate_complex(build_root_system("A2"))));
}

TEST_CASE("face budget") {
  ComplexOptions opts;
  opts.face_budget = 10;
  CHECK_THROWS_AS(enumerate_complex(build_root_system("A3"), opts), BudgetExceeded);
}

}
