#include "coxcat/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <unordered_set>

namespace coxcat {

Json root_to_json(const RootSystem& rs, int root) {
  Json out = Json::array();
  if (rs.has_coordinates(root)) {
    for (const FieldScalar& c : rs.coords(root)) out.push_back(c.to_string());
    return out;
  }
  const Component& comp = rs.components()[rs.component_of_root(root)];
  out.push_back("pi*" + std::to_string(comp.angle[root - comp.root_offset]) + "/" + std::to_string(comp.m));
  return out;
}

Json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json bipoly_to_json(const BiPoly& p) {
  Json coeff = Json::array();
  for (const auto& row : p.grid()) {
    Json r = Json::array();
    for (const mpz_class& c : row) r.push_back(integer_to_json(c));
    coeff.push_back(std::move(r));
  }
  return Json{{"deg_x", std::max(p.deg_x(), 0)}, {"deg_y", std::max(p.deg_y(), 0)}, {"coeff", std::move(coeff)}};
}

Json poly_to_json(const Poly1& p) {
  Json out = Json::array();
  for (const mpz_class& c : p.coeffs()) out.push_back(integer_to_json(c));
  if (out.empty()) out.push_back(0);
  return out;
}

Json complex_to_json(const ClusterComplex& cx) {
  const ClusterModel& model = cx.model();
  Json vertices = Json::array();
  for (int v = 0; v < model.num_vertices(); ++v) {
    const VertexInfo& info = model.vertex(v);
    vertices.push_back(Json{{"id", v},
                            {"root", root_to_json(cx.system(), info.root)},
                            {"class", info.positive ? "pos" : "neg_simple"}});
  }
  Json facets = Json::array();
  const auto [b, e] = cx.size_range(cx.rank());
  for (std::size_t i = b; i < e; ++i) facets.push_back(cx.face(i).vertices);
  return Json{{"type", cx.system().label()},
              {"n", cx.rank()},
              {"vertices", std::move(vertices)},
              {"facets", std::move(facets)},
              {"f_kl", cx.f_kl()}};
}

Json lattice_to_json(const NCLattice& lat) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i)
    elements.push_back(Json{{"id", i}, {"rank", lat.rank(i)}, {"perm", lat.element(i).perm()}});
  Json covers = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j : lat.covers(i)) covers.push_back(Json::array({i, j}));
  return Json{{"type", lat.system().label()},
              {"n", lat.max_rank()},
              {"elements", std::move(elements)},
              {"covers", std::move(covers)},
              {"mobius", lat.mobius()}};
}

namespace {

void expect(bool cond, const std::string& what) {
  if (!cond) throw DataError(what);
}

void check_header(const Json& j, const RootSystem& rs) {
  expect(j.is_object(), "payload is not an object");
  expect(j.value("type", std::string()) == rs.label(), "payload is for a different type");
  expect(j.value("n", -1) == rs.rank(), "payload has a different rank");
}

}  // namespace

NCLattice lattice_from_json(const Json& j, std::shared_ptr<const RootSystem> rs) {
  try {
    check_header(j, *rs);
    std::vector<GroupElement> elements;
    std::vector<int> ranks;
    const auto& items = j.at("elements");
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& e = items[i];
      expect(e.at("id").get<std::size_t>() == i, "element ids are not consecutive");
      auto perm = e.at("perm").get<Perm>();
      expect(perm.size() == static_cast<std::size_t>(rs->num_roots()), "permutation of the wrong length");
      for (auto p : perm) expect(p < rs->num_roots(), "permutation entry out of range");
      elements.emplace_back(*rs, std::move(perm));
      ranks.push_back(e.at("rank").get<int>());
    }
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (const auto& c : j.at("covers")) {
      const auto a = c.at(0).get<std::size_t>();
      const auto b = c.at(1).get<std::size_t>();
      expect(a < elements.size() && b < elements.size(), "cover index out of range");
      covers.emplace_back(a, b);
    }
    NCLattice lat(std::move(rs), std::move(elements), std::move(ranks), covers);
    expect(lat.mobius() == j.at("mobius").get<std::vector<std::int64_t>>(), "stored Mobius values disagree");
    for (std::size_t i = 0; i < lat.size(); ++i)
      expect(lat.element(i).perm() == items[i].at("perm").get<Perm>(), "elements are not in canonical order");
    return lat;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed lattice payload: ") + e.what());
  } catch (const ArgumentError& e) {
    throw DataError(std::string("inconsistent lattice payload: ") + e.what());
  }
}

ClusterComplex complex_from_json(const Json& j, std::shared_ptr<const RootSystem> rs) {
  try {
    check_header(j, *rs);
    auto model = std::make_shared<const ClusterModel>(rs);
    const auto& vertices = j.at("vertices");
    expect(vertices.size() == static_cast<std::size_t>(model->num_vertices()), "vertex count differs");
    for (int v = 0; v < model->num_vertices(); ++v) {
      const auto& item = vertices[v];
      const VertexInfo& info = model->vertex(v);
      expect(item.at("id").get<int>() == v, "vertex ids are not consecutive");
      expect(item.at("root") == root_to_json(*rs, info.root), "vertex root differs");
      expect(item.at("class").get<std::string>() == (info.positive ? "pos" : "neg_simple"), "vertex class differs");
    }
    // Faces are the subsets of facets.
    std::unordered_set<VertexMask> masks;
    for (const auto& f : j.at("facets")) {
      const auto ids = f.get<std::vector<int>>();
      expect(static_cast<int>(ids.size()) == rs->rank(), "facet of the wrong size");
      for (int v : ids) expect(v >= 0 && v < model->num_vertices(), "facet vertex out of range");
      expect(std::is_sorted(ids.begin(), ids.end()) && is_face(*model, ids), "stored facet is not a face");
      for (std::uint32_t sub = 0; sub < (1u << ids.size()); ++sub) {
        VertexMask m;
        for (std::size_t t = 0; t < ids.size(); ++t)
          if (sub >> t & 1u) m.set(ids[t]);
        masks.insert(m);
      }
    }
    if (masks.empty()) masks.insert(VertexMask());
    std::vector<Face> faces;
    std::vector<GroupElement> ws;
    for (const VertexMask& m : masks) {
      Face f{from_mask(m), 0, 0};
      for (int v : f.vertices) (model->vertex(v).positive ? f.k : f.l) += 1;
      ws.push_back(face_element(*model, f.vertices));
      faces.push_back(std::move(f));
    }
    ClusterComplex cx(std::move(model), std::move(faces), std::move(ws));
    expect(cx.f_kl() == j.at("f_kl").get<std::vector<std::vector<std::int64_t>>>(), "stored f_kl disagrees");
    return cx;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed complex payload: ") + e.what());
  } catch (const ArgumentError& e) {
    throw DataError(std::string("inconsistent complex payload: ") + e.what());
  }
}

Json report_to_json(const VerificationReport& r, bool timings) {
  Json checks = Json::array();
  for (const SubCheck& c : r.sub_checks)
    checks.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  Json out{{"type", r.type_spec},
           {"n", r.n},
           {"status", to_string(r.status)},
           {"equal", r.equal},
           {"lhs", bipoly_to_json(r.lhs)},
           {"rhs", bipoly_to_json(r.rhs)},
           {"residual", bipoly_to_json(r.residual)},
           {"sub_checks", std::move(checks)}};
  if (timings) {
    Json t = Json::object();
    for (const auto& [name, s] : r.timings) t[name] = s;
    out["timings"] = std::move(t);
  }
  return out;
}

std::string report_to_text(const VerificationReport& r, bool timings) {
  std::ostringstream os;
  os << r.type_spec << " (n=" << r.n << "): " << to_string(r.status) << "\n";
  for (const SubCheck& c : r.sub_checks)
    os << "  " << std::left << std::setw(26) << c.name << std::setw(9) << to_string(c.status) << c.detail << "\n";
  if (timings)
    for (const auto& [name, s] : r.timings)
      os << "  time " << std::left << std::setw(21) << name << std::fixed << std::setprecision(3) << s << " s\n";
  return os.str();
}

}  // namespace coxcat
