// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coxcat/cli.hpp"
#include "coxcat/identity.hpp"
#include "oracles.hpp"

using namespace coxcat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct TypeData {
  std::string label;
  std::shared_ptr<const RootSystem> rs;
  std::unique_ptr<NCLattice> lat;
  std::unique_ptr<ClusterComplex> cx;
  double build_seconds = 0;
  bool identity_ok = false;
  VerificationReport report;
};

struct Criterion {
  Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

  int number;
  std::string title;
  bool ok = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    ok = false;
    notes.push_back(why);
  }
};

const SubCheck* sub_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.sub_checks)
    if (c.name == name) return &c;
  return nullptr;
}

TypeData build(const std::string& label) {
  TypeData d;
  d.label = label;
  const auto t0 = Clock::now();
  d.rs = build_root_system(label);
  d.lat = std::make_unique<NCLattice>(noncrossing_lattice(d.rs));
  ComplexOptions co;
  co.face_budget = 100'000'000;
  co.lattice = d.lat.get();
  d.cx = std::make_unique<ClusterComplex>(enumerate_complex(d.rs, co));
  const BiPoly lhs = lhs_transform(f_triangle(*d.cx), d.rs->rank());
  const BiPoly rhs = rhs_transform(*d.lat);
  d.identity_ok = (lhs - rhs).is_zero() && rhs_transform(m_triangle(*d.lat)) == rhs;
  d.build_seconds = seconds_since(t0);
  return d;
}

// Criterion 1: the identity, with the runtime bounds.
void identity_criterion(Criterion& c, const std::vector<TypeData>& all) {
  for (const auto& d : all) {
    if (!d.identity_ok) c.fail(d.label + ": residual is nonzero");
    double limit = 1.0;
    if (d.label == "E6") limit = 120.0;
    if (d.label == "H4" || d.label == "E7") limit = 900.0;
    if (d.rs->rank() <= 4 || limit > 1.0) {
      if (d.build_seconds > limit) {
        std::ostringstream os;
        os << d.label << " took " << d.build_seconds << " s (limit " << limit << " s)";
        c.fail(os.str());
      }
    }
  }
  double slowest_small = 0;
  for (const auto& d : all)
    if (d.rs->rank() <= 4) slowest_small = std::max(slowest_small, d.build_seconds);
  std::ostringstream os;
  os << all.size() << " types including H4 and E7; slowest rank <= 4: " << slowest_small << " s";
  for (const auto& d : all)
    if (d.label == "E6" || d.label == "H4" || d.label == "E7") os << "; " << d.label << " " << d.build_seconds << " s";
  c.notes.push_back(os.str());
}

void catalan_criterion(Criterion& c, const std::map<std::string, const TypeData*>& by_label) {
  const std::vector<std::size_t> catalan{2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 6; ++n) {
    const TypeData& d = *by_label.at("A" + std::to_string(n));
    const auto [lo, hi] = d.cx->size_range(n);
    if (d.lat->size() != catalan[n - 1] || hi - lo != catalan[n - 1])
      c.fail("A" + std::to_string(n) + ": lattice " + std::to_string(d.lat->size()) + ", facets " +
             std::to_string(hi - lo));
  }
}

void narayana_criterion(Criterion& c, const std::vector<TypeData>& all) {
  for (const auto& d : all) {
    const Poly1 h = h_polynomial(d.cx->f_vector(), d.rs->rank());
    const Poly1 rg = rank_generating_poly(*d.lat);
    if (!(h == rg)) c.fail(d.label + ": h = " + h.to_string() + ", rank poly = " + rg.to_string());
  }
}

void mobius_criterion(Criterion& c, const std::vector<TypeData>& all) {
  std::size_t checked = 0;
  for (const auto& d : all) {
    const auto fibres = positive_subcomplexes(*d.cx);
    const int n = d.rs->rank();
    std::vector<std::int64_t> mobius_by_rank(n + 1, 0);
    for (std::size_t i = 0; i < d.lat->size(); ++i) {
      const int r = d.lat->rank(i);
      const std::int64_t signed_mu = (r % 2 ? -1 : 1) * d.lat->mobius(i);
      const auto it = fibres.find(d.lat->element(i));
      const std::int64_t facets = it == fibres.end() ? 0 : it->second;
      if (signed_mu != facets) c.fail(d.label + ": element " + std::to_string(i) + " disagrees");
      mobius_by_rank[r] += d.lat->mobius(i);
      ++checked;
    }
    std::vector<std::int64_t> positive_faces(n + 1, 0);
    for (const auto& f : d.cx->faces())
      if (f.l == 0) ++positive_faces[f.vertices.size()];
    const Poly1 chi = characteristic_poly(*d.lat);
    for (int k = 0; k <= n; ++k) {
      const std::int64_t expected = (k % 2 ? -1 : 1) * positive_faces[k];
      if (mobius_by_rank[k] != expected || chi.coeff(k) != expected)
        c.fail(d.label + ": q^" + std::to_string(k) + " coefficient differs from the positive face count");
    }
  }
  c.notes.push_back(std::to_string(checked) + " lattice elements");
}

// h(link of s) equals the rank polynomial of the interval below gamma w_s^-1.
bool link_identity_holds(const TypeData& d, std::size_t face, LengthCache& lengths,
                         std::map<Perm, Poly1>& memo) {
  const int n = d.rs->rank();
  const auto& f = d.cx->face(face);
  const Poly1 h = h_polynomial(link_f_vector(*d.cx, d.cx->mask(face)), n - static_cast<int>(f.vertices.size()));
  const GroupElement target = d.cx->model().gamma() * inverse(d.cx->face_w(face));
  auto it = memo.find(target.perm());
  if (it == memo.end())
    it = memo.emplace(target.perm(), rank_generating_poly(enumerate_interval(target, d.rs, &lengths))).first;
  return h == it->second;
}

void link_criterion(Criterion& c, const std::map<std::string, const TypeData*>& by_label) {
  constexpr std::size_t kSamples = 500;
  constexpr std::uint64_t kSeed = 1;
  for (const char* label : {"A3", "B3", "H3", "A1xA2", "A4", "D4", "F4", "E6"}) {
    const TypeData& d = *by_label.at(label);
    const bool sampled_type = std::string(label) == "A4" || std::string(label) == "D4" ||
                              std::string(label) == "F4" || std::string(label) == "E6";
    std::vector<std::size_t> chosen;
    std::string how;
    if (!sampled_type || d.cx->num_faces() <= kSamples) {
      chosen.resize(d.cx->num_faces());
      for (std::size_t i = 0; i < chosen.size(); ++i) chosen[i] = i;
      how = "all " + std::to_string(chosen.size());
    } else {
      chosen = sample_indices(d.cx->num_faces(), kSamples, kSeed);
      how = std::to_string(chosen.size()) + " sampled (seed " + std::to_string(kSeed) + ")";
    }
    LengthCache lengths;
    std::map<Perm, Poly1> memo;
    std::size_t bad = 0;
    for (std::size_t i : chosen) bad += !link_identity_holds(d, i, lengths, memo);
    if (bad) c.fail(std::string(label) + ": " + std::to_string(bad) + " faces disagree");
    c.notes.push_back(std::string(label) + " " + how + " of " + std::to_string(d.cx->num_faces()));
  }
}

void length_oracle_criterion(Criterion& c) {
  const auto t0 = Clock::now();
  std::size_t total = 0;
  for (const char* label : {"A3", "B3", "H3", "A4"}) {
    auto rs = build_root_system(label);
    const auto dist = oracle::cayley_t_distance(*rs);
    std::size_t agree = 0;
    for (const auto& [w, d] : dist) agree += reflection_length(w) == d;
    if (agree != dist.size())
      c.fail(std::string(label) + ": " + std::to_string(dist.size() - agree) + " elements disagree");
    total += dist.size();
  }
  const double secs = seconds_since(t0);
  if (total != 24 + 48 + 120 + 120) c.fail("group orders total " + std::to_string(total));
  if (secs > 10.0) c.fail("took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << total << " elements in " << secs << " s";
  c.notes.push_back(os.str());
}

void structure_criterion(Criterion& c, const std::vector<TypeData>& all) {
  for (const auto& d : all) {
    const int n = d.rs->rank();
    // Each rho-sequence is verified when the model is built; recheck the positive block here.
    for (std::size_t comp = 0; comp < d.rs->components().size(); ++comp) {
      const RhoSequence& r = d.cx->model().rho()[comp];
      std::set<int> first(r.sequence.begin(), r.sequence.begin() + r.num_positive);
      std::set<int> pos;
      for (int root : d.rs->positive_roots())
        if (d.rs->component_of_root(root) == static_cast<int>(comp)) pos.insert(root);
      if (first != pos) c.fail(d.label + ": first N terms of rho are not the positive roots");
    }

    // Purity: every non-facet face extends by one vertex.
    for (std::size_t i = 0; i < d.cx->num_faces(); ++i) {
      const auto& f = d.cx->face(i).vertices;
      if (static_cast<int>(f.size()) == n) continue;
      bool extends = false;
      for (int v = 0; v < d.cx->model().num_vertices() && !extends; ++v) {
        VertexMask m = d.cx->mask(i);
        if (m.test(v)) continue;
        m.set(v);
        extends = d.cx->find(m).has_value();
      }
      if (!extends) {
        c.fail(d.label + ": a face of size " + std::to_string(f.size()) + " is maximal");
        break;
      }
    }
    const auto fv = d.cx->f_vector();
    if (static_cast<int>(fv.size()) != n + 1) c.fail(d.label + ": wrong dimension");
    std::int64_t chi = 0;
    for (std::size_t s = 1; s < fv.size(); ++s) chi += (s % 2 ? 1 : -1) * fv[s];
    if (chi != (n % 2 ? 2 : 0)) c.fail(d.label + ": Euler characteristic " + std::to_string(chi));

    // Graded, and w -> w^-1 gamma reverses rank and order.
    const GroupElement gamma = coxeter_element(*d.rs);
    std::vector<std::size_t> dual(d.lat->size());
    bool dual_ok = true;
    for (std::size_t i = 0; i < d.lat->size(); ++i) {
      for (std::size_t j : d.lat->covers(i))
        if (d.lat->rank(j) != d.lat->rank(i) + 1) c.fail(d.label + ": cover skips a rank");
      const auto k = d.lat->index_of(inverse(d.lat->element(i)) * gamma);
      if (!k || d.lat->rank(*k) != n - d.lat->rank(i)) {
        c.fail(d.label + ": w^-1 gamma leaves the lattice or keeps rank");
        dual_ok = false;
        break;
      }
      dual[i] = *k;
    }
    if (dual_ok)
      for (std::size_t i = 0; i < d.lat->size(); ++i)
        for (std::size_t j : d.lat->covers(i))
          if (!d.lat->leq(dual[j], dual[i])) c.fail(d.label + ": duality does not reverse order");

    for (const char* name : {"parabolic-restriction", "rotation-orbits", "rotation-invariance"}) {
      const SubCheck* s = sub_check(d.report, name);
      if (!s || s->status != CheckStatus::Pass) c.fail(d.label + ": " + name);
    }
  }
  c.notes.push_back("rotation invariance exhaustive through rank 3, sampled above");
}

std::string run_cli_capture(const std::vector<std::string>& args, int& code) {
  std::vector<const char*> argv{"coxcat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

void determinism_criterion(Criterion& c, const std::vector<TypeData>& all) {
  const std::vector<std::string> args{"--no-cache", "verify", "all", "--max-rank", "4"};
  int code1 = 0, code2 = 0;
  const std::string first = run_cli_capture(args, code1);
  const std::string second = run_cli_capture(args, code2);
  if (first != second) c.fail("two runs of verify all --max-rank 4 differ");
  if (code1 != kExitOk || code2 != kExitOk) c.fail("verify all --max-rank 4 did not pass");

  std::size_t relabelled = 0;
  for (const auto& d : all) {
    if (d.rs->rank() < 2 || d.rs->rank() > 6) continue;
    const TypeSpec spec = TypeSpec::parse(d.label);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      BuildOptions bo;
      bool moved = false;
      for (std::size_t comp = 0; comp < spec.components.size(); ++comp) {
        const int r = spec.components[comp].rank;
        auto perm = sample_indices(r, r, seed * 31 + comp);
        if (std::is_sorted(perm.begin(), perm.end())) std::reverse(perm.begin(), perm.end());
        moved |= r > 1;
        bo.simple_order.emplace_back(perm.begin(), perm.end());
      }
      if (!moved) continue;
      auto rs = build_root_system(spec, bo);
      const NCLattice lat = noncrossing_lattice(rs);
      ComplexOptions co;
      co.lattice = &lat;
      const ClusterComplex cx = enumerate_complex(rs, co);
      const bool same = cx.f_kl() == d.cx->f_kl() && m_triangle(lat) == m_triangle(*d.lat) &&
                        rank_generating_poly(lat) == rank_generating_poly(*d.lat) &&
                        characteristic_poly(lat) == characteristic_poly(*d.lat) &&
                        h_polynomial(cx.f_vector(), rs->rank()) == h_polynomial(d.cx->f_vector(), rs->rank());
      if (!same) c.fail(d.label + ": relabelling with seed " + std::to_string(seed) + " changes the census");
      ++relabelled;
    }
  }
  c.notes.push_back("reports byte-identical; " + std::to_string(relabelled) + " relabelled systems agree");
}

}  // namespace

int main() {
  std::vector<TypeData> all;
  for (const auto& label : default_types(true, false)) {
    all.push_back(build(label));
    VerifyOptions opts;
    opts.face_budget = 100'000'000;
    all.back().report = verify_fm(*all.back().lat, *all.back().cx, opts);
  }
  std::map<std::string, const TypeData*> by_label;
  for (const auto& d : all) by_label[d.label] = &d;

  std::vector<Criterion> crits{{1, "identity holds exactly on every default type"},
                               {2, "Catalan counts for A1..A6"},
                               {3, "h-polynomial equals the rank generating polynomial"},
                               {4, "signed Moebius values count positive facets"},
                               {5, "link h-polynomials match lower intervals"},
                               {6, "reflection length equals Cayley distance"},
                               {7, "structural invariants"},
                               {8, "determinism and relabelling invariance"}};
  identity_criterion(crits[0], all);
  catalan_criterion(crits[1], by_label);
  narayana_criterion(crits[2], all);
  mobius_criterion(crits[3], all);
  link_criterion(crits[4], by_label);
  length_oracle_criterion(crits[5]);
  structure_criterion(crits[6], all);
  determinism_criterion(crits[7], all);

  bool all_ok = true;
  for (const auto& c : crits) {
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title;
    for (const auto& note : c.notes) std::cout << " | " << note;
    std::cout << "\n";
    all_ok &= c.ok;
  }
  return all_ok ? 0 : 1;
}
