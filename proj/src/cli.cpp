#include "coxcat/cli.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "coxcat/cache.hpp"
#include "coxcat/identity.hpp"

namespace coxcat {

std::vector<std::string> default_types(bool large, bool huge) {
  std::vector<std::string> types{"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "D4", "D5",
                                 "F4", "G2", "H3", "E6"};
  for (int m = 3; m <= 10; ++m) types.push_back("I2(" + std::to_string(m) + ")");
  types.insert(types.end(), {"A1xA1", "A1xA2", "A2xB2"});
  if (large || huge) types.insert(types.end(), {"H4", "E7"});
  if (huge) types.push_back("E8");
  return types;
}

namespace {

constexpr std::size_t kDefaultBudget = 10'000'000;
constexpr std::size_t kLargeBudget = 100'000'000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Refuses types that need --large / --huge.
void check_gate(const TypeSpec& spec, bool large, bool huge) {
  for (const TypeComponent& c : spec.components) {
    if (c.family == 'E' && c.rank == 8 && !huge)
      throw BudgetExceeded("E8 needs --huge (about 100 s and 1 GB of memory)");
    if (((c.family == 'E' && c.rank == 7) || (c.family == 'H' && c.rank == 4)) && !large && !huge)
      throw BudgetExceeded(c.to_string() + " needs --large");
  }
}

/// Lattices and complexes, served from the cache when possible.
class Workspace {
 public:
  Workspace(ArtifactCache cache, std::size_t budget) : cache_(std::move(cache)), budget_(budget) {}

  NCLattice lattice(const std::shared_ptr<const RootSystem>& rs, std::vector<std::string>& warnings) const {
    const CacheKey key{rs->label(), "lattice"};
    if (auto payload = cache_.load(key)) {
      try {
        return lattice_from_json(*payload, rs);
      } catch (const DataError& e) {
        warnings.push_back("ignoring cached lattice for " + rs->label() + ": " + e.what());
      }
    }
    NCLattice lat = noncrossing_lattice(rs);
    save(key, lattice_to_json(lat), warnings);
    return lat;
  }

  ClusterComplex complex(const std::shared_ptr<const RootSystem>& rs, const NCLattice* lat,
                         std::vector<std::string>& warnings) const {
    const CacheKey key{rs->label(), "complex"};
    if (auto payload = cache_.load(key)) {
      try {
        return complex_from_json(*payload, rs);
      } catch (const DataError& e) {
        warnings.push_back("ignoring cached complex for " + rs->label() + ": " + e.what());
      }
    }
    ClusterComplex cx = enumerate_complex(rs, {budget_, lat});
    save(key, complex_to_json(cx), warnings);
    return cx;
  }

  std::size_t budget() const { return budget_; }

 private:
  void save(const CacheKey& key, const Json& payload, std::vector<std::string>& warnings) const {
    try {
      cache_.store(key, payload);
    } catch (const IoError& e) {
      warnings.push_back(std::string("cache not written: ") + e.what());
    } catch (const std::filesystem::filesystem_error& e) {
      warnings.push_back(std::string("cache not written: ") + e.what());
    }
  }

  ArtifactCache cache_;
  std::size_t budget_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string render_counts(const std::vector<mpz_class>& c) {
  std::vector<std::string> s;
  for (const auto& v : c) s.push_back(v.get_str());
  return join(s, ", ");
}

struct ComputeArgs {
  std::string what;
  std::string spec;
  std::string format = "text";
};

void render_bipoly(std::ostream& out, const std::string& format, const Json& head, const BiPoly& p) {
  if (format == "json") {
    Json j = head;
    j["value"] = bipoly_to_json(p);
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "k,l,coeff\n";
    const auto g = p.grid();
    for (std::size_t k = 0; k < g.size(); ++k)
      for (std::size_t l = 0; l < g[k].size(); ++l) out << k << "," << l << "," << g[k][l].get_str() << "\n";
  } else {
    out << p.to_string() << "\n";
  }
}

void render_poly(std::ostream& out, const std::string& format, const Json& head, const Poly1& p, char var,
                 bool as_list) {
  if (format == "json") {
    Json j = head;
    j["value"] = poly_to_json(p);
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "k,coeff\n";
    for (int k = 0; k <= std::max(p.degree(), 0); ++k) out << k << "," << p.coeff(k).get_str() << "\n";
  } else if (as_list) {
    out << render_counts(p.is_zero() ? std::vector<mpz_class>{0} : p.coeffs()) << "\n";
  } else {
    out << p.to_string(var) << "\n";
  }
}

int cmd_compute(const ComputeArgs& a, const Workspace& ws, bool large, bool huge, std::ostream& out,
                std::ostream& err) {
  const TypeSpec spec = TypeSpec::parse(a.spec);
  check_gate(spec, large, huge);
  const auto rs = build_root_system(spec);
  std::vector<std::string> warnings;
  const Json head{{"type", rs->label()}, {"what", a.what}};
  const bool needs_complex = a.what == "f-triangle" || a.what == "h-poly" || a.what == "f-vector" || a.what == "facets";
  const NCLattice lat = ws.lattice(rs, warnings);
  if (needs_complex) {
    const ClusterComplex cx = ws.complex(rs, &lat, warnings);
    const auto fv = cx.f_vector();
    if (a.what == "f-triangle") {
      render_bipoly(out, a.format, head, f_triangle(cx));
    } else if (a.what == "h-poly") {
      render_poly(out, a.format, head, h_polynomial(fv, cx.rank()), 'y', false);
    } else if (a.what == "f-vector") {
      std::vector<mpz_class> c;
      for (auto v : fv) c.emplace_back(static_cast<long>(v));
      if (a.format == "json") {
        Json j = head;
        j["value"] = fv;
        out << j.dump(2) << "\n";
      } else if (a.format == "csv") {
        out << "dim,count\n";
        for (std::size_t i = 0; i < fv.size(); ++i) out << static_cast<long>(i) - 1 << "," << fv[i] << "\n";
      } else {
        out << render_counts(c) << "\n";
      }
    } else {
      const auto [b, e] = cx.size_range(cx.rank());
      if (a.format == "json") {
        Json j = head;
        j["value"] = e - b;
        out << j.dump(2) << "\n";
      } else if (a.format == "csv") {
        out << "facets\n" << (e - b) << "\n";
      } else {
        out << (e - b) << "\n";
      }
    }
  } else if (a.what == "m-triangle") {
    render_bipoly(out, a.format, head, m_triangle(lat));
  } else if (a.what == "rank-gen") {
    render_poly(out, a.format, head, rank_generating_poly(lat), 'y', false);
  } else if (a.what == "narayana") {
    render_poly(out, a.format, head, rank_generating_poly(lat), 'y', true);
  } else if (a.what == "char-poly") {
    render_poly(out, a.format, head, characteristic_poly(lat), 'q', false);
  }
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string scope;
  std::string spec;
  int max_rank = -1;
  bool large = false;
  bool huge = false;
  std::uint64_t seed = 1;
  std::string format = "text";
  unsigned jobs = 1;
  bool timings = false;
};

int cmd_verify(const VerifyArgs& a, const Workspace& ws, std::ostream& out, std::ostream& err) {
  std::vector<TypeSpec> specs;
  if (!a.spec.empty()) {
    specs.push_back(TypeSpec::parse(a.spec));
    check_gate(specs.back(), a.large, a.huge);
  } else {
    for (const std::string& t : default_types(a.large, a.huge)) {
      TypeSpec s = TypeSpec::parse(t);
      if (a.max_rank < 0 || s.rank() <= a.max_rank) specs.push_back(std::move(s));
    }
  }

  VerifyOptions opt;
  opt.scope = a.scope == "fm" ? VerifyScope::Identity : VerifyScope::All;
  opt.seed = a.seed;
  opt.face_budget = ws.budget();
  opt.record_timings = a.timings;

  std::vector<VerificationReport> reports(specs.size());
  std::vector<std::vector<std::string>> warnings(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      const auto rs = build_root_system(specs[i]);
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const NCLattice lat = ws.lattice(rs, warnings[i]);
        const auto t1 = std::chrono::steady_clock::now();
        const ClusterComplex cx = ws.complex(rs, &lat, warnings[i]);
        const auto t2 = std::chrono::steady_clock::now();
        reports[i] = verify_fm(lat, cx, opt);
        if (a.timings) {
          reports[i].timings.insert(reports[i].timings.begin(),
                                    {{"lattice", std::chrono::duration<double>(t1 - t0).count()},
                                     {"complex", std::chrono::duration<double>(t2 - t1).count()}});
        }
      } catch (const BudgetExceeded& e) {
        reports[i].type_spec = rs->label();
        reports[i].n = rs->rank();
        reports[i].status = CheckStatus::Skipped;
        reports[i].sub_checks.push_back({"budget", CheckStatus::Skipped, e.what()});
      } catch (const std::exception& e) {
        reports[i].type_spec = rs->label();
        reports[i].n = rs->rank();
        reports[i].status = CheckStatus::Fail;
        reports[i].sub_checks.push_back({"error", CheckStatus::Fail, e.what()});
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(a.jobs, static_cast<unsigned>(specs.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int passed = 0, failed = 0, skipped = 0;
  for (const auto& r : reports) {
    if (r.status == CheckStatus::Pass) ++passed;
    if (r.status == CheckStatus::Fail) ++failed;
    if (r.status == CheckStatus::Skipped) ++skipped;
  }
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r, a.timings));
    Json j{{"scope", a.scope},
           {"seed", a.seed},
           {"reports", std::move(arr)},
           {"summary", {{"types", reports.size()}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}}}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << report_to_text(r, a.timings);
    out << "summary: " << reports.size() << " types, " << passed << " passed, " << failed << " failed, " << skipped
        << " skipped\n";
  }
  for (const auto& ws_list : warnings)
    for (const auto& w : ws_list) err << "warning: " << w << "\n";
  if (failed) return kExitMismatch;
  if (skipped) return kExitBudget;
  return kExitOk;
}

struct ExportArgs {
  std::string kind;
  std::string spec;
  std::string path;
};

int cmd_export(const ExportArgs& a, const Workspace& ws, bool large, bool huge, std::ostream& err) {
  const TypeSpec spec = TypeSpec::parse(a.spec);
  check_gate(spec, large, huge);
  const auto rs = build_root_system(spec);
  std::vector<std::string> warnings;
  const NCLattice lat = ws.lattice(rs, warnings);
  const Json payload = a.kind == "lattice" ? lattice_to_json(lat) : complex_to_json(ws.complex(rs, &lat, warnings));
  std::ofstream file(a.path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + a.path + " for writing");
  file << payload.dump(2) << "\n";
  if (!file) throw IoError("cannot write " + a.path);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noncrossing partition lattices, cluster complexes and the F/M-triangle identity", "coxcat"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string cache_dir;
  bool no_cache = false;
  bool large = false;
  bool huge = false;
  app.add_option("--cache-dir", cache_dir, "Cache directory (overrides COXCAT_CACHE)");
  app.add_flag("--no-cache", no_cache, "Neither read nor write the cache");

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Compute an invariant of one type");
  compute
      ->add_option("what", ca.what, "f-triangle, m-triangle, h-poly, rank-gen, char-poly, narayana, f-vector, facets")
      ->required()
      ->check(CLI::IsMember(
          {"f-triangle", "m-triangle", "h-poly", "rank-gen", "char-poly", "narayana", "f-vector", "facets"}));
  compute->add_option("spec", ca.spec, "Type, e.g. A3, I2(7), A1xA2")->required();
  compute->add_option("--format", ca.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  compute->add_flag("--large", large, "Allow H4 and E7");
  compute->add_flag("--huge", huge, "Allow E8");

  VerifyArgs va;
  std::size_t budget = 0;
  auto* verify = app.add_subcommand("verify", "Check the identity (fm) or the full battery (all)");
  verify->add_option("scope", va.scope, "fm or all")->required()->check(CLI::IsMember({"fm", "all"}));
  verify->add_option("spec", va.spec, "Type; default: the standard list");
  verify->add_option("--max-rank", va.max_rank, "Only default types up to this rank");
  verify->add_flag("--large", va.large, "Add H4 and E7");
  verify->add_flag("--huge", va.huge, "Add E8");
  verify->add_option("--seed", va.seed, "Seed for sampled checks");
  verify->add_option("--format", va.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--jobs", va.jobs, "Types verified in parallel")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", va.timings, "Include wall-clock timings");
  for (auto* sub : {compute, verify})
    sub->add_option("--budget", budget, "Face budget (default 1e7, 1e8 with --large)");

  ExportArgs ea;
  auto* exp = app.add_subcommand("export", "Write a lattice or complex as JSON");
  exp->add_option("kind", ea.kind, "complex or lattice")->required()->check(CLI::IsMember({"complex", "lattice"}));
  exp->add_option("spec", ea.spec, "Type")->required();
  exp->add_option("path", ea.path, "Output file")->required();
  exp->add_flag("--large", large, "Allow H4 and E7");
  exp->add_flag("--huge", huge, "Allow E8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (va.max_rank >= 0 && !va.spec.empty()) throw UsageError("--max-rank applies to the default type list only");
    const bool any_large = large || huge || va.large || va.huge;
    if (budget == 0) budget = any_large ? kLargeBudget : kDefaultBudget;
    ArtifactCache cache = no_cache ? ArtifactCache::disabled()
                                   : ArtifactCache(cache_dir.empty() ? ArtifactCache::default_dir()
                                                                     : std::filesystem::path(cache_dir));
    const Workspace ws(std::move(cache), budget);
    if (*compute) return cmd_compute(ca, ws, large, huge, out, err);
    if (*verify) return cmd_verify(va, ws, out, err);
    return cmd_export(ea, ws, large, huge, err);
  } catch (const SpecError& e) {
    const auto parsed = app.get_subcommands();
    err << "error: " << e.what() << "\n" << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace coxcat
