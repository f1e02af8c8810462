#pragma once

// The F-triangle / M-triangle identity
//   (1-y)^n F((x+y)/(1-y), y/(1-y)) = M(-x, -y/x)
// computed as exact integer polynomials, plus the battery of structural
// checks on the lattice and the cluster complex that surround it.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "coxcat/cluster.hpp"
#include "coxcat/nclattice.hpp"
#include "coxcat/triangles.hpp"

namespace coxcat {

/// sum f_kl (x+y)^k y^l (1-y)^(n-k-l). Throws ArgumentError if some nonzero
/// f_kl has k + l > n.
BiPoly lhs_transform(const BiPoly& f, int n);

/// M(-x, -y/x) by the monomial map x^k y^l -> (-1)^(k+l) x^(k-l) y^l.
/// A nonzero coefficient with k < l throws InternalError.
BiPoly rhs_transform(const BiPoly& m);
/// sum over pairs a <= b of mu(a^-1 b) (-x)^(r(b)-r(a)) y^r(a).
BiPoly rhs_transform(const NCLattice& lat);

/// sum over positive faces sigma of x^|sigma| h(lk sigma, y).
BiPoly lhs_by_links(const ClusterComplex& cx);
/// sum over positive faces sigma of x^|sigma| times the rank generating
/// polynomial of [1, gamma w_sigma^-1].
BiPoly rhs_by_intervals(const ClusterComplex& cx, const NCLattice& lat);
/// sum over w of (-x)^r(w) mu(w) times the rank generating polynomial of
/// [1, gamma w^-1].
BiPoly rhs_by_complement(const NCLattice& lat);

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct SubCheck {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  /// What was checked (counts, sampling), or the counterexample on failure.
  std::string detail;
};

struct VerificationReport {
  std::string type_spec;
  int n = 0;
  CheckStatus status = CheckStatus::Pass;
  BiPoly lhs;
  BiPoly rhs;
  BiPoly residual;
  bool equal = false;
  std::vector<SubCheck> sub_checks;
  std::vector<std::pair<std::string, double>> timings;  // seconds

  bool passed() const { return status == CheckStatus::Pass; }
};

enum class VerifyScope { Identity, All };

struct VerifyOptions {
  VerifyScope scope = VerifyScope::All;
  std::uint64_t seed = 1;
  std::size_t face_budget = 10'000'000;
  /// Links are checked on every face up to this many faces, otherwise on
  /// `link_samples` distinct faces drawn with `seed`.
  std::size_t link_exhaustive_limit = 2000;
  std::size_t link_samples = 500;
  /// Subsets of the vertex set are scanned for rotation invariance up to this rank.
  int exhaustive_subset_rank = 3;
  bool record_timings = false;
};

/// Runs the identity (and for VerifyScope::All every sub-check) on prebuilt
/// artifacts. `lat` and `cx` must belong to the same root system.
VerificationReport verify_fm(const NCLattice& lat, const ClusterComplex& cx, const VerifyOptions& options = {});
/// Builds the lattice and the complex first. A BudgetExceeded during
/// enumeration yields a report with status Skipped.
VerificationReport verify_fm(std::shared_ptr<const RootSystem> rs, const VerifyOptions& options = {});

/// Deterministic choice of `count` distinct indices out of [0, size), by a
/// partial Fisher-Yates shuffle driven by mt19937_64(seed).
std::vector<std::size_t> sample_indices(std::size_t size, std::size_t count, std::uint64_t seed);

}  // namespace coxcat
