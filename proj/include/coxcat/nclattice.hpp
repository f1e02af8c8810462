#pragma once

// The interval [1, w] of the absolute order, in particular the noncrossing
// partition lattice [1, gamma] for a Coxeter element gamma.

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxcat/triangles.hpp"
#include "coxcat/wgroup.hpp"

namespace coxcat {

/// An interval [1, w] in absolute order.
///
/// Elements are sorted by (rank, permutation), so index 0 is the identity and
/// the last index is the top element. The order relation is kept as a dense
/// bit matrix (row i = up-set of i); Mobius values are mu(1, a), and mu(a, b)
/// for a <= b is served as mu(a^-1 b).
class NCLattice {
 public:
  /// Sorts the elements canonically and derives the order relation from the
  /// cover pairs (given as indices into `elements`).
  NCLattice(std::shared_ptr<const RootSystem> rs, std::vector<GroupElement> elements, std::vector<int> ranks,
            const std::vector<std::pair<std::size_t, std::size_t>>& covers);

  const RootSystem& system() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& system_ptr() const { return rs_; }

  std::size_t size() const { return elements_.size(); }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  int rank(std::size_t i) const { return ranks_[i]; }
  int max_rank() const { return ranks_.back(); }
  std::size_t top() const { return elements_.size() - 1; }

  bool leq(std::size_t i, std::size_t j) const {
    return (leq_[i * words_ + j / 64] >> (j % 64)) & 1ULL;
  }
  /// Upper covers of element i.
  const std::vector<std::size_t>& covers(std::size_t i) const { return covers_[i]; }
  std::size_t num_covers() const;
  std::int64_t mobius(std::size_t i) const { return mobius_[i]; }
  const std::vector<std::int64_t>& mobius() const { return mobius_; }

  std::optional<std::size_t> index_of(const GroupElement& w) const;
  std::optional<std::size_t> index_of(const Perm& p) const;

  /// Rank generating polynomial of the down-set [1, element i].
  Poly1 down_set_rank_poly(std::size_t i) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<GroupElement> elements_;
  std::vector<int> ranks_;
  std::vector<std::vector<std::size_t>> covers_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> leq_;
  std::vector<std::int64_t> mobius_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

/// All u with u <= w, discovered rank by rank: from u of rank k the candidates
/// u*t (t in T) of rank k+1 lying below w are kept.
NCLattice enumerate_interval(const GroupElement& w, std::shared_ptr<const RootSystem> rs,
                             LengthCache* lengths = nullptr);
/// [1, gamma] for the bipartite Coxeter element.
NCLattice noncrossing_lattice(std::shared_ptr<const RootSystem> rs, LengthCache* lengths = nullptr);

/// mu(1, a) for every element, by the recursion sum_{b <= a} mu(b) = 0.
std::vector<std::int64_t> mobius_vector(const NCLattice& lat);

/// M(x, y) = sum over pairs a <= b of mu(a, b) x^r(b) y^r(a), summing the
/// pairs of the order relation literally.
BiPoly m_triangle(const NCLattice& lat);
/// Same polynomial grouped by w = a^-1 b, using that a <= aw <= gamma iff
/// a <= gamma w^-1.
BiPoly m_triangle_by_complement(const NCLattice& lat);

Poly1 rank_generating_poly(const NCLattice& lat);
/// sum_w mu(w) q^r(w) (ascending powers of q).
Poly1 characteristic_poly(const NCLattice& lat);

/// Direct product of lattices of the components of `target`. Part i must live
/// on a root system whose roots are, in order, the roots of the target's
/// components consumed so far (see component_system).
NCLattice product_lattice(const std::vector<const NCLattice*>& parts, std::shared_ptr<const RootSystem> target);

/// The root system of component c of `rs` as a standalone system, with
/// roots in the same local order.
std::shared_ptr<const RootSystem> component_system(const RootSystem& rs, int c);

}  // namespace coxcat
