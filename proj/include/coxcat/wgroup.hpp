#pragma once

// Elements of the reflection group W, reflection length and the absolute order.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "coxcat/roots.hpp"

namespace coxcat {

/// An element of W, identified by the permutation it induces on the root list.
///
/// The action on roots is faithful, so equality and hashing use the
/// permutation only. The element does not own its root system; the system
/// must outlive it (root systems are handed out as shared_ptr for this).
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(const RootSystem& rs, Perm perm);

  const RootSystem& system() const { return *rs_; }
  const RootSystem* system_ptr() const { return rs_; }
  const Perm& perm() const { return perm_; }
  /// Image of a root index under the element.
  int operator()(int root) const { return perm_[root]; }
  bool is_identity() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.perm_ == b.perm_; }
  std::size_t hash() const;

 private:
  const RootSystem* rs_ = nullptr;
  Perm perm_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

GroupElement identity_element(const RootSystem& rs);
/// t_alpha for the root with the given index.
GroupElement reflection(const RootSystem& rs, int root);
/// t_alpha for a coordinate vector; throws ArgumentError if alpha is not a root.
GroupElement reflection(const RootSystem& rs, const std::vector<FieldScalar>& alpha);
/// The set T of reflections, one per positive root, in positive-root order.
std::vector<GroupElement> reflections(const RootSystem& rs);

/// Composition as maps on V: (u*v)(x) = u(v(x)). Throws ArgumentError for mixed systems.
GroupElement multiply(const GroupElement& u, const GroupElement& v);
GroupElement inverse(const GroupElement& u);
inline GroupElement operator*(const GroupElement& u, const GroupElement& v) { return multiply(u, v); }

/// Matrix of the element in the simple-root basis: column j holds w(alpha_j).
/// Requires every component to be geometric.
ExactMatrix matrix(const GroupElement& w);
/// Linear action on a coordinate vector (simple-root basis).
std::vector<FieldScalar> apply(const GroupElement& w, const std::vector<FieldScalar>& x);

/// Minimal number of reflections whose product is w. Computed as the
/// codimension of the fixed space, rank(w - I), per geometric component; a
/// dihedral component contributes 0 (identity), 1 (reflection) or 2 (rotation).
int reflection_length(const GroupElement& w);

/// Memoised reflection length keyed by permutation. Not thread-safe; give
/// each worker its own.
class LengthCache {
 public:
  int operator()(const GroupElement& w);
  std::size_t size() const { return cache_.size(); }

 private:
  std::unordered_map<Perm, int, PermHash> cache_;
};

/// u <= v in absolute order: r(u) + r(u^-1 v) = r(v).
bool absolute_leq(const GroupElement& u, const GroupElement& v);
bool absolute_leq(const GroupElement& u, const GroupElement& v, LengthCache& lengths);

/// Bipartite Coxeter element gamma_+ gamma_-, each factor taken over its class
/// in build order.
GroupElement coxeter_element(const RootSystem& rs);

/// Multiplicative order of w.
int element_order(const GroupElement& w);

}  // namespace coxcat
