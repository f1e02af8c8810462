#include "coxcat/wgroup.hpp"

#include <numeric>

namespace coxcat {

GroupElement::GroupElement(const RootSystem& rs, Perm perm) : rs_(&rs), perm_(std::move(perm)) {
  if (static_cast<int>(perm_.size()) != rs.num_roots())
    throw ArgumentError("permutation length does not match the root system");
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the entries.
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

std::size_t GroupElement::hash() const { return PermHash{}(perm_); }

GroupElement identity_element(const RootSystem& rs) {
  Perm p(rs.num_roots());
  std::iota(p.begin(), p.end(), 0);
  return GroupElement(rs, std::move(p));
}

GroupElement reflection(const RootSystem& rs, int root) {
  if (root < 0 || root >= rs.num_roots()) throw ArgumentError("root index out of range");
  return GroupElement(rs, rs.reflection_perm(root));
}

GroupElement reflection(const RootSystem& rs, const std::vector<FieldScalar>& alpha) {
  const auto root = rs.find_root(alpha);
  if (!root) throw ArgumentError("vector is not a root");
  return reflection(rs, *root);
}

std::vector<GroupElement> reflections(const RootSystem& rs) {
  std::vector<GroupElement> t;
  t.reserve(rs.num_positive());
  for (int r : rs.positive_roots()) t.push_back(reflection(rs, r));
  return t;
}

GroupElement multiply(const GroupElement& u, const GroupElement& v) {
  if (u.system_ptr() != v.system_ptr() || u.system_ptr() == nullptr)
    throw ArgumentError("elements belong to different root systems");
  const Perm& a = u.perm();
  const Perm& b = v.perm();
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return GroupElement(u.system(), std::move(c));
}

GroupElement inverse(const GroupElement& u) {
  const Perm& a = u.perm();
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::uint16_t>(i);
  return GroupElement(u.system(), std::move(c));
}

ExactMatrix matrix(const GroupElement& w) {
  const RootSystem& rs = w.system();
  const int n = rs.rank();
  ExactMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const auto& col = rs.coords(w(rs.simple_roots()[j]));
    for (int i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

std::vector<FieldScalar> apply(const GroupElement& w, const std::vector<FieldScalar>& x) {
  const ExactMatrix m = matrix(w);
  const int n = w.system().rank();
  if (static_cast<int>(x.size()) != n) throw ArgumentError("vector length does not match the rank");
  std::vector<FieldScalar> y(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!x[j].is_zero() && !m(i, j).is_zero()) y[i] += m(i, j) * x[j];
  return y;
}

namespace {

int dihedral_length(const GroupElement& w, const Component& comp) {
  const int m = comp.m;
  // Local roots at angles 0 and 1.
  int at0 = -1;
  int at1 = -1;
  for (int loc = 0; loc < 2 * m; ++loc) {
    if (comp.angle[loc] == 0) at0 = loc;
    if (comp.angle[loc] == 1) at1 = loc;
  }
  const int a = comp.angle[w(comp.root_offset + at0) - comp.root_offset];
  const int b = comp.angle[w(comp.root_offset + at1) - comp.root_offset];
  if ((a + 1) % (2 * m) == b) return a == 0 ? 0 : 2;  // rotation by a*pi/m
  return 1;
}

int geometric_length(const GroupElement& w, const Component& comp) {
  const RootSystem& rs = w.system();
  const int r = comp.rank;
  ExactMatrix m(r, r);
  bool moved = false;
  for (int j = 0; j < r; ++j) {
    const int simple = comp.root_offset + j;
    const int image = w(simple);
    if (image == simple) continue;
    moved = true;
    const auto& col = rs.coords(image);
    for (int i = 0; i < r; ++i) m(i, j) = col[comp.simple_offset + i];
    m(j, j) -= FieldScalar(1);
  }
  if (!moved) return 0;
  return static_cast<int>(mat_rank(std::move(m)));
}

}  // namespace

int reflection_length(const GroupElement& w) {
  int len = 0;
  for (const Component& comp : w.system().components())
    len += comp.backend == Backend::Dihedral ? dihedral_length(w, comp) : geometric_length(w, comp);
  return len;
}

int LengthCache::operator()(const GroupElement& w) {
  const auto it = cache_.find(w.perm());
  if (it != cache_.end()) return it->second;
  const int len = reflection_length(w);
  cache_.emplace(w.perm(), len);
  return len;
}

bool absolute_leq(const GroupElement& u, const GroupElement& v) {
  return reflection_length(u) + reflection_length(multiply(inverse(u), v)) == reflection_length(v);
}

bool absolute_leq(const GroupElement& u, const GroupElement& v, LengthCache& lengths) {
  return lengths(u) + lengths(multiply(inverse(u), v)) == lengths(v);
}

GroupElement coxeter_element(const RootSystem& rs) {
  GroupElement g = identity_element(rs);
  for (int j : rs.pi_plus()) g = g * reflection(rs, rs.simple_roots()[j]);
  for (int j : rs.pi_minus()) g = g * reflection(rs, rs.simple_roots()[j]);
  return g;
}

int element_order(const GroupElement& w) {
  GroupElement p = w;
  int k = 1;
  while (!p.is_identity()) {
    p = p * w;
    ++k;
  }
  return k;
}

}  // namespace coxcat
