#include "coxcat/cluster.hpp"

#include <algorithm>
#include <set>

namespace coxcat {

int RhoSequence::rho(int i) const {
  const int period = 2 * num_positive;
  const int k = ((i - 1) % period + period) % period;
  return sequence[k];
}

RhoSequence rho_sequence(const RootSystem& rs) {
  if (!rs.is_irreducible()) throw ArgumentError("rho-sequence needs an irreducible system; pass a component");
  return rho_sequence(rs, 0);
}

RhoSequence rho_sequence(const RootSystem& rs, int component) {
  const Component& comp = rs.components().at(component);
  RhoSequence out;
  out.component = component;
  out.n = comp.rank;
  out.num_positive = comp.num_positive;
  for (int j : rs.pi_plus())
    if (rs.component_of_simple(j) == component) out.simple_order.push_back(j);
  out.s = static_cast<int>(out.simple_order.size());
  for (int j : rs.pi_minus())
    if (rs.component_of_simple(j) == component) out.simple_order.push_back(j);

  const int n = out.n;
  const int big_n = out.num_positive;
  if (n == 0) return out;

  // prefix = t_{a_1} ... t_{a_{i-1}} as a permutation of all roots.
  Perm prefix(rs.num_roots());
  for (int r = 0; r < rs.num_roots(); ++r) prefix[r] = static_cast<std::uint16_t>(r);
  out.sequence.reserve(2 * big_n);
  for (int i = 1; i <= 2 * big_n; ++i) {
    const int a = rs.simple_roots()[out.simple_order[(i - 1) % n]];
    out.sequence.push_back(prefix[a]);
    const Perm& t = rs.reflection_perm(a);
    Perm next(prefix.size());
    for (std::size_t r = 0; r < prefix.size(); ++r) next[r] = prefix[t[r]];
    prefix = std::move(next);
  }

  // rho_1..rho_N enumerate the positive roots of the component.
  std::set<int> seen;
  for (int i = 1; i <= big_n; ++i) {
    const int r = out.rho(i);
    if (!rs.is_positive(r) || rs.component_of_root(r) != component || !seen.insert(r).second)
      throw InternalError("rho_1..rho_N is not an enumeration of the positive roots");
  }
  // {rho_{N+1}, ..., rho_{N+s}} = {-rho_1, ..., -rho_s} = -Pi_plus.
  std::set<int> head, minus_head, minus_pi_plus;
  for (int i = 1; i <= out.s; ++i) {
    head.insert(out.rho(big_n + i));
    minus_head.insert(rs.negation(out.rho(i)));
    minus_pi_plus.insert(rs.negation(rs.simple_roots()[out.simple_order[i - 1]]));
  }
  if (head != minus_head || head != minus_pi_plus) throw InternalError("rho_{N+1}..rho_{N+s} is not -Pi_plus");
  // rho_{-i} = -rho_{N-i} for 0 <= i < n-s, and these are -Pi_minus.
  std::set<int> minus_pi_minus;
  for (int j = out.s; j < n; ++j) minus_pi_minus.insert(rs.negation(rs.simple_roots()[out.simple_order[j]]));
  std::set<int> tail, minus_mid;
  for (int i = 0; i < n - out.s; ++i) {
    tail.insert(out.rho(-i));
    minus_mid.insert(rs.negation(out.rho(big_n - i)));
  }
  if (tail != minus_mid) throw InternalError("rho_{-i} set differs from -rho_{N-i} set");
  if (tail != minus_pi_minus) throw InternalError("rho_{-n+s+1}..rho_0 is not -Pi_minus");

  for (int i = out.first_index(); i <= big_n + out.s; ++i) out.vertex_roots.push_back(out.rho(i));
  return out;
}

ClusterModel::ClusterModel(std::shared_ptr<const RootSystem> rs)
    : rs_(std::move(rs)), gamma_(coxeter_element(*rs_)), gamma_inv_(inverse(gamma_)) {
  root_to_vertex_.assign(rs_->num_roots(), -1);
  for (int c = 0; c < static_cast<int>(rs_->components().size()); ++c) {
    offsets_.push_back(static_cast<int>(vertices_.size()));
    rho_.push_back(rho_sequence(*rs_, c));
    const RhoSequence& seq = rho_.back();
    for (std::size_t k = 0; k < seq.vertex_roots.size(); ++k) {
      const int root = seq.vertex_roots[k];
      if (root_to_vertex_[root] != -1) throw InternalError("repeated vertex root");
      root_to_vertex_[root] = static_cast<int>(vertices_.size());
      vertices_.push_back({root, rs_->is_positive(root), c, seq.first_index() + static_cast<int>(k)});
      reflections_.push_back(reflection(*rs_, root));
    }
  }
  offsets_.push_back(static_cast<int>(vertices_.size()));
  if (vertices_.size() > static_cast<std::size_t>(kMaxVertices))
    throw BudgetExceeded("cluster complex has more than " + std::to_string(kMaxVertices) + " vertices");
}

std::optional<int> ClusterModel::vertex_of_root(int root) const {
  if (root < 0 || root >= static_cast<int>(root_to_vertex_.size()) || root_to_vertex_[root] < 0) return std::nullopt;
  return root_to_vertex_[root];
}

namespace {

void check_vertices(const ClusterModel& model, const std::vector<int>& face) {
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (face[i] < 0 || face[i] >= model.num_vertices()) throw ArgumentError("vertex id out of range");
    if (i > 0 && face[i] <= face[i - 1]) throw ArgumentError("face vertices must be strictly ascending");
  }
}

}  // namespace

GroupElement face_element(const ClusterModel& model, const std::vector<int>& face) {
  check_vertices(model, face);
  GroupElement w = identity_element(model.system());
  const auto& off = model.component_offsets();
  for (std::size_t c = 0; c + 1 < off.size(); ++c) {
    GroupElement part = identity_element(model.system());
    for (int v : face)
      if (v >= off[c] && v < off[c + 1]) part = model.vertex_reflection(v) * part;
    w = w * part;
  }
  return w;
}

bool is_face(const ClusterModel& model, const std::vector<int>& face) {
  const GroupElement w = face_element(model, face);
  return reflection_length(w) == static_cast<int>(face.size()) && absolute_leq(w, model.gamma());
}

VertexMask to_mask(const std::vector<int>& vertices) {
  VertexMask m;
  for (int v : vertices) m.set(static_cast<std::size_t>(v));
  return m;
}

std::vector<int> from_mask(const VertexMask& m) {
  std::vector<int> out;
  for (int v = 0; v < kMaxVertices; ++v)
    if (m.test(v)) out.push_back(v);
  return out;
}

ClusterComplex::ClusterComplex(std::shared_ptr<const ClusterModel> model, std::vector<Face> faces,
                               std::vector<GroupElement> face_w)
    : model_(std::move(model)) {
  if (faces.size() != face_w.size()) throw ArgumentError("one element per face required");
  std::vector<std::size_t> order(faces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (faces[a].vertices.size() != faces[b].vertices.size()) return faces[a].vertices.size() < faces[b].vertices.size();
    return faces[a].vertices < faces[b].vertices;
  });
  const int n = rank();
  faces_.reserve(faces.size());
  face_w_.reserve(faces.size());
  masks_.reserve(faces.size());
  size_offsets_.assign(n + 2, faces.size());
  f_kl_.assign(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (std::size_t i = 0; i < order.size(); ++i) {
    Face& f = faces[order[i]];
    const int size = static_cast<int>(f.vertices.size());
    if (size > n) throw InternalError("face larger than the rank");
    if (size_offsets_[size] == faces.size()) size_offsets_[size] = i;
    masks_.push_back(to_mask(f.vertices));
    if (!lookup_.emplace(masks_.back(), i).second) throw InternalError("duplicate face");
    f_kl_[f.k][f.l] += 1;
    faces_.push_back(std::move(f));
    face_w_.push_back(std::move(face_w[order[i]]));
  }
  // Sizes with no faces start where the next size starts.
  for (int s = n; s >= 0; --s) size_offsets_[s] = std::min(size_offsets_[s], size_offsets_[s + 1]);
}

std::pair<std::size_t, std::size_t> ClusterComplex::size_range(int size) const {
  if (size < 0 || size > rank()) return {0, 0};
  return {size_offsets_[size], size_offsets_[size + 1]};
}

std::optional<std::size_t> ClusterComplex::find(const VertexMask& m) const {
  const auto it = lookup_.find(m);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ClusterComplex::find(const std::vector<int>& vertices) const {
  for (int v : vertices)
    if (v < 0 || v >= model_->num_vertices()) return std::nullopt;
  return find(to_mask(vertices));
}

std::vector<std::int64_t> ClusterComplex::f_vector() const {
  std::vector<std::int64_t> f(rank() + 1, 0);
  for (const Face& face : faces_) f[face.vertices.size()] += 1;
  return f;
}

namespace {

struct PartialFace {
  std::vector<int> vertices;
  int k = 0;
  int l = 0;
  GroupElement w;
};

class ComponentSearch {
 public:
  ComponentSearch(const ClusterModel& model, int component, const ComplexOptions& options, std::size_t& total)
      : model_(model), options_(options), total_(total),
        begin_(model.component_offsets()[component]), end_(model.component_offsets()[component + 1]) {}

  std::vector<PartialFace> run() {
    PartialFace empty{{}, 0, 0, identity_element(model_.system())};
    faces_.push_back(empty);
    count();
    extend(empty, begin_);
    return std::move(faces_);
  }

 private:
  bool accept(const GroupElement& w, int size) {
    if (options_.lattice) {
      const auto idx = options_.lattice->index_of(w);
      return idx && options_.lattice->rank(*idx) == size;
    }
    return lengths_(w) == size && absolute_leq(w, model_.gamma(), lengths_);
  }

  void count() {
    if (++total_ > options_.face_budget)
      throw BudgetExceeded("cluster complex exceeds the face budget of " + std::to_string(options_.face_budget));
  }

  void extend(const PartialFace& sigma, int from) {
    const int size = static_cast<int>(sigma.vertices.size()) + 1;
    for (int v = from; v < end_; ++v) {
      GroupElement w = model_.vertex_reflection(v) * sigma.w;
      if (!accept(w, size)) continue;
      PartialFace tau{sigma.vertices, sigma.k, sigma.l, std::move(w)};
      tau.vertices.push_back(v);
      (model_.vertex(v).positive ? tau.k : tau.l) += 1;
      faces_.push_back(tau);
      count();
      extend(tau, v + 1);
    }
  }

  const ClusterModel& model_;
  const ComplexOptions& options_;
  std::size_t& total_;
  int begin_;
  int end_;
  LengthCache lengths_;
  std::vector<PartialFace> faces_;
};

}  // namespace

ClusterComplex enumerate_complex(std::shared_ptr<const RootSystem> rs, const ComplexOptions& options) {
  return enumerate_complex(std::make_shared<const ClusterModel>(std::move(rs)), options);
}

ClusterComplex enumerate_complex(std::shared_ptr<const ClusterModel> model, const ComplexOptions& options) {
  if (options.lattice && options.lattice->system_ptr().get() != &model->system())
    throw ArgumentError("lattice belongs to a different root system");
  if (options.lattice && !(options.lattice->element(options.lattice->top()) == model->gamma()))
    throw ArgumentError("lattice top is not the bipartite Coxeter element");

  const int num_components = static_cast<int>(model->system().components().size());
  std::vector<std::vector<PartialFace>> parts;
  std::size_t searched = 0;
  for (int c = 0; c < num_components; ++c) parts.push_back(ComponentSearch(*model, c, options, searched).run());

  // Join: one face per tuple of component faces; w multiplies in component order.
  std::vector<PartialFace> joined{{{}, 0, 0, identity_element(model->system())}};
  for (const auto& part : parts) {
    std::size_t next_size = joined.size() * part.size();
    if (next_size > options.face_budget)
      throw BudgetExceeded("cluster complex exceeds the face budget of " + std::to_string(options.face_budget));
    std::vector<PartialFace> next;
    next.reserve(next_size);
    for (const auto& a : joined) {
      for (const auto& b : part) {
        PartialFace f{a.vertices, a.k + b.k, a.l + b.l, a.w * b.w};
        f.vertices.insert(f.vertices.end(), b.vertices.begin(), b.vertices.end());
        next.push_back(std::move(f));
      }
    }
    joined = std::move(next);
  }

  std::vector<Face> faces;
  std::vector<GroupElement> ws;
  faces.reserve(joined.size());
  ws.reserve(joined.size());
  for (auto& f : joined) {
    faces.push_back({std::move(f.vertices), f.k, f.l});
    ws.push_back(std::move(f.w));
  }
  return ClusterComplex(std::move(model), std::move(faces), std::move(ws));
}

BiPoly f_triangle(const ClusterComplex& cx) {
  BiPoly p;
  const auto& f = cx.f_kl();
  for (std::size_t k = 0; k < f.size(); ++k)
    for (std::size_t l = 0; l < f[k].size(); ++l)
      if (f[k][l] != 0) p.add_to(static_cast<int>(k), static_cast<int>(l), mpz_class(static_cast<long>(f[k][l])));
  return p;
}

Poly1 h_polynomial(const std::vector<std::int64_t>& faces_by_size, int n) {
  Poly1 h;
  for (std::size_t i = 0; i < faces_by_size.size(); ++i) {
    if (faces_by_size[i] == 0) continue;
    const int d = n - static_cast<int>(i);
    if (d < 0) throw ArgumentError("face larger than the dimension bound");
    const Poly1 term = binomial_expand(Base::OneMinusY, d).at_x(0);
    std::vector<mpz_class> shifted(i, 0);
    shifted.insert(shifted.end(), term.coeffs().begin(), term.coeffs().end());
    h += Poly1(std::move(shifted)) * Poly1{static_cast<long>(faces_by_size[i])};
  }
  return h;
}

std::vector<std::vector<std::vector<int>>> link(const ClusterComplex& cx, const std::vector<int>& sigma) {
  const auto idx = cx.find(sigma);
  if (!idx) throw ArgumentError("not a face of the complex");
  const VertexMask s = cx.mask(*idx);
  const int n = cx.rank();
  std::vector<std::vector<std::vector<int>>> out(n - static_cast<int>(sigma.size()) + 1);
  for (int size = static_cast<int>(sigma.size()); size <= n; ++size) {
    const auto [b, e] = cx.size_range(size);
    for (std::size_t i = b; i < e; ++i)
      if ((cx.mask(i) & s) == s) out[size - sigma.size()].push_back(from_mask(cx.mask(i) & ~s));
  }
  return out;
}

std::vector<std::int64_t> link_f_vector(const ClusterComplex& cx, const VertexMask& sigma) {
  const int base = static_cast<int>(sigma.count());
  const int n = cx.rank();
  std::vector<std::int64_t> out(std::max(n - base + 1, 0), 0);
  for (int size = base; size <= n; ++size) {
    const auto [b, e] = cx.size_range(size);
    for (std::size_t i = b; i < e; ++i)
      if ((cx.mask(i) & sigma) == sigma) out[size - base] += 1;
  }
  return out;
}

int rotation_R(const ClusterModel& model, int vertex) {
  const RootSystem& rs = model.system();
  const int root = model.vertex(vertex).root;
  const auto simple = rs.simple_index_of(root);
  const auto neg_simple = rs.simple_index_of(rs.negation(root));
  int image;
  if ((simple && rs.in_pi_plus(*simple)) || (neg_simple && !rs.in_pi_plus(*neg_simple)))
    image = rs.negation(root);
  else
    image = model.gamma_inverse()(root);
  const auto v = model.vertex_of_root(image);
  if (!v) throw InternalError("rotation left the vertex set");
  return *v;
}

std::vector<int> rotate_face(const ClusterModel& model, const std::vector<int>& face) {
  std::vector<int> out;
  out.reserve(face.size());
  for (int v : face) out.push_back(rotation_R(model, v));
  std::sort(out.begin(), out.end());
  return out;
}

std::unordered_map<GroupElement, std::int64_t, GroupElementHash> positive_subcomplexes(const ClusterComplex& cx) {
  std::unordered_map<GroupElement, std::int64_t, GroupElementHash> out;
  for (std::size_t i = 0; i < cx.num_faces(); ++i)
    if (cx.face(i).l == 0) out[cx.face_w(i)] += 1;
  return out;
}

}  // namespace coxcat
