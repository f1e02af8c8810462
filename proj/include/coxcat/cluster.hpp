#pragma once

// The cluster complex on Phi_{>=-1} = Phi+ u (-Pi), realised through the
// rho-sequence of a bipartite Coxeter element: a set of vertices
// {rho_i1, ..., rho_ik} with i1 < ... < ik is a face iff
// w = t_{rho_ik} ... t_{rho_i1} lies below gamma in absolute order and has
// reflection length k. Reducible systems give the join of the components'
// complexes.

#include <bitset>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxcat/nclattice.hpp"
#include "coxcat/triangles.hpp"
#include "coxcat/wgroup.hpp"

namespace coxcat {

inline constexpr int kMaxVertices = 128;
using VertexMask = std::bitset<kMaxVertices>;

/// rho_i = t_{a_1} t_{a_2} ... t_{a_{i-1}}(a_i), with the simple roots a_1..a_n
/// listed as Pi_plus then Pi_minus (build order within each class) and
/// indexed cyclically, and rho_{-i} = rho_{2N-i}.
struct RhoSequence {
  int component = 0;
  int n = 0;             // rank of the component
  int s = 0;             // |Pi_plus|
  int num_positive = 0;  // N
  std::vector<int> simple_order;  // simple indices a_1..a_n
  std::vector<int> sequence;      // sequence[i-1] = root index of rho_i, i = 1..2N
  /// Root indices of the vertices rho_{-n+s+1}, ..., rho_0, rho_1, ..., rho_{N+s}.
  std::vector<int> vertex_roots;

  /// Root index of rho_i for any integer i.
  int rho(int i) const;
  /// rho-index of vertex_roots[0].
  int first_index() const { return -(n - s - 1); }
};

/// The rho-sequence of an irreducible system (or of one component). The
/// three identities relating it to Phi+, -Pi_plus and -Pi_minus are verified;
/// a violation throws InternalError.
RhoSequence rho_sequence(const RootSystem& rs);
RhoSequence rho_sequence(const RootSystem& rs, int component);

struct VertexInfo {
  int root = 0;
  bool positive = false;
  int component = 0;
  int rho_index = 0;
};

/// Root system, bipartite Coxeter element and vertex table. Vertex ids run
/// component by component, ascending in rho-index within a component.
class ClusterModel {
 public:
  explicit ClusterModel(std::shared_ptr<const RootSystem> rs);

  const RootSystem& system() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& system_ptr() const { return rs_; }
  const GroupElement& gamma() const { return gamma_; }
  const GroupElement& gamma_inverse() const { return gamma_inv_; }
  const std::vector<RhoSequence>& rho() const { return rho_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const VertexInfo& vertex(int id) const { return vertices_.at(id); }
  std::optional<int> vertex_of_root(int root) const;
  const GroupElement& vertex_reflection(int id) const { return reflections_.at(id); }
  /// First vertex id of each component, plus a final end marker.
  const std::vector<int>& component_offsets() const { return offsets_; }

 private:
  std::shared_ptr<const RootSystem> rs_;
  GroupElement gamma_;
  GroupElement gamma_inv_;
  std::vector<RhoSequence> rho_;
  std::vector<VertexInfo> vertices_;
  std::vector<GroupElement> reflections_;
  std::vector<int> root_to_vertex_;
  std::vector<int> offsets_;
};

struct Face {
  std::vector<int> vertices;  // strictly ascending ids
  int k = 0;                  // positive roots
  int l = 0;                  // negative simple roots
  friend bool operator==(const Face&, const Face&) = default;
};

/// w_sigma: per component the product of the reflections in descending vertex
/// order, then the component factors multiplied in component order.
GroupElement face_element(const ClusterModel& model, const std::vector<int>& face);
/// r(w_sigma) = |sigma| and w_sigma <= gamma.
bool is_face(const ClusterModel& model, const std::vector<int>& face);

struct ComplexOptions {
  std::size_t face_budget = 10'000'000;
  /// When given (and built for the same system and Coxeter element), the face
  /// test becomes a lookup of w_sigma in [1, gamma].
  const NCLattice* lattice = nullptr;
};

class ClusterComplex {
 public:
  ClusterComplex(std::shared_ptr<const ClusterModel> model, std::vector<Face> faces,
                 std::vector<GroupElement> face_w);

  const ClusterModel& model() const { return *model_; }
  const std::shared_ptr<const ClusterModel>& model_ptr() const { return model_; }
  const RootSystem& system() const { return model_->system(); }
  int rank() const { return model_->system().rank(); }

  /// Faces sorted by size, then lexicographically.
  std::size_t num_faces() const { return faces_.size(); }
  const Face& face(std::size_t i) const { return faces_[i]; }
  const std::vector<Face>& faces() const { return faces_; }
  const GroupElement& face_w(std::size_t i) const { return face_w_[i]; }
  const VertexMask& mask(std::size_t i) const { return masks_[i]; }
  /// Index range [begin, end) of the faces with `size` vertices.
  std::pair<std::size_t, std::size_t> size_range(int size) const;
  std::optional<std::size_t> find(const VertexMask& m) const;
  std::optional<std::size_t> find(const std::vector<int>& vertices) const;

  /// f_kl[k][l]: faces with k positive and l negative simple vertices.
  const std::vector<std::vector<std::int64_t>>& f_kl() const { return f_kl_; }
  /// Face counts by number of vertices, 0..rank.
  std::vector<std::int64_t> f_vector() const;

 private:
  std::shared_ptr<const ClusterModel> model_;
  std::vector<Face> faces_;
  std::vector<GroupElement> face_w_;
  std::vector<VertexMask> masks_;
  std::vector<std::size_t> size_offsets_;
  std::unordered_map<VertexMask, std::size_t> lookup_;
  std::vector<std::vector<std::int64_t>> f_kl_;
};

VertexMask to_mask(const std::vector<int>& vertices);
std::vector<int> from_mask(const VertexMask& m);

/// Depth-first extension in ascending vertex id, per component, followed by
/// the join. Throws BudgetExceeded past options.face_budget faces.
ClusterComplex enumerate_complex(std::shared_ptr<const RootSystem> rs, const ComplexOptions& options = {});
ClusterComplex enumerate_complex(std::shared_ptr<const ClusterModel> model, const ComplexOptions& options = {});

BiPoly f_triangle(const ClusterComplex& cx);

/// sum_i f_i y^i (1-y)^(n-i), with f_i the number of faces of i vertices.
Poly1 h_polynomial(const std::vector<std::int64_t>& faces_by_size, int n);

/// {tau \ sigma : sigma subset of tau in the complex}, grouped by size.
/// Throws ArgumentError if sigma is not a face.
std::vector<std::vector<std::vector<int>>> link(const ClusterComplex& cx, const std::vector<int>& sigma);
/// Face counts by size of the link, without materialising it.
std::vector<std::int64_t> link_f_vector(const ClusterComplex& cx, const VertexMask& sigma);

/// R(a) = -a for a in Pi_plus u (-Pi_minus), gamma^-1(a) otherwise; applied
/// within each component.
int rotation_R(const ClusterModel& model, int vertex);
std::vector<int> rotate_face(const ClusterModel& model, const std::vector<int>& face);

/// For each w, the number of faces sigma of the positive part with w_sigma = w.
std::unordered_map<GroupElement, std::int64_t, GroupElementHash> positive_subcomplexes(const ClusterComplex& cx);

}  // namespace coxcat
