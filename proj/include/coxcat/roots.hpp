#pragma once

// Finite root systems: Cartan/Coxeter type parsing, closure generation,
// positive/simple systems, bipartite splitting of the simple system and
// standard parabolic subsystems.
//
// Coordinates are taken in the basis of simple roots, so a root is the
// vector of its simple-root coefficients and the inner product is the Gram
// matrix of the simple roots. Simple roots follow Bourbaki numbering:
//
//   A_n  1-2-...-n                      all roots of squared length 2
//   B_n  1-2-...-(n-1)=>n              alpha_n short (length^2 1)
//   C_n  accepted, built as B_n (same reflection group)
//   D_n  1-2-...-(n-2)-(n-1), (n-2)-n
//   E_n  1-3-4-5-...-n, 2-4
//   F_4  1-2=>3-4                      alpha_3, alpha_4 short
//   G_2  1<=2 (6)                      alpha_2 long (length^2 6)
//   H_n  1-(5)-2-3-...-n               (alpha_1, alpha_2) = -golden ratio
//   I2(m) m = 3, 4, 5, 6 are A2, B2, H2, G2; m >= 7 uses the dihedral backend.
//
// Irreducible components occupy orthogonal coordinate blocks.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxcat/exactnum.hpp"

namespace coxcat {

struct TypeComponent {
  char family = 'A';  // 'A'..'I'
  int rank = 1;
  int m = 0;  // only for family 'I'

  std::string to_string() const;
  friend bool operator==(const TypeComponent&, const TypeComponent&) = default;
};

/// Ordered list of irreducible finite types, e.g. "A2xB2" or "I2(7)".
struct TypeSpec {
  std::vector<TypeComponent> components;

  int rank() const;
  std::string to_string() const;
  /// Case-insensitive; components separated by 'x'. Throws SpecError.
  static TypeSpec parse(std::string_view text);
  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

/// Throws SpecError unless the component is a valid finite type.
void validate(const TypeComponent& c);

enum class Backend { Geometric, Dihedral };

struct BuildOptions {
  /// Per component, an optional relabelling of the simple roots: entry j of
  /// simple_order[c] is the standard label (0-based) placed at position j.
  std::vector<std::vector<int>> simple_order;
  /// Build I2(3..6) on the dihedral backend instead of coordinates.
  bool force_dihedral = false;
};

struct Component {
  std::string label;
  Backend backend = Backend::Geometric;
  int rank = 0;
  int m = 0;  // dihedral order (Backend::Dihedral only)
  int simple_offset = 0;
  int root_offset = 0;
  int num_positive = 0;
  ExactMatrix gram;  // Backend::Geometric only
  /// Backend::Dihedral: local root index -> k, the root sitting at angle k*pi/m.
  std::vector<int> angle;
};

using Perm = std::vector<std::uint16_t>;

/// An immutable finite root system.
///
/// Roots are indexed component by component; within a component the N_c
/// positive roots come first (simple roots at local 0..rank-1) and local
/// root N_c + i is the negative of local root i.
class RootSystem {
 public:
  int rank() const { return rank_; }
  int num_positive() const { return num_positive_; }
  int num_roots() const { return 2 * num_positive_; }
  const std::string& label() const { return label_; }
  const std::vector<Component>& components() const { return components_; }
  bool is_irreducible() const { return components_.size() == 1; }

  bool is_positive(int root) const { return positive_[root]; }
  int negation(int root) const { return negation_[root]; }
  int component_of_root(int root) const { return root_component_[root]; }
  int component_of_simple(int simple_index) const;
  const std::vector<int>& positive_roots() const { return positive_list_; }

  /// Simple roots as root indices, in build order.
  const std::vector<int>& simple_roots() const { return simple_roots_; }
  std::optional<int> simple_index_of(int root) const;
  /// The two orthogonal classes of the simple system, as simple indices.
  const std::vector<int>& pi_plus() const { return pi_plus_; }
  const std::vector<int>& pi_minus() const { return pi_minus_; }
  bool in_pi_plus(int simple_index) const;

  bool has_coordinates(int root) const;
  /// Simple-root coefficients of a root (length rank()). Geometric components only.
  const std::vector<FieldScalar>& coords(int root) const;
  /// Block-diagonal Gram matrix of the simple roots (geometric blocks only).
  const ExactMatrix& gram() const { return gram_; }
  FieldScalar pairing(const std::vector<FieldScalar>& x, const std::vector<FieldScalar>& y) const;
  /// Inner product of two roots; 0 across components. Throws ArgumentError
  /// inside a dihedral component (no coordinates there).
  FieldScalar pairing(int root_a, int root_b) const;
  std::optional<int> find_root(const std::vector<FieldScalar>& v) const;

  /// The reflection t_root as a permutation of root indices.
  const Perm& reflection_perm(int root) const { return reflection_perm_[root]; }

  /// For standard parabolic subsystems: index of each root in the parent system.
  const std::vector<int>& parent_roots() const { return parent_roots_; }

 private:
  friend struct RootSystemAssembler;

  std::string label_;
  int rank_ = 0;
  int num_positive_ = 0;
  std::vector<Component> components_;
  std::vector<bool> positive_;
  std::vector<int> negation_;
  std::vector<int> root_component_;
  std::vector<int> positive_list_;
  std::vector<int> simple_roots_;
  std::vector<int> simple_component_;
  std::vector<bool> simple_plus_;
  std::vector<int> pi_plus_;
  std::vector<int> pi_minus_;
  std::vector<std::vector<FieldScalar>> coords_;
  ExactMatrix gram_;
  std::unordered_map<std::vector<FieldScalar>, int, ExactVectorHash> root_lookup_;
  std::vector<Perm> reflection_perm_;
  std::vector<int> parent_roots_;
};

std::shared_ptr<const RootSystem> build_root_system(const TypeSpec& spec,
                                                    const BuildOptions& options = {});
std::shared_ptr<const RootSystem> build_root_system(std::string_view spec);

/// (Pi_plus, Pi_minus) as simple indices: per component, a 2-colouring of the
/// Coxeter diagram with the component's first simple root in Pi_plus.
std::pair<std::vector<int>, std::vector<int>> bipartite_partition(const RootSystem& rs);

/// The subsystem spanned by the simple roots not in `removed` (simple
/// indices), with the induced positive system and the inherited bipartite
/// classes. parent_roots() of the result maps back into `rs`.
std::shared_ptr<const RootSystem> standard_parabolic(const RootSystem& rs,
                                                     const std::vector<int>& removed);

}  // namespace coxcat
