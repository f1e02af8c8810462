#include "coxcat/roots.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace coxcat {

std::string TypeComponent::to_string() const {
  if (family == 'I') return "I2(" + std::to_string(m) + ")";
  return std::string(1, family) + std::to_string(rank);
}

int TypeSpec::rank() const {
  int n = 0;
  for (const auto& c : components) n += c.rank;
  return n;
}

std::string TypeSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += 'x';
    out += components[i].to_string();
  }
  return out;
}

void validate(const TypeComponent& c) {
  const auto bad = [&] { return SpecError("invalid finite type " + c.to_string()); };
  switch (c.family) {
    case 'A': if (c.rank < 1) throw bad(); break;
    case 'B':
    case 'C': if (c.rank < 2) throw bad(); break;
    case 'D': if (c.rank < 4) throw bad(); break;
    case 'E': if (c.rank < 6 || c.rank > 8) throw bad(); break;
    case 'F': if (c.rank != 4) throw bad(); break;
    case 'G': if (c.rank != 2) throw bad(); break;
    case 'H': if (c.rank < 2 || c.rank > 4) throw bad(); break;
    case 'I': if (c.rank != 2 || c.m < 3) throw bad(); break;
    default: throw SpecError(std::string("unknown family letter '") + c.family + "'");
  }
}

TypeSpec TypeSpec::parse(std::string_view text) {
  TypeSpec spec;
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) {
    return SpecError("cannot parse type '" + std::string(text) + "': " + why);
  };
  const auto read_int = [&]() {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 6) throw fail("expected a number");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  if (text.empty()) throw fail("empty");
  while (true) {
    if (pos >= text.size()) throw fail("expected a family letter");
    TypeComponent c;
    c.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos++])));
    if (c.family < 'A' || c.family > 'I') throw fail("unknown family letter");
    c.rank = read_int();
    if (c.family == 'I') {
      if (pos >= text.size() || text[pos] != '(') throw fail("I2 needs an order, as in I2(7)");
      ++pos;
      c.m = read_int();
      if (pos >= text.size() || text[pos] != ')') throw fail("missing ')'");
      ++pos;
    }
    validate(c);
    spec.components.push_back(c);
    if (pos == text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X') throw fail("expected 'x' between components");
    ++pos;
  }
  return spec;
}

namespace {

// One irreducible (or, for parabolic pieces, connected) block before assembly.
struct Blueprint {
  std::string label;
  Backend backend = Backend::Geometric;
  int rank = 0;
  int m = 0;
  ExactMatrix gram;
  std::vector<int> plus;           // inherited colouring (1 = Pi_plus); empty = compute
  std::vector<int> parent_simple;  // parabolic only
  bool copy_of_parent_block = false;
  int parent_root_offset = 0;
};

struct LocalBlock {
  Blueprint bp;
  int num_positive = 0;
  std::vector<std::vector<FieldScalar>> coords;  // geometric
  std::vector<int> angle;                        // dihedral
  std::vector<Perm> refl;                        // per local root
  std::vector<int> plus;
};

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

ExactMatrix chain_gram(int n, const std::vector<std::pair<int, int>>& edges) {
  ExactMatrix g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = FieldScalar(2);
  for (auto [i, j] : edges) g(i, j) = g(j, i) = FieldScalar(-1);
  return g;
}

std::vector<std::pair<int, int>> path_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

FieldScalar minus_golden() { return FieldScalar::qsqrt5(-1, 2, -1, 2); }

Blueprint standard_blueprint(const TypeComponent& c, bool force_dihedral) {
  Blueprint bp;
  bp.label = c.to_string();
  bp.rank = c.rank;
  const int n = c.rank;
  char family = c.family;
  int m = c.m;
  if (family == 'H' && n == 2) {
    family = 'I';
    m = 5;
  }
  if (family == 'I') {
    if (force_dihedral || m > 6) {
      bp.backend = Backend::Dihedral;
      bp.m = m;
      return bp;
    }
    if (m == 3) family = 'A';
    if (m == 4) family = 'B';
    if (m == 6) family = 'G';
  }
  switch (family) {
    case 'A':
      bp.gram = chain_gram(n, path_edges(n));
      break;
    case 'B':
    case 'C':
      bp.gram = chain_gram(n, path_edges(n));
      bp.gram(n - 1, n - 1) = FieldScalar(1);
      break;
    case 'D': {
      auto e = path_edges(n - 1);
      e.emplace_back(n - 3, n - 1);
      bp.gram = chain_gram(n, e);
      break;
    }
    case 'E': {
      std::vector<std::pair<int, int>> e = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      bp.gram = chain_gram(n, e);
      break;
    }
    case 'F':
      bp.gram = chain_gram(4, path_edges(4));
      bp.gram(2, 2) = FieldScalar(1);
      bp.gram(3, 3) = FieldScalar(1);
      bp.gram(2, 3) = bp.gram(3, 2) = FieldScalar::rational(-1, 2);
      break;
    case 'G':
      bp.gram = ExactMatrix(2, 2);
      bp.gram(0, 0) = FieldScalar(2);
      bp.gram(1, 1) = FieldScalar(6);
      bp.gram(0, 1) = bp.gram(1, 0) = FieldScalar(-3);
      break;
    case 'H':
      bp.gram = chain_gram(n, path_edges(n));
      bp.gram(0, 1) = bp.gram(1, 0) = minus_golden();
      break;
    case 'I':  // m == 5
      bp.gram = chain_gram(2, {});
      bp.gram(0, 1) = bp.gram(1, 0) = minus_golden();
      break;
    default:
      throw SpecError("unknown family");
  }
  return bp;
}

Blueprint permuted(Blueprint bp, const std::vector<int>& order) {
  const int n = bp.rank;
  std::vector<int> check = order;
  std::sort(check.begin(), check.end());
  std::vector<int> iota(n);
  std::iota(iota.begin(), iota.end(), 0);
  if (check != iota) throw SpecError("simple_order is not a permutation of the component's simple roots");
  if (bp.backend == Backend::Dihedral) {
    // A negative order marks the two simple roots as swapped.
    if (order[0] == 1) bp.m = -bp.m;
    return bp;
  }
  ExactMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = bp.gram(order[i], order[j]);
  bp.gram = std::move(g);
  return bp;
}

std::vector<int> two_colouring(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> colour(n, -1);
  for (int start = 0; start < n; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          throw InternalError("Coxeter diagram is not bipartite");
        }
      }
    }
  }
  return colour;
}

LocalBlock build_geometric(const Blueprint& bp) {
  LocalBlock blk;
  blk.bp = bp;
  const int r = bp.rank;
  const ExactMatrix& g = bp.gram;

  std::vector<FieldScalar> twice_inv_len(r);
  for (int j = 0; j < r; ++j) {
    if (g(j, j).sign() <= 0) throw SpecError("Gram matrix has a non-positive diagonal entry");
    twice_inv_len[j] = FieldScalar(2) / g(j, j);
  }

  // Closure of the simple roots under the simple reflections.
  std::vector<std::vector<FieldScalar>> found;
  std::vector<std::pair<int, int>> parent;  // (earlier root, simple reflection)
  std::unordered_map<std::vector<FieldScalar>, int, ExactVectorHash> index;
  for (int j = 0; j < r; ++j) {
    std::vector<FieldScalar> e(r);
    e[j] = FieldScalar(1);
    index.emplace(e, j);
    found.push_back(std::move(e));
    parent.emplace_back(-1, j);
  }
  constexpr std::size_t kRootLimit = 20000;
  for (std::size_t cur = 0; cur < found.size(); ++cur) {
    for (int j = 0; j < r; ++j) {
      FieldScalar p;
      for (int i = 0; i < r; ++i)
        if (!found[cur][i].is_zero()) p += found[cur][i] * g(i, j);
      if (p.is_zero()) continue;
      std::vector<FieldScalar> y = found[cur];
      y[j] -= p * twice_inv_len[j];
      if (index.count(y)) continue;
      if (found.size() >= kRootLimit) throw SpecError("root closure does not terminate (not a finite type)");
      index.emplace(y, static_cast<int>(found.size()));
      found.push_back(std::move(y));
      parent.emplace_back(static_cast<int>(cur), j);
    }
  }

  // Split into positive and negative roots.
  std::vector<int> positives;
  for (std::size_t i = 0; i < found.size(); ++i) {
    bool nonneg = true;
    bool nonpos = true;
    for (const auto& x : found[i]) {
      const int s = x.sign();
      nonneg = nonneg && s >= 0;
      nonpos = nonpos && s <= 0;
    }
    if (nonneg == nonpos) throw InternalError("root neither positive nor negative: " + bp.label);
    if (nonneg) positives.push_back(static_cast<int>(i));
  }
  const int big_n = static_cast<int>(positives.size());
  if (2 * big_n != static_cast<int>(found.size())) throw InternalError("root set is not symmetric");
  blk.num_positive = big_n;

  std::vector<int> local_of(found.size(), -1);
  blk.coords.resize(2 * big_n);
  for (int i = 0; i < big_n; ++i) {
    const auto& x = found[positives[i]];
    std::vector<FieldScalar> neg(r);
    for (int k = 0; k < r; ++k) neg[k] = -x[k];
    const auto it = index.find(neg);
    if (it == index.end()) throw InternalError("negative of a root is missing");
    local_of[positives[i]] = i;
    local_of[it->second] = big_n + i;
    blk.coords[i] = x;
    blk.coords[big_n + i] = std::move(neg);
  }

  // Simple reflections directly, the rest by conjugation t_{s(b)} = s t_b s.
  std::vector<Perm> simple(r, Perm(2 * big_n));
  for (int j = 0; j < r; ++j) {
    for (std::size_t cur = 0; cur < found.size(); ++cur) {
      FieldScalar p;
      for (int i = 0; i < r; ++i)
        if (!found[cur][i].is_zero()) p += found[cur][i] * g(i, j);
      std::vector<FieldScalar> y = found[cur];
      y[j] -= p * twice_inv_len[j];
      simple[j][local_of[cur]] = static_cast<std::uint16_t>(local_of[index.at(y)]);
    }
  }
  blk.refl.assign(2 * big_n, Perm());
  for (std::size_t cur = 0; cur < found.size(); ++cur) {
    const auto [from, j] = parent[cur];
    Perm t = from < 0 ? simple[j] : compose(simple[j], compose(blk.refl[local_of[from]], simple[j]));
    const int loc = local_of[cur];
    const int neg = loc < big_n ? loc + big_n : loc - big_n;
    if (t[loc] != neg) throw InternalError("reflection does not negate its root");
    blk.refl[loc] = std::move(t);
  }
  return blk;
}

LocalBlock build_dihedral(const Blueprint& bp) {
  LocalBlock blk;
  blk.bp = bp;
  const bool swapped = bp.m < 0;
  const int m = swapped ? -bp.m : bp.m;
  blk.bp.m = m;
  blk.num_positive = m;
  // Simple roots at angles 0 and (m-1)pi/m; positives are the angles 0..m-1.
  std::vector<int> pos_angle(m);
  pos_angle[0] = 0;
  pos_angle[1] = m - 1;
  for (int i = 2; i < m; ++i) pos_angle[i] = i - 1;
  if (swapped) std::swap(pos_angle[0], pos_angle[1]);
  blk.angle.resize(2 * m);
  std::vector<int> local_of_angle(2 * m);
  for (int i = 0; i < m; ++i) {
    blk.angle[i] = pos_angle[i];
    blk.angle[m + i] = pos_angle[i] + m;
  }
  for (int i = 0; i < 2 * m; ++i) local_of_angle[blk.angle[i]] = i;
  blk.refl.assign(2 * m, Perm(2 * m));
  for (int root = 0; root < 2 * m; ++root) {
    const int j = blk.angle[root];
    for (int x = 0; x < 2 * m; ++x) {
      const int k = blk.angle[x];
      const int image = ((2 * j + m - k) % (2 * m) + 2 * m) % (2 * m);
      blk.refl[root][x] = static_cast<std::uint16_t>(local_of_angle[image]);
    }
  }
  return blk;
}

std::vector<std::vector<int>> diagram(const LocalBlock& blk) {
  const int r = blk.bp.rank;
  std::vector<std::vector<int>> adj(r);
  if (blk.bp.backend == Backend::Dihedral) {
    if (r == 2) adj = {{1}, {0}};
    return adj;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && !blk.bp.gram(i, j).is_zero()) adj[i].push_back(j);
  return adj;
}

}  // namespace

struct RootSystemAssembler {
  static std::shared_ptr<const RootSystem> assemble(std::string label, std::vector<Blueprint> bps,
                                                    const RootSystem* parent) {
    std::vector<LocalBlock> blocks;
    for (auto& bp : bps) {
      LocalBlock blk = bp.backend == Backend::Dihedral ? build_dihedral(bp) : build_geometric(bp);
      blk.plus = bp.plus.empty() ? two_colouring(bp.rank, diagram(blk)) : bp.plus;
      blocks.push_back(std::move(blk));
    }

    auto rs = std::make_shared<RootSystem>();
    rs->label_ = std::move(label);
    int n = 0;
    int total_roots = 0;
    for (const auto& b : blocks) {
      n += b.bp.rank;
      total_roots += 2 * b.num_positive;
    }
    if (total_roots > 65535) throw SpecError("root system too large");
    rs->rank_ = n;
    rs->num_positive_ = total_roots / 2;
    rs->gram_ = ExactMatrix(n, n);
    rs->positive_.resize(total_roots);
    rs->negation_.resize(total_roots);
    rs->root_component_.resize(total_roots);
    rs->coords_.resize(total_roots);
    rs->reflection_perm_.resize(total_roots);

    int simple_offset = 0;
    int root_offset = 0;
    for (std::size_t c = 0; c < blocks.size(); ++c) {
      const LocalBlock& b = blocks[c];
      const int r = b.bp.rank;
      const int nc = b.num_positive;
      Component comp;
      comp.label = b.bp.label;
      comp.backend = b.bp.backend;
      comp.rank = r;
      comp.m = b.bp.m;
      comp.simple_offset = simple_offset;
      comp.root_offset = root_offset;
      comp.num_positive = nc;
      comp.gram = b.bp.gram;
      comp.angle = b.angle;
      if (b.bp.backend == Backend::Geometric) {
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) rs->gram_(simple_offset + i, simple_offset + j) = b.bp.gram(i, j);
      }
      for (int loc = 0; loc < 2 * nc; ++loc) {
        const int g = root_offset + loc;
        rs->positive_[g] = loc < nc;
        rs->negation_[g] = root_offset + (loc < nc ? loc + nc : loc - nc);
        rs->root_component_[g] = static_cast<int>(c);
        if (loc < nc) rs->positive_list_.push_back(g);
        if (b.bp.backend == Backend::Geometric) {
          std::vector<FieldScalar> v(n);
          for (int i = 0; i < r; ++i) v[simple_offset + i] = b.coords[loc][i];
          rs->root_lookup_.emplace(v, g);
          rs->coords_[g] = std::move(v);
        }
        Perm p(total_roots);
        std::iota(p.begin(), p.end(), 0);
        for (int x = 0; x < 2 * nc; ++x)
          p[root_offset + x] = static_cast<std::uint16_t>(root_offset + b.refl[loc][x]);
        rs->reflection_perm_[g] = std::move(p);
      }
      for (int j = 0; j < r; ++j) {
        rs->simple_roots_.push_back(root_offset + j);
        rs->simple_component_.push_back(static_cast<int>(c));
        rs->simple_plus_.push_back(b.plus[j] == 1);
        (b.plus[j] == 1 ? rs->pi_plus_ : rs->pi_minus_).push_back(simple_offset + j);
      }
      rs->components_.push_back(std::move(comp));
      simple_offset += r;
      root_offset += 2 * nc;
    }
    // Positive roots listed in index order.
    std::sort(rs->positive_list_.begin(), rs->positive_list_.end());

    if (parent != nullptr) map_to_parent(*rs, blocks, *parent);
    self_check(*rs);
    return rs;
  }

  static void map_to_parent(RootSystem& rs, const std::vector<LocalBlock>& blocks, const RootSystem& parent) {
    rs.parent_roots_.assign(rs.num_roots(), -1);
    for (std::size_t c = 0; c < blocks.size(); ++c) {
      const LocalBlock& b = blocks[c];
      const Component& comp = rs.components_[c];
      for (int loc = 0; loc < 2 * b.num_positive; ++loc) {
        const int g = comp.root_offset + loc;
        if (b.bp.copy_of_parent_block) {
          rs.parent_roots_[g] = b.bp.parent_root_offset + loc;
          continue;
        }
        if (b.bp.rank == 1) {
          const int p = b.bp.parent_simple[0];
          rs.parent_roots_[g] = loc == 0 ? p : parent.negation(p);
          continue;
        }
        std::vector<FieldScalar> v(parent.rank());
        for (int i = 0; i < b.bp.rank; ++i) {
          const auto& x = b.coords[loc][i];
          if (x.is_zero()) continue;
          const auto& pc = parent.coords(b.bp.parent_simple[i]);
          for (int k = 0; k < parent.rank(); ++k)
            if (!pc[k].is_zero()) v[k] += x * pc[k];
        }
        const auto found = parent.find_root(v);
        if (!found) throw InternalError("parabolic root is not a root of the parent");
        rs.parent_roots_[g] = *found;
      }
    }
  }

  static void self_check(const RootSystem& rs) {
    const int total = rs.num_roots();
    for (int r = 0; r < total; ++r) {
      const int neg = rs.negation(r);
      if (rs.negation(neg) != r || rs.is_positive(neg) == rs.is_positive(r))
        throw InternalError("negation table is inconsistent");
      const Perm& p = rs.reflection_perm(r);
      std::vector<bool> seen(total, false);
      for (auto x : p) {
        if (seen[x]) throw InternalError("reflection is not a permutation of the roots");
        seen[x] = true;
      }
      if (p[r] != neg) throw InternalError("reflection does not negate its root");
    }
    // Each bipartite class is pairwise orthogonal.
    for (const auto* cls : {&rs.pi_plus(), &rs.pi_minus()}) {
      for (int a : *cls)
        for (int b : *cls) {
          if (a >= b) continue;
          const int ra = rs.simple_roots()[a];
          const int rb = rs.simple_roots()[b];
          if (rs.component_of_root(ra) != rs.component_of_root(rb)) continue;
          const Component& comp = rs.components()[rs.component_of_root(ra)];
          if (comp.backend == Backend::Dihedral) throw InternalError("dihedral simple roots share a class");
          if (!rs.pairing(ra, rb).is_zero()) throw InternalError("bipartite class is not orthogonal");
        }
    }
    // Crystallographic blocks: positive roots are non-negative integer combinations.
    for (const Component& comp : rs.components()) {
      if (comp.backend != Backend::Geometric || comp.gram.kind() != FieldKind::Rational) continue;
      for (int loc = 0; loc < comp.num_positive; ++loc) {
        for (const auto& x : rs.coords(comp.root_offset + loc)) {
          if (x.sign() < 0 || x.rational_part().get_den() != 1)
            throw InternalError("positive root is not a non-negative integer combination");
        }
      }
    }
  }
};

int RootSystem::component_of_simple(int simple_index) const { return simple_component_.at(simple_index); }

std::optional<int> RootSystem::simple_index_of(int root) const {
  const auto it = std::find(simple_roots_.begin(), simple_roots_.end(), root);
  if (it == simple_roots_.end()) return std::nullopt;
  return static_cast<int>(it - simple_roots_.begin());
}

bool RootSystem::in_pi_plus(int simple_index) const { return simple_plus_.at(simple_index); }

bool RootSystem::has_coordinates(int root) const {
  return components_[root_component_[root]].backend == Backend::Geometric;
}

const std::vector<FieldScalar>& RootSystem::coords(int root) const {
  if (!has_coordinates(root)) throw ArgumentError("roots of a dihedral component carry no coordinates");
  return coords_[root];
}

FieldScalar RootSystem::pairing(const std::vector<FieldScalar>& x, const std::vector<FieldScalar>& y) const {
  if (static_cast<int>(x.size()) != rank_ || static_cast<int>(y.size()) != rank_)
    throw ArgumentError("vector length does not match the rank");
  FieldScalar s;
  for (int i = 0; i < rank_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < rank_; ++j)
      if (!y[j].is_zero() && !gram_(i, j).is_zero()) s += x[i] * gram_(i, j) * y[j];
  }
  return s;
}

FieldScalar RootSystem::pairing(int root_a, int root_b) const {
  if (root_component_[root_a] != root_component_[root_b]) return FieldScalar(0);
  return pairing(coords(root_a), coords(root_b));
}

std::optional<int> RootSystem::find_root(const std::vector<FieldScalar>& v) const {
  const auto it = root_lookup_.find(v);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

std::shared_ptr<const RootSystem> build_root_system(const TypeSpec& spec, const BuildOptions& options) {
  if (!options.simple_order.empty() && options.simple_order.size() != spec.components.size())
    throw SpecError("simple_order must list one permutation per component");
  std::vector<Blueprint> bps;
  for (std::size_t c = 0; c < spec.components.size(); ++c) {
    validate(spec.components[c]);
    Blueprint bp = standard_blueprint(spec.components[c], options.force_dihedral);
    if (!options.simple_order.empty() && !options.simple_order[c].empty())
      bp = permuted(std::move(bp), options.simple_order[c]);
    bps.push_back(std::move(bp));
  }
  return RootSystemAssembler::assemble(spec.to_string(), std::move(bps), nullptr);
}

std::shared_ptr<const RootSystem> build_root_system(std::string_view spec) {
  return build_root_system(TypeSpec::parse(spec));
}

std::pair<std::vector<int>, std::vector<int>> bipartite_partition(const RootSystem& rs) {
  return {rs.pi_plus(), rs.pi_minus()};
}

std::shared_ptr<const RootSystem> standard_parabolic(const RootSystem& rs, const std::vector<int>& removed) {
  std::set<int> gone;
  for (int j : removed) {
    if (j < 0 || j >= rs.rank()) throw ArgumentError("removed set is not a subset of the simple system");
    gone.insert(j);
  }
  std::vector<Blueprint> bps;
  for (const Component& comp : rs.components()) {
    std::vector<int> kept;  // local simple indices
    for (int j = 0; j < comp.rank; ++j)
      if (!gone.count(comp.simple_offset + j)) kept.push_back(j);
    if (kept.empty()) continue;

    if (comp.backend == Backend::Dihedral) {
      Blueprint bp;
      bp.backend = kept.size() == 2 ? Backend::Dihedral : Backend::Geometric;
      bp.rank = static_cast<int>(kept.size());
      for (int j : kept) {
        bp.parent_simple.push_back(rs.simple_roots()[comp.simple_offset + j]);
        bp.plus.push_back(rs.in_pi_plus(comp.simple_offset + j) ? 1 : 0);
      }
      if (bp.backend == Backend::Dihedral) {
        bp.label = comp.label;
        bp.m = comp.angle[0] == 0 ? comp.m : -comp.m;
        bp.copy_of_parent_block = true;
        bp.parent_root_offset = comp.root_offset;
      } else {
        bp.label = comp.label + "/" + std::to_string(kept[0] + 1);
        bp.gram = chain_gram(1, {});
      }
      bps.push_back(std::move(bp));
      continue;
    }

    // Connected pieces of the remaining diagram, in order of first simple root.
    std::vector<int> piece(kept.size(), -1);
    int pieces = 0;
    for (std::size_t s = 0; s < kept.size(); ++s) {
      if (piece[s] != -1) continue;
      piece[s] = pieces;
      std::deque<std::size_t> queue{s};
      while (!queue.empty()) {
        const std::size_t a = queue.front();
        queue.pop_front();
        for (std::size_t b = 0; b < kept.size(); ++b)
          if (piece[b] == -1 && !comp.gram(kept[a], kept[b]).is_zero()) {
            piece[b] = pieces;
            queue.push_back(b);
          }
      }
      ++pieces;
    }
    for (int p = 0; p < pieces; ++p) {
      std::vector<int> members;
      for (std::size_t s = 0; s < kept.size(); ++s)
        if (piece[s] == p) members.push_back(kept[s]);
      Blueprint bp;
      bp.rank = static_cast<int>(members.size());
      bp.gram = ExactMatrix(bp.rank, bp.rank);
      bp.label = comp.label + "/";
      for (int i = 0; i < bp.rank; ++i) {
        if (i) bp.label += ",";
        bp.label += std::to_string(members[i] + 1);
        for (int k = 0; k < bp.rank; ++k) bp.gram(i, k) = comp.gram(members[i], members[k]);
        bp.parent_simple.push_back(rs.simple_roots()[comp.simple_offset + members[i]]);
        bp.plus.push_back(rs.in_pi_plus(comp.simple_offset + members[i]) ? 1 : 0);
      }
      bps.push_back(std::move(bp));
    }
  }
  std::string label = rs.label() + " minus {";
  bool first = true;
  for (int j : gone) {
    if (!first) label += ",";
    label += std::to_string(j + 1);
    first = false;
  }
  label += "}";
  return RootSystemAssembler::assemble(label, std::move(bps), &rs);
}

}  // namespace coxcat
