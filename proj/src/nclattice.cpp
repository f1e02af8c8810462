#include "coxcat/nclattice.hpp"

#include <algorithm>
#include <numeric>

namespace coxcat {

NCLattice::NCLattice(std::shared_ptr<const RootSystem> rs, std::vector<GroupElement> elements,
                     std::vector<int> ranks, const std::vector<std::pair<std::size_t, std::size_t>>& covers)
    : rs_(std::move(rs)) {
  const std::size_t size = elements.size();
  if (size == 0 || ranks.size() != size) throw ArgumentError("lattice needs elements with ranks");
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
    return elements[a].perm() < elements[b].perm();
  });
  std::vector<std::size_t> new_index(size);
  for (std::size_t i = 0; i < size; ++i) new_index[order[i]] = i;
  elements_.reserve(size);
  ranks_.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    elements_.push_back(std::move(elements[order[i]]));
    ranks_.push_back(ranks[order[i]]);
    if (!index_.emplace(elements_.back().perm(), i).second) throw ArgumentError("duplicate lattice element");
  }
  if (ranks_.front() != 0 || (size > 1 && ranks_[size - 2] == ranks_.back()))
    throw ArgumentError("interval must have a unique bottom and top");

  covers_.assign(size, {});
  for (auto [a, b] : covers) {
    const std::size_t i = new_index.at(a);
    const std::size_t j = new_index.at(b);
    if (ranks_[j] != ranks_[i] + 1) throw ArgumentError("cover does not raise the rank by one");
    covers_[i].push_back(j);
  }
  for (auto& c : covers_) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }

  // Up-sets by closure over covers, top down.
  words_ = (size + 63) / 64;
  leq_.assign(size * words_, 0);
  for (std::size_t i = size; i-- > 0;) {
    std::uint64_t* row = &leq_[i * words_];
    row[i / 64] |= 1ULL << (i % 64);
    for (std::size_t j : covers_[i]) {
      const std::uint64_t* up = &leq_[j * words_];
      for (std::size_t w = 0; w < words_; ++w) row[w] |= up[w];
    }
  }
  mobius_ = mobius_vector(*this);
}

std::size_t NCLattice::num_covers() const {
  std::size_t n = 0;
  for (const auto& c : covers_) n += c.size();
  return n;
}

std::optional<std::size_t> NCLattice::index_of(const Perm& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> NCLattice::index_of(const GroupElement& w) const {
  if (w.system_ptr() != rs_.get()) return std::nullopt;
  return index_of(w.perm());
}

Poly1 NCLattice::down_set_rank_poly(std::size_t i) const {
  std::vector<mpz_class> counts(ranks_[i] + 1);
  for (std::size_t a = 0; a <= i; ++a)
    if (leq(a, i)) counts[ranks_[a]] += 1;
  return Poly1(std::move(counts));
}

NCLattice enumerate_interval(const GroupElement& w, std::shared_ptr<const RootSystem> rs, LengthCache* lengths) {
  if (w.system_ptr() != rs.get()) throw ArgumentError("element does not belong to the given root system");
  LengthCache local;
  LengthCache& len = lengths ? *lengths : local;
  const int top_rank = len(w);
  const std::vector<GroupElement> t_set = reflections(*rs);

  std::vector<GroupElement> elements{identity_element(*rs)};
  std::vector<int> ranks{0};
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::size_t level_begin = 0;
  for (int k = 0; k < top_rank; ++k) {
    const std::size_t level_end = elements.size();
    std::unordered_map<Perm, std::size_t, PermHash> next;
    std::unordered_map<Perm, bool, PermHash> rejected;
    for (std::size_t u = level_begin; u < level_end; ++u) {
      for (const GroupElement& t : t_set) {
        GroupElement v = elements[u] * t;
        const auto hit = next.find(v.perm());
        if (hit != next.end()) {
          covers.emplace_back(u, hit->second);
          continue;
        }
        if (rejected.count(v.perm())) continue;
        const bool below = len(v) == k + 1 && len(inverse(v) * w) == top_rank - k - 1;
        if (!below) {
          rejected.emplace(v.perm(), true);
          continue;
        }
        const std::size_t idx = elements.size();
        next.emplace(v.perm(), idx);
        covers.emplace_back(u, idx);
        elements.push_back(std::move(v));
        ranks.push_back(k + 1);
      }
    }
    level_begin = level_end;
  }
  return NCLattice(std::move(rs), std::move(elements), std::move(ranks), covers);
}

NCLattice noncrossing_lattice(std::shared_ptr<const RootSystem> rs, LengthCache* lengths) {
  const GroupElement gamma = coxeter_element(*rs);
  return enumerate_interval(gamma, std::move(rs), lengths);
}

std::vector<std::int64_t> mobius_vector(const NCLattice& lat) {
  std::vector<std::int64_t> mu(lat.size(), 0);
  mu[0] = 1;
  for (std::size_t j = 1; j < lat.size(); ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < j; ++i)
      if (lat.leq(i, j)) s += mu[i];
    mu[j] = -s;
  }
  return mu;
}

namespace {

BiPoly from_grid(const std::vector<std::vector<std::int64_t>>& grid) {
  BiPoly p;
  for (std::size_t k = 0; k < grid.size(); ++k)
    for (std::size_t l = 0; l < grid[k].size(); ++l)
      if (grid[k][l] != 0) p.add_to(static_cast<int>(k), static_cast<int>(l), mpz_class(static_cast<long>(grid[k][l])));
  return p;
}

}  // namespace

BiPoly m_triangle(const NCLattice& lat) {
  const int n = lat.max_rank();
  std::vector<std::vector<std::int64_t>> grid(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (std::size_t a = 0; a < lat.size(); ++a) {
    const GroupElement a_inv = inverse(lat.element(a));
    for (std::size_t b = a; b < lat.size(); ++b) {
      if (!lat.leq(a, b)) continue;
      const auto w = lat.index_of(a_inv * lat.element(b));
      if (!w) throw InternalError("a^-1 b left the lattice for a pair a <= b");
      grid[lat.rank(b)][lat.rank(a)] += lat.mobius(*w);
    }
  }
  return from_grid(grid);
}

BiPoly m_triangle_by_complement(const NCLattice& lat) {
  const int n = lat.max_rank();
  const GroupElement& gamma = lat.element(lat.top());
  std::vector<std::vector<std::int64_t>> grid(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (std::size_t w = 0; w < lat.size(); ++w) {
    const auto c = lat.index_of(gamma * inverse(lat.element(w)));
    if (!c) throw InternalError("gamma w^-1 left the lattice");
    const int rw = lat.rank(w);
    for (std::size_t a = 0; a <= *c; ++a)
      if (lat.leq(a, *c)) grid[lat.rank(a) + rw][lat.rank(a)] += lat.mobius(w);
  }
  return from_grid(grid);
}

Poly1 rank_generating_poly(const NCLattice& lat) {
  std::vector<mpz_class> c(lat.max_rank() + 1);
  for (std::size_t i = 0; i < lat.size(); ++i) c[lat.rank(i)] += 1;
  return Poly1(std::move(c));
}

Poly1 characteristic_poly(const NCLattice& lat) {
  std::vector<mpz_class> c(lat.max_rank() + 1);
  for (std::size_t i = 0; i < lat.size(); ++i) c[lat.rank(i)] += mpz_class(static_cast<long>(lat.mobius(i)));
  return Poly1(std::move(c));
}

std::shared_ptr<const RootSystem> component_system(const RootSystem& rs, int c) {
  const Component& comp = rs.components().at(c);
  std::vector<int> removed;
  for (int j = 0; j < rs.rank(); ++j)
    if (j < comp.simple_offset || j >= comp.simple_offset + comp.rank) removed.push_back(j);
  return standard_parabolic(rs, removed);
}

NCLattice product_lattice(const std::vector<const NCLattice*>& parts, std::shared_ptr<const RootSystem> target) {
  int total_roots = 0;
  for (const auto* p : parts) total_roots += p->system().num_roots();
  if (total_roots != target->num_roots()) throw ArgumentError("parts do not tile the target root system");

  std::vector<GroupElement> elements;
  std::vector<int> ranks;
  std::vector<std::vector<std::size_t>> tuples;
  elements.push_back(identity_element(*target));
  ranks.push_back(0);
  tuples.push_back({});
  int offset = 0;
  for (const auto* part : parts) {
    std::vector<GroupElement> next_elements;
    std::vector<int> next_ranks;
    std::vector<std::vector<std::size_t>> next_tuples;
    const int width = part->system().num_roots();
    for (std::size_t e = 0; e < elements.size(); ++e) {
      for (std::size_t i = 0; i < part->size(); ++i) {
        Perm p = elements[e].perm();
        const Perm& q = part->element(i).perm();
        for (int x = 0; x < width; ++x) p[offset + x] = static_cast<std::uint16_t>(offset + q[x]);
        next_elements.emplace_back(*target, std::move(p));
        next_ranks.push_back(ranks[e] + part->rank(i));
        auto t = tuples[e];
        t.push_back(i);
        next_tuples.push_back(std::move(t));
      }
    }
    elements = std::move(next_elements);
    ranks = std::move(next_ranks);
    tuples = std::move(next_tuples);
    offset += width;
  }

  // Mixed-radix index of a tuple, to locate cover targets.
  std::vector<std::size_t> radix(parts.size(), 1);
  for (std::size_t i = parts.size(); i-- > 1;) radix[i - 1] = radix[i] * parts[i]->size();
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    for (std::size_t c = 0; c < parts.size(); ++c) {
      const std::size_t cur = tuples[e][c];
      for (std::size_t up : parts[c]->covers(cur)) {
        covers.emplace_back(e, e + (up - cur) * radix[c]);
      }
    }
  }
  return NCLattice(std::move(target), std::move(elements), std::move(ranks), covers);
}

}  // namespace coxcat
