#include "fsc/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace fsc {

namespace {

struct filtration_cell {
  simplex s;
  double birth = 0;
};

// All simplices of dimension <= top_dim that ever appear, with their births.
std::vector<filtration_cell> materialize(const filtered_complex& c, int top_dim) {
  std::vector<filtration_cell> cells;
  if (!c.clique_order() || c.max_dim() >= top_dim) {
    for (const auto& [s, b] : c.births())
      if (static_cast<int>(s.size()) <= top_dim + 1) cells.push_back({s, b});
    return cells;
  }
  // Clique complex stored below top_dim: walk subsets, pruning branches whose
  // skeleton is incomplete. Extending a prefix by v adds only skeleton
  // subsets that contain v.
  const int k = *c.clique_order();
  const int n = c.vertex_count();
  simplex prefix, probe;
  std::vector<int> idx;
  auto grow = [&](const simplex& p, double birth, int v) {
    double b = std::max(birth, c.vertex_birth(v));
    const int m = static_cast<int>(p.size());
    for (int size = 1; size <= std::min(k, m); ++size) {
      idx.resize(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
      while (true) {
        probe.clear();
        for (int i = 0; i < size; ++i) probe.push_back(p[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
        probe.push_back(v);
        const double piece = c.size_of(probe);
        if (std::isinf(piece)) return inf;
        b = std::max(b, piece);
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
          idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    return b;
  };
  auto walk = [&](auto&& self, double birth) -> void {
    const int start = prefix.empty() ? 0 : prefix.back() + 1;
    for (int v = start; v < n; ++v) {
      const double b = grow(prefix, birth, v);
      if (std::isinf(b)) continue;
      prefix.push_back(v);
      cells.push_back({prefix, b});
      if (static_cast<int>(prefix.size()) < top_dim + 1) self(self, b);
      prefix.pop_back();
    }
  };
  walk(walk, -inf);
  return cells;
}

void xor_into(std::vector<int>& column, const std::vector<int>& other) {
  std::vector<int> merged;
  merged.reserve(column.size() + other.size());
  std::set_symmetric_difference(column.begin(), column.end(), other.begin(), other.end(),
                                std::back_inserter(merged));
  column.swap(merged);
}

}  // namespace

std::vector<persistence_diagram> barcodes(const filtered_complex& c, int max_hdim) {
  if (max_hdim < 0) throw input_error("barcodes need max_hdim >= 0");
  const bool stored_in_full = c.max_dim() >= c.vertex_count() - 1;
  if (!c.clique_order() && !stored_in_full && c.max_dim() < max_hdim + 1)
    throw input_error("homology up to dimension " + std::to_string(max_hdim) +
                      " needs simplices stored up to dimension " + std::to_string(max_hdim + 1) +
                      ", but the complex stops at " + std::to_string(c.max_dim()));

  std::vector<filtration_cell> cells = materialize(c, max_hdim + 1);
  std::sort(cells.begin(), cells.end(), [](const filtration_cell& x, const filtration_cell& y) {
    if (x.birth != y.birth) return x.birth < y.birth;
    if (x.s.size() != y.s.size()) return x.s.size() < y.s.size();
    return x.s < y.s;
  });

  std::unordered_map<simplex, int, simplex_hash> position;
  position.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) position.emplace(cells[i].s, static_cast<int>(i));

  const int m = static_cast<int>(cells.size());
  std::vector<std::vector<int>> reduced(static_cast<std::size_t>(m));
  std::vector<int> owner_of_pivot(static_cast<std::size_t>(m), -1);
  std::vector<int> killer(static_cast<std::size_t>(m), -1);  // column that kills the cell

  simplex face;
  for (int j = 0; j < m; ++j) {
    const simplex& s = cells[static_cast<std::size_t>(j)].s;
    if (s.size() == 1) continue;
    std::vector<int>& column = reduced[static_cast<std::size_t>(j)];
    column.reserve(s.size());
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      face.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      column.push_back(position.at(face));
    }
    std::sort(column.begin(), column.end());
    while (!column.empty()) {
      const int pivot = column.back();
      const int other = owner_of_pivot[static_cast<std::size_t>(pivot)];
      if (other < 0) {
        owner_of_pivot[static_cast<std::size_t>(pivot)] = j;
        killer[static_cast<std::size_t>(pivot)] = j;
        break;
      }
      xor_into(column, reduced[static_cast<std::size_t>(other)]);
    }
  }

  std::vector<persistence_diagram> diagrams(static_cast<std::size_t>(max_hdim) + 1);
  for (int d = 0; d <= max_hdim; ++d) diagrams[static_cast<std::size_t>(d)].dim = d;
  for (int i = 0; i < m; ++i) {
    const int dim = static_cast<int>(cells[static_cast<std::size_t>(i)].s.size()) - 1;
    if (dim > max_hdim) continue;
    const bool creates = cells[static_cast<std::size_t>(i)].s.size() == 1 ||
                         reduced[static_cast<std::size_t>(i)].empty();
    if (!creates) continue;
    const double birth = cells[static_cast<std::size_t>(i)].birth;
    const int j = killer[static_cast<std::size_t>(i)];
    const double death = j < 0 ? inf : cells[static_cast<std::size_t>(j)].birth;
    if (death > birth)
      diagrams[static_cast<std::size_t>(dim)].pairs.push_back({birth, death});
  }
  for (auto& diagram : diagrams)
    std::sort(diagram.pairs.begin(), diagram.pairs.end(),
              [](const persistence_pair& x, const persistence_pair& y) {
                if (x.birth != y.birth) return x.birth < y.birth;
                return x.death < y.death;
              });
  return diagrams;
}

namespace {

// Kuhn's augmenting-path maximum bipartite matching.
struct bipartite_matcher {
  int left = 0, right = 0;
  std::vector<std::vector<int>> adjacency;

  bool try_augment(int u, std::vector<int>& match_right, std::vector<char>& seen) {
    for (int v : adjacency[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      if (match_right[static_cast<std::size_t>(v)] < 0 ||
          try_augment(match_right[static_cast<std::size_t>(v)], match_right, seen)) {
        match_right[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    return false;
  }

  bool has_perfect_matching() {
    std::vector<int> match_right(static_cast<std::size_t>(right), -1);
    int matched = 0;
    for (int u = 0; u < left; ++u) {
      std::vector<char> seen(static_cast<std::size_t>(right), 0);
      if (try_augment(u, match_right, seen)) ++matched;
    }
    return matched == left;
  }
};

double pair_cost(const persistence_pair& a, const persistence_pair& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

}  // namespace

double bottleneck_distance(const persistence_diagram& a, const persistence_diagram& b) {
  if (a.dim != b.dim)
    throw input_error("bottleneck distance between diagrams of dimensions " +
                      std::to_string(a.dim) + " and " + std::to_string(b.dim));

  std::vector<persistence_pair> fin_a, fin_b;
  std::vector<double> ess_a, ess_b;
  for (const auto& p : a.pairs)
    (std::isinf(p.death) ? ess_a.push_back(p.birth) : (void)fin_a.push_back(p));
  for (const auto& p : b.pairs)
    (std::isinf(p.death) ? ess_b.push_back(p.birth) : (void)fin_b.push_back(p));
  if (ess_a.size() != ess_b.size()) return inf;

  std::vector<double> candidates{0.0};
  for (double x : ess_a)
    for (double y : ess_b) candidates.push_back(std::abs(x - y));
  for (const auto& p : fin_a)
    for (const auto& q : fin_b) candidates.push_back(pair_cost(p, q));
  for (const auto& p : fin_a) candidates.push_back((p.death - p.birth) / 2);
  for (const auto& q : fin_b) candidates.push_back((q.death - q.birth) / 2);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const int na = static_cast<int>(fin_a.size());
  const int nb = static_cast<int>(fin_b.size());
  const int ne = static_cast<int>(ess_a.size());

  auto feasible = [&](double r) {
    if (ne > 0) {
      bipartite_matcher essential{ne, ne, {}};
      essential.adjacency.assign(static_cast<std::size_t>(ne), {});
      for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ne; ++j)
          if (std::abs(ess_a[static_cast<std::size_t>(i)] - ess_b[static_cast<std::size_t>(j)]) <= r)
            essential.adjacency[static_cast<std::size_t>(i)].push_back(j);
      if (!essential.has_perfect_matching()) return false;
    }
    // Left: points of a, then diagonal slots for points of b. Right likewise.
    bipartite_matcher finite{na + nb, nb + na, {}};
    finite.adjacency.assign(static_cast<std::size_t>(na + nb), {});
    for (int i = 0; i < na; ++i) {
      for (int j = 0; j < nb; ++j)
        if (pair_cost(fin_a[static_cast<std::size_t>(i)], fin_b[static_cast<std::size_t>(j)]) <= r)
          finite.adjacency[static_cast<std::size_t>(i)].push_back(j);
      if ((fin_a[static_cast<std::size_t>(i)].death - fin_a[static_cast<std::size_t>(i)].birth) / 2 <= r)
        finite.adjacency[static_cast<std::size_t>(i)].push_back(nb + i);
    }
    for (int j = 0; j < nb; ++j) {
      auto& row = finite.adjacency[static_cast<std::size_t>(na + j)];
      if ((fin_b[static_cast<std::size_t>(j)].death - fin_b[static_cast<std::size_t>(j)].birth) / 2 <= r)
        row.push_back(j);
      for (int i = 0; i < na; ++i) row.push_back(nb + i);  // diagonal to diagonal
    }
    return finite.has_perfect_matching();
  };

  // The optimum is one of the realizable costs; take the smallest feasible.
  int lo = 0, hi = static_cast<int>(candidates.size()) - 1;
  if (!feasible(candidates[static_cast<std::size_t>(hi)])) return inf;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (feasible(candidates[static_cast<std::size_t>(mid)]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[static_cast<std::size_t>(lo)];
}

}  // namespace fsc
