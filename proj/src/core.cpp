#include "fsc/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace fsc {

simplex make_simplex(std::vector<vertex_id> vertices) {
  if (vertices.empty()) throw input_error("a simplex needs at least one vertex");
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1])
      throw input_error("repeated vertex " + std::to_string(vertices[i]) + " in simplex");
  return vertices;
}

simplex simplex_union(const simplex& a, const simplex& b) {
  simplex out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string simplex_to_string(const simplex& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

namespace {

bool strictly_increasing(const simplex& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] <= s[i - 1]) return false;
  return true;
}

// Visits all r-element index combinations out of 0..m-1.
template <class F>
void for_each_combination(int m, int r, F&& visit) {
  if (r > m || r <= 0) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

filtered_complex::filtered_complex(int n_vertices, birth_map births,
                                   std::optional<int> clique_order)
    : n_(n_vertices), clique_(clique_order), births_(std::move(births)) {
  if (n_ <= 0) throw input_error("a complex needs at least one vertex");
  if (clique_ && *clique_ < 1) throw input_error("clique order must be positive");

  int top = 0;
  for (const auto& [s, b] : births_) {
    if (!strictly_increasing(s) || s.empty())
      throw input_error("simplex " + simplex_to_string(s) + " is not in canonical order");
    if (s.front() < 0 || s.back() >= n_)
      throw input_error("simplex " + simplex_to_string(s) + " has a vertex outside 0.." +
                        std::to_string(n_ - 1));
    if (!std::isfinite(b))
      throw input_error("simplex " + simplex_to_string(s) + " has a non-finite birth");
    top = std::max(top, static_cast<int>(s.size()) - 1);
  }

  // Omitted faces inherit the minimum birth over cofaces, propagated one
  // dimension at a time from the stored simplices downward.
  std::unordered_set<simplex, simplex_hash> originally_stored;
  originally_stored.reserve(births_.size());
  std::vector<std::vector<simplex>> by_dim(static_cast<std::size_t>(top) + 1);
  for (const auto& [s, b] : births_) {
    originally_stored.insert(s);
    by_dim[s.size() - 1].push_back(s);
  }
  for (int d = top; d >= 1; --d) {
    for (const simplex& s : by_dim[static_cast<std::size_t>(d)]) {
      const double b = births_.at(s);
      simplex face(s.size() - 1);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        auto [it, inserted] = births_.try_emplace(face, b);
        if (inserted) {
          by_dim[static_cast<std::size_t>(d) - 1].push_back(face);
        } else if (!originally_stored.count(face)) {
          it->second = std::min(it->second, b);
        }
      }
    }
  }

  for (vertex_id v = 0; v < n_; ++v)
    if (!births_.count(simplex{v}))
      throw input_error("vertex " + std::to_string(v) + " appears in no simplex");
  max_dim_ = top;
}

double filtered_complex::vertex_birth(vertex_id v) const {
  if (v < 0 || v >= n_) throw input_error("unknown vertex id " + std::to_string(v));
  return births_.find(simplex{v})->second;
}

double filtered_complex::size_of(const simplex& s) const {
  if (s.empty()) throw input_error("size_of: empty simplex");
  if (!strictly_increasing(s)) throw input_error("size_of: simplex not in canonical order");
  if (s.front() < 0 || s.back() >= n_)
    throw input_error("size_of: unknown vertex id in " + simplex_to_string(s));
  auto it = births_.find(s);
  if (it != births_.end()) return it->second;
  if (!clique_) return inf;
  const int k = *clique_;
  const int m = static_cast<int>(s.size());
  if (m <= k + 1) return inf;  // its own skeleton, and it is absent
  double best = -inf;
  bool missing = false;
  simplex sub(static_cast<std::size_t>(k) + 1);
  for_each_combination(m, k + 1, [&](const std::vector<int>& idx) {
    if (missing) return;
    for (int i = 0; i <= k; ++i) sub[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    auto f = births_.find(sub);
    if (f == births_.end()) {
      missing = true;
      return;
    }
    best = std::max(best, f->second);
  });
  return missing ? inf : best;
}

validation_report filtered_complex::validate() const {
  validation_report report;
  simplex face;
  for (const auto& [s, b] : births_) {
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      face.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      const double fb = births_.at(face);
      if (fb > b) report.monotonicity.push_back({face, s, fb, b});
    }
  }
  if (clique_) {
    const int k = *clique_;
    for (const auto& [s, b] : births_) {
      if (static_cast<int>(s.size()) < k + 2) continue;
      double derived = -inf;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        derived = std::max(derived, births_.at(face));
      }
      if (derived != b) report.clique_mismatches.push_back(s);
    }
  }
  return report;
}

restriction restrict_complex(const filtered_complex& c,
                             const std::vector<vertex_id>& keep) {
  std::vector<vertex_id> kept = keep;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty()) throw input_error("restriction to an empty vertex set");
  if (kept.front() < 0 || kept.back() >= c.vertex_count())
    throw input_error("restriction vertex set contains an unknown id");

  std::vector<int> old_to_new(static_cast<std::size_t>(c.vertex_count()), -1);
  for (std::size_t i = 0; i < kept.size(); ++i)
    old_to_new[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);

  birth_map restricted;
  simplex mapped;
  for (const auto& [s, b] : c.births()) {
    bool inside = true;
    for (vertex_id v : s)
      if (old_to_new[static_cast<std::size_t>(v)] < 0) {
        inside = false;
        break;
      }
    if (!inside) continue;
    mapped.clear();
    for (vertex_id v : s) mapped.push_back(old_to_new[static_cast<std::size_t>(v)]);
    restricted.emplace(mapped, b);
  }
  return restriction{
      filtered_complex(static_cast<int>(kept.size()), std::move(restricted), c.clique_order()),
      std::move(kept)};
}

namespace {

using vertex_signature = std::vector<std::pair<int, double>>;

std::vector<vertex_signature> vertex_signatures(const filtered_complex& c) {
  std::vector<vertex_signature> sig(static_cast<std::size_t>(c.vertex_count()));
  for (const auto& [s, b] : c.births())
    for (vertex_id v : s) sig[static_cast<std::size_t>(v)].emplace_back(static_cast<int>(s.size()), b);
  for (auto& g : sig) std::sort(g.begin(), g.end());
  return sig;
}

}  // namespace

std::optional<std::vector<vertex_id>> find_isomorphism(const filtered_complex& a,
                                                       const filtered_complex& b,
                                                       int vertex_cap) {
  if (a.vertex_count() != b.vertex_count()) return std::nullopt;
  const int n = a.vertex_count();
  if (n > vertex_cap)
    throw feasibility_error("isomorphism search capped at " + std::to_string(vertex_cap) +
                            " vertices, got " + std::to_string(n));
  if (a.simplex_count() != b.simplex_count()) return std::nullopt;

  const auto sig_a = vertex_signatures(a);
  const auto sig_b = vertex_signatures(b);

  // Simplices of a indexed by their largest vertex, so each one is checked
  // exactly once, at the moment its last vertex gets assigned.
  std::vector<std::vector<const std::pair<const simplex, double>*>> by_max(
      static_cast<std::size_t>(n));
  for (const auto& entry : a.births())
    by_max[static_cast<std::size_t>(entry.first.back())].push_back(&entry);

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  simplex mapped;

  // Assign vertices of a in an order that checks simplices early: vertex 0,
  // 1, ... is fine because by_max[v] only involves vertices <= v.
  auto dfs = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (sig_a[static_cast<std::size_t>(v)] != sig_b[static_cast<std::size_t>(w)]) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      bool consistent = true;
      for (const auto* entry : by_max[static_cast<std::size_t>(v)]) {
        mapped.clear();
        for (vertex_id u : entry->first) mapped.push_back(image[static_cast<std::size_t>(u)]);
        std::sort(mapped.begin(), mapped.end());
        auto it = b.births().find(mapped);
        if (it == b.births().end() || it->second != entry->second) {
          consistent = false;
          break;
        }
      }
      if (consistent && self(self, v + 1)) return true;
      used[static_cast<std::size_t>(w)] = false;
      image[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (dfs(dfs, 0)) return image;
  return std::nullopt;
}

size_table build_size_table(const filtered_complex& c, int vertex_cap) {
  const int n = c.vertex_count();
  if (n > vertex_cap)
    throw feasibility_error("dense size table capped at " + std::to_string(vertex_cap) +
                            " vertices, got " + std::to_string(n));
  size_table table;
  table.n = n;
  table.value.assign(std::size_t{1} << n, inf);
  for (const auto& [s, b] : c.births()) {
    std::uint32_t mask = 0;
    for (vertex_id v : s) mask |= std::uint32_t{1} << v;
    table.value[mask] = b;
  }
  if (c.clique_order()) {
    const int k = *c.clique_order();
    // Ascending masks visit every submask first, so the one-vertex-removed
    // values are already final when a mask is reached.
    for (std::uint32_t mask = 1; mask < table.value.size(); ++mask) {
      if (std::popcount(mask) <= k + 1) continue;
      if (table.value[mask] != inf) continue;  // stored wins
      double derived = -inf;
      std::uint32_t rest = mask;
      while (rest) {
        const std::uint32_t bit = rest & (~rest + 1);
        derived = std::max(derived, table.value[mask ^ bit]);
        rest ^= bit;
      }
      table.value[mask] = derived;
    }
  }
  return table;
}

pair_matrix build_pair_matrix(const filtered_complex& c) {
  const int n = c.vertex_count();
  pair_matrix m;
  m.n = n;
  m.e.assign(static_cast<std::size_t>(n) * n, inf);
  for (int i = 0; i < n; ++i) m.e[static_cast<std::size_t>(i) * n + i] = c.vertex_birth(i);
  simplex edge(2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      edge[0] = i;
      edge[1] = j;
      auto it = c.births().find(edge);
      const double b = it == c.births().end() ? inf : it->second;
      m.e[static_cast<std::size_t>(i) * n + j] = b;
      m.e[static_cast<std::size_t>(j) * n + i] = b;
    }
  for (double x : m.e)
    if (!std::isfinite(x)) {
      m.all_finite = false;
      break;
    }
  return m;
}

}  // namespace fsc
