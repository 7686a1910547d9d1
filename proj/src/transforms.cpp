#include "fsc/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fsc {

namespace {

// Enumerates subsets of 0..n-1 of size <= top_size by extending with larger
// vertices only. `grow(prefix, v)` returns the birth of prefix + {v} given
// the birth of the prefix, or +inf to prune the whole branch.
template <class Grow, class Emit>
void enumerate_from(simplex& prefix, double birth, int n, int top_size, const Grow& grow,
                    const Emit& emit) {
  const int start = prefix.empty() ? 0 : prefix.back() + 1;
  for (int v = start; v < n; ++v) {
    const double b = grow(prefix, birth, v);
    if (std::isinf(b)) continue;
    prefix.push_back(v);
    emit(prefix, b);
    if (static_cast<int>(prefix.size()) < top_size)
      enumerate_from(prefix, b, n, top_size, grow, emit);
    prefix.pop_back();
  }
}

}  // namespace

filtered_complex vietoris_rips(const distance_matrix& d, int max_dim) {
  if (max_dim < 1) throw input_error("Rips construction needs max_dim >= 1");
  const int n = d.size();
  birth_map births;
  simplex prefix;
  enumerate_from(
      prefix, 0.0, n, std::min(max_dim + 1, n),
      [&](const simplex& p, double birth, int v) {
        double b = birth;
        for (vertex_id u : p) b = std::max(b, d.at(u, v));
        return b;
      },
      [&](const simplex& s, double b) { births.emplace(s, b); });
  return filtered_complex(n, std::move(births), 1);
}

filtered_complex clique_completion(const filtered_complex& c, int k) {
  if (k < 1) throw input_error("clique completion needs k >= 1");
  const int n = c.vertex_count();
  const int top_size = std::min(c.max_dim() + 1, n);
  birth_map births;
  simplex prefix, probe;
  enumerate_from(
      prefix, -inf, n, top_size,
      [&](const simplex& p, double birth, int v) {
        // Adding v brings in exactly the skeleton subsets that contain v.
        double b = std::max(birth, c.vertex_birth(v));
        const int m = static_cast<int>(p.size());
        const int r = std::min(k, m);
        // Subsets of p of size 1..r, each extended by v.
        std::vector<int> idx;
        for (int size = 1; size <= r && std::isfinite(b); ++size) {
          idx.resize(static_cast<std::size_t>(size));
          for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
          while (true) {
            probe.clear();
            for (int i = 0; i < size; ++i) probe.push_back(p[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
            probe.push_back(v);
            auto it = c.births().find(probe);
            if (it == c.births().end()) return inf;
            b = std::max(b, it->second);
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
              idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
          }
        }
        return b;
      },
      [&](const simplex& s, double b) { births.emplace(s, b); });
  return filtered_complex(n, std::move(births), k);
}

filtered_complex tail_transform(const filtered_complex& c, int k) {
  if (k < 0) throw input_error("tail transform needs k >= 0");
  if (k == 0) return c;
  if (c.max_dim() < k)
    throw input_error("tail transform with k = " + std::to_string(k) +
                      " needs stored simplices of dimension >= " + std::to_string(k));

  birth_map births;
  simplex face;
  std::vector<int> idx;
  for (const auto& [s, b] : c.births()) {
    const int m = static_cast<int>(s.size());
    if (m < k + 1) continue;
    births.emplace(s, b);  // births at and above k+1 vertices are unchanged
    // Relax every face with at most k vertices.
    for (int size = 1; size <= k; ++size) {
      idx.resize(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
      while (true) {
        face.clear();
        for (int i = 0; i < size; ++i) face.push_back(s[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
        auto [it, inserted] = births.try_emplace(face, b);
        if (!inserted) it->second = std::min(it->second, b);
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
          idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  for (vertex_id v = 0; v < c.vertex_count(); ++v)
    if (!births.count(simplex{v}))
      throw input_error("tail transform with k = " + std::to_string(k) + " leaves vertex " +
                        std::to_string(v) + " without any qualifying coface");

  std::optional<int> clique = c.clique_order();
  if (clique && *clique < k) clique.reset();  // only an order >= k survives
  return filtered_complex(c.vertex_count(), std::move(births), clique);
}

double diam_k(const distance_matrix& d, int k, const std::vector<int>& alpha) {
  if (alpha.empty()) throw input_error("diam_k of an empty point set");
  if (k < 0) throw input_error("diam_k needs k >= 0");
  if (k + 1 > d.size())
    throw input_error("diam_k with k = " + std::to_string(k) + " needs at least " +
                      std::to_string(k + 1) + " points");
  for (int p : alpha)
    if (p < 0 || p >= d.size()) throw input_error("diam_k: unknown point " + std::to_string(p));

  const double base = d.diameter_of(alpha);
  const int missing = k + 1 - static_cast<int>(alpha.size());
  if (missing <= 0) return base;

  // Minimum over completions by `missing` extra points.
  std::vector<int> others;
  for (int p = 0; p < d.size(); ++p)
    if (std::find(alpha.begin(), alpha.end(), p) == alpha.end()) others.push_back(p);

  double best = inf;
  std::vector<int> pick(static_cast<std::size_t>(missing));
  const int m = static_cast<int>(others.size());
  for (int i = 0; i < missing; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    double diam = base;
    for (int i = 0; i < missing; ++i) {
      const int p = others[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
      for (int q : alpha) diam = std::max(diam, d.at(p, q));
      for (int j = 0; j < i; ++j)
        diam = std::max(diam, d.at(p, others[static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])]));
    }
    best = std::min(best, diam);
    int i = missing - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - missing + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < missing; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return best;
}

closest_point_result closest_point_delta1(const distance_matrix& d, int x) {
  if (d.size() < 2) throw input_error("closest-point evaluation needs at least two points");
  if (x < 0 || x >= d.size()) throw input_error("closest_point_delta1: unknown point");
  closest_point_result out;
  double nearest = inf;
  for (int y = 0; y < d.size(); ++y) {
    if (y == x) continue;
    if (d.at(x, y) < nearest) {
      nearest = d.at(x, y);
      out.y = y;
    }
  }
  double worst = 0.0;
  for (int p = 0; p < d.size(); ++p) {
    if (p == x || p == out.y) continue;
    worst = std::max(worst, d.at(out.y, p) - d.at(x, p));
  }
  out.value = std::max(0.0, worst);
  return out;
}

filtered_complex single_vertex_extension(const filtered_complex& c, vertex_id w, double r) {
  if (w < 0 || w >= c.vertex_count()) throw input_error("extension: unknown vertex id");
  if (r < 0.0 || !std::isfinite(r)) throw input_error("extension needs a finite r >= 0");
  const vertex_id fresh = c.vertex_count();
  birth_map births = c.births();
  births.emplace(simplex{fresh}, c.vertex_birth(w) + r);
  simplex with_w;
  for (const auto& [s, b] : c.births()) {
    with_w = s;
    auto it = std::lower_bound(with_w.begin(), with_w.end(), w);
    if (it == with_w.end() || *it != w) with_w.insert(it, w);
    auto found = c.births().find(with_w);
    if (found == c.births().end()) continue;  // the mirrored simplex never appears
    simplex extended = s;
    extended.push_back(fresh);
    births.emplace(std::move(extended), found->second + r);
  }
  // The mirrored star generally breaks any clique structure.
  return filtered_complex(c.vertex_count() + 1, std::move(births), std::nullopt);
}

}  // namespace fsc
