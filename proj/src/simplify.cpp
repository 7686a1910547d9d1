#include "fsc/simplify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fsc {

namespace {

struct resolved_mode {
  codensity_mode mode = codensity_mode::brute;
  int k = 0;
};

resolved_mode resolve(const filtered_complex& c, const simplify_options& opts) {
  switch (opts.mode) {
    case matrix_mode::brute:
      return {codensity_mode::brute, 0};
    case matrix_mode::kclique:
      return {codensity_mode::kclique, opts.kclique_k > 0 ? opts.kclique_k
                                                          : c.clique_order().value_or(0)};
    case matrix_mode::automatic:
      if (c.clique_order())
        return {codensity_mode::kclique,
                opts.kclique_k > 0 ? opts.kclique_k : *c.clique_order()};
      return {codensity_mode::brute, 0};
  }
  return {};
}

struct min_entry {
  int row = -1, col = -1;
  double value = inf;
};

// Minimal finite off-diagonal entry among alive rows/columns; lexicographic
// (row, col) tie-break.
min_entry minimal_off_diagonal(const codensity_matrix& q, const std::vector<char>& alive) {
  min_entry best;
  const int n = q.size();
  for (int i = 0; i < n; ++i) {
    if (!alive[static_cast<std::size_t>(i)]) continue;
    for (int j = 0; j < n; ++j) {
      if (i == j || !alive[static_cast<std::size_t>(j)]) continue;
      const double v = q.at(i, j);
      if (std::isfinite(v) && v < best.value) best = {i, j, v};
    }
  }
  return best;
}

}  // namespace

simplify_result greedy_simplify(const filtered_complex& c, int n_remove,
                                const simplify_options& opts) {
  const int n = c.vertex_count();
  if (n_remove < 1 || n_remove > n - 1)
    throw input_error("greedy simplification can remove between 1 and " + std::to_string(n - 1) +
                      " vertices, got " + std::to_string(n_remove));
  const resolved_mode rm = resolve(c, opts);

  simplification_log log;
  log.recompute = opts.recompute;

  if (!opts.recompute) {
    const codensity_matrix q = compute_codensity_matrix(c, rm.mode, rm.k, opts.codensity);
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    for (int step = 0; step < n_remove; ++step) {
      const min_entry pick = minimal_off_diagonal(q, alive);
      if (pick.row < 0)
        throw feasibility_error("no removable vertex: every off-diagonal entry is +inf");
      log.steps.push_back({pick.row, pick.col, pick.value});
      log.error_bound += pick.value;
      alive[static_cast<std::size_t>(pick.row)] = 0;
    }
    std::vector<vertex_id> keep;
    for (int v = 0; v < n; ++v)
      if (alive[static_cast<std::size_t>(v)]) keep.push_back(v);
    restriction res = restrict_complex(c, keep);
    log.kept = res.kept;
    return {std::move(res.complex), std::move(log)};
  }

  filtered_complex current = c;
  std::vector<vertex_id> original(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) original[static_cast<std::size_t>(v)] = v;
  for (int step = 0; step < n_remove; ++step) {
    const codensity_matrix q = compute_codensity_matrix(current, rm.mode, rm.k, opts.codensity);
    std::vector<char> alive(original.size(), 1);
    const min_entry pick = minimal_off_diagonal(q, alive);
    if (pick.row < 0)
      throw feasibility_error("no removable vertex: every off-diagonal entry is +inf");
    log.steps.push_back({original[static_cast<std::size_t>(pick.row)],
                         original[static_cast<std::size_t>(pick.col)], pick.value});
    log.error_bound += pick.value;
    std::vector<vertex_id> keep;
    for (int v = 0; v < current.vertex_count(); ++v)
      if (v != pick.row) keep.push_back(v);
    current = restrict_complex(current, keep).complex;
    original.erase(original.begin() + pick.row);
  }
  log.kept = original;
  return {std::move(current), std::move(log)};
}

simplify_result extract_core(const filtered_complex& c, const simplify_options& opts) {
  simplification_log log;
  log.recompute = true;

  filtered_complex current = c;
  std::vector<vertex_id> original(static_cast<std::size_t>(c.vertex_count()));
  for (int v = 0; v < c.vertex_count(); ++v) original[static_cast<std::size_t>(v)] = v;

  while (current.vertex_count() > 1) {
    const resolved_mode rm = resolve(current, opts);
    const codensity_matrix q = compute_codensity_matrix(current, rm.mode, rm.k, opts.codensity);
    int pick_row = -1, pick_col = -1;
    for (int i = 0; i < q.size() && pick_row < 0; ++i)
      for (int j = 0; j < q.size(); ++j)
        if (i != j && q.at(i, j) == 0.0) {
          pick_row = i;
          pick_col = j;
          break;
        }
    if (pick_row < 0) break;  // simple: every vertex now costs something
    log.steps.push_back({original[static_cast<std::size_t>(pick_row)],
                         original[static_cast<std::size_t>(pick_col)], 0.0});
    std::vector<vertex_id> keep;
    for (int v = 0; v < current.vertex_count(); ++v)
      if (v != pick_row) keep.push_back(v);
    current = restrict_complex(current, keep).complex;
    original.erase(original.begin() + pick_row);
  }
  log.kept = original;
  return {std::move(current), std::move(log)};
}

removal_witness_result removal_witness(const filtered_complex& c, vertex_id v,
                                       const simplify_options& opts) {
  const int n = c.vertex_count();
  if (n < 2) throw input_error("removal witness needs at least two vertices");
  if (v < 0 || v >= n) throw input_error("removal witness: unknown vertex id");
  const resolved_mode rm = resolve(c, opts);
  const codensity_matrix q = compute_codensity_matrix(c, rm.mode, rm.k, opts.codensity);

  vertex_id surrogate = -1;
  double bound = inf;
  for (int w = 0; w < n; ++w)
    if (w != v && q.at(v, w) < bound) {
      bound = q.at(v, w);
      surrogate = w;
    }
  if (!std::isfinite(bound))
    throw feasibility_error("vertex " + std::to_string(v) +
                            " has infinite codensity; no removal certificate exists");

  std::vector<vertex_id> keep;
  for (int u = 0; u < n; ++u)
    if (u != v) keep.push_back(u);
  removal_witness_result out{{}, {}, bound, surrogate, restrict_complex(c, keep)};

  std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < out.restricted.kept.size(); ++i)
    old_to_new[static_cast<std::size_t>(out.restricted.kept[i])] = static_cast<int>(i);

  out.collapse.map.resize(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    out.collapse.map[static_cast<std::size_t>(u)] =
        old_to_new[static_cast<std::size_t>(u == v ? surrogate : u)];
  out.inclusion.map = out.restricted.kept;
  return out;
}

}  // namespace fsc
