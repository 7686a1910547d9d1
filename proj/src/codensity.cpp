#include "fsc/codensity.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "fsc/kernels.hpp"

namespace fsc {

namespace {

double delta_from_table(const size_table& table, vertex_id v, vertex_id w) {
  const std::uint32_t vbit = std::uint32_t{1} << v;
  const std::uint32_t wbit = std::uint32_t{1} << w;
  const std::uint32_t all = static_cast<std::uint32_t>(table.value.size() - 1);
  double best = 0.0;
  for (std::uint32_t alpha = 1; alpha <= all; ++alpha) {
    best = std::max(best, ext_sub(table[alpha | wbit], table[alpha | vbit]));
    if (std::isinf(best)) break;
  }
  return best;
}

// delta(v, w) over subsets of at most k vertices, off a pair matrix when
// k == 1 and by direct enumeration otherwise.
double delta_kclique_pair(const pair_matrix& pm, vertex_id v, vertex_id w) {
  if (v == w) return 0.0;
  if (pm.all_finite)
    return std::max(0.0, kernels::max_difference(pm.row(w), pm.row(v), static_cast<std::size_t>(pm.n)));
  double best = 0.0;
  for (int u = 0; u < pm.n; ++u) {
    best = std::max(best, ext_sub(pm.at(w, u), pm.at(v, u)));
    if (std::isinf(best)) break;
  }
  return best;
}

void insert_sorted(simplex& s, vertex_id v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

double delta_kclique_general(const filtered_complex& c, vertex_id v, vertex_id w, int k) {
  const int n = c.vertex_count();
  double best = 0.0;
  simplex alpha;
  simplex with_v, with_w;
  // Combinations of every size 1..k.
  std::vector<int> idx;
  for (int r = 1; r <= std::min(k, n); ++r) {
    idx.assign(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      alpha.assign(idx.begin(), idx.end());
      with_w = alpha;
      insert_sorted(with_w, w);
      with_v = alpha;
      insert_sorted(with_v, v);
      best = std::max(best, ext_sub(c.size_of(with_w), c.size_of(with_v)));
      if (std::isinf(best)) return best;
      int i = r - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return best;
}

void check_kclique_precondition(const filtered_complex& c, int k) {
  if (k < 1) throw input_error("k-clique evaluation needs k >= 1");
  if (!c.clique_order())
    throw input_error("k-clique evaluation requires a complex with a clique order");
  if (*c.clique_order() > k)
    throw input_error("complex has clique order " + std::to_string(*c.clique_order()) +
                      ", which is coarser than the requested k = " + std::to_string(k));
}

template <class RowFn>
void fill_rows(int n, RowFn&& fill, bool parallel) {
  const unsigned hw = std::thread::hardware_concurrency();
  if (!parallel || hw < 2 || n < 2) {
    for (int i = 0; i < n; ++i) fill(i);
    return;
  }
  const int workers = static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += workers) fill(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

double vertex_quasi_distance(const filtered_complex& c, vertex_id v, vertex_id w,
                             const codensity_options& opts) {
  if (v < 0 || v >= c.vertex_count() || w < 0 || w >= c.vertex_count())
    throw input_error("vertex quasi-distance: unknown vertex id");
  if (v == w) return 0.0;
  if (c.vertex_count() > opts.brute_cap)
    throw feasibility_error(
        "exhaustive vertex quasi-distance capped at " + std::to_string(opts.brute_cap) +
        " vertices, got " + std::to_string(c.vertex_count()) +
        "; use the k-clique evaluation for larger complexes");
  const size_table table = build_size_table(c);
  return delta_from_table(table, v, w);
}

double vertex_quasi_distance_kclique(const filtered_complex& c, vertex_id v, vertex_id w,
                                     int k) {
  if (v < 0 || v >= c.vertex_count() || w < 0 || w >= c.vertex_count())
    throw input_error("vertex quasi-distance: unknown vertex id");
  check_kclique_precondition(c, k);
  if (v == w) return 0.0;
  if (k == 1) return delta_kclique_pair(build_pair_matrix(c), v, w);
  return std::max(0.0, delta_kclique_general(c, v, w, k));
}

codensity_matrix compute_codensity_matrix(const filtered_complex& c, codensity_mode mode,
                                          int kclique_k, const codensity_options& opts) {
  const int n = c.vertex_count();
  codensity_matrix m;
  m.labels.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m.labels[static_cast<std::size_t>(i)] = i;
  m.delta.assign(static_cast<std::size_t>(n) * n, 0.0);
  m.mode = mode;

  if (mode == codensity_mode::brute) {
    if (n > opts.brute_cap)
      throw feasibility_error(
          "exhaustive codensity matrix capped at " + std::to_string(opts.brute_cap) +
          " vertices, got " + std::to_string(n) +
          "; use the k-clique evaluation for larger complexes");
    const size_table table = build_size_table(c);
    fill_rows(
        n,
        [&](int i) {
          for (int j = 0; j < n; ++j)
            m.delta[static_cast<std::size_t>(i) * n + j] = i == j ? 0.0 : delta_from_table(table, i, j);
        },
        n >= 12);
    return m;
  }

  const int k = kclique_k > 0 ? kclique_k : c.clique_order().value_or(0);
  check_kclique_precondition(c, k);
  m.kclique_k = k;
  if (k == 1) {
    const pair_matrix pm = build_pair_matrix(c);
    fill_rows(
        n,
        [&](int i) {
          for (int j = 0; j < n; ++j)
            m.delta[static_cast<std::size_t>(i) * n + j] = i == j ? 0.0 : delta_kclique_pair(pm, i, j);
        },
        n >= 128);
    return m;
  }
  fill_rows(
      n,
      [&](int i) {
        for (int j = 0; j < n; ++j)
          m.delta[static_cast<std::size_t>(i) * n + j] =
              i == j ? 0.0 : std::max(0.0, delta_kclique_general(c, i, j, k));
      },
      n >= 32);
  return m;
}

double codensity_of(const codensity_matrix& m, int row) {
  const int n = m.size();
  if (row < 0 || row >= n) throw input_error("codensity_of: row out of range");
  if (n == 1) return inf;
  double best = inf;
  for (int j = 0; j < n; ++j)
    if (j != row) best = std::min(best, m.at(row, j));
  return best;
}

double min_codensity(const codensity_matrix& m) {
  if (m.size() == 1) return inf;
  double best = inf;
  for (int i = 0; i < m.size(); ++i) best = std::min(best, codensity_of(m, i));
  return best;
}

}  // namespace fsc
