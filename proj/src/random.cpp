#include "fsc/random.hpp"

#include <algorithm>
#include <bit>

namespace fsc {

filtered_complex random_monotone_complex(std::mt19937_64& rng, int n_vertices, double scale,
                                         double tie_probability) {
  if (n_vertices < 1 || n_vertices > 20)
    throw input_error("random complex generator supports 1..20 vertices");
  std::uniform_real_distribution<double> birth_dist(0.0, scale);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  const std::uint32_t all = (std::uint32_t{1} << n_vertices) - 1;
  std::vector<double> value(static_cast<std::size_t>(all) + 1, 0.0);
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    double floor = 0.0;
    std::uint32_t rest = mask;
    while (rest) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (mask != bit) floor = std::max(floor, value[mask ^ bit]);
      rest ^= bit;
    }
    if (std::popcount(mask) > 1 && coin(rng) < tie_probability)
      value[mask] = floor;
    else
      value[mask] = std::max(floor, birth_dist(rng));
  }

  birth_map births;
  births.reserve(all);
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    simplex s;
    std::uint32_t rest = mask;
    while (rest) {
      s.push_back(std::countr_zero(rest));
      rest &= rest - 1;
    }
    births.emplace(std::move(s), value[mask]);
  }
  return filtered_complex(n_vertices, std::move(births));
}

distance_matrix random_metric(std::mt19937_64& rng, int n_points, double scale) {
  if (n_points < 1) throw input_error("random metric needs at least one point");
  if (scale <= 0 || !std::isfinite(scale)) throw input_error("random metric needs a positive scale");
  const int n = n_points;

  // Integer distances repaired by exact shortest paths, then scaled by a
  // power of two: every distance is a dyadic rational on one grid, so sums
  // and differences downstream are exact and the triangle inequality holds
  // in real arithmetic, not just up to rounding.
  std::uniform_int_distribution<long long> dist(409, 4096);
  std::vector<long long> grid(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      grid[static_cast<std::size_t>(i) * n + j] = grid[static_cast<std::size_t>(j) * n + i] = dist(rng);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const long long via = grid[static_cast<std::size_t>(i) * n + k] + grid[static_cast<std::size_t>(k) * n + j];
        if (i != j && via < grid[static_cast<std::size_t>(i) * n + j])
          grid[static_cast<std::size_t>(i) * n + j] = via;
      }

  const double unit = std::ldexp(1.0, static_cast<int>(std::lround(std::log2(scale))) - 12);
  std::vector<double> d(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) d[i] = static_cast<double>(grid[i]) * unit;
  return distance_matrix(n, std::move(d));
}

}  // namespace fsc
