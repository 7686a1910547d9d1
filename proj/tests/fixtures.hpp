#pragma once

// Shared fixtures: the max-size simplex family, a three-point metric with one
// short and two long edges, the unit square, the path-graph family whose
// strong interleaving violates the triangle inequality, constant-size
// complexes, and a discrete circle with path flares attached.

#include <cmath>
#include <cstdint>
#include <vector>

#include "fsc/core.hpp"
#include "fsc/metric.hpp"

namespace fixtures {

inline fsc::simplex sx(std::initializer_list<int> vs) {
  return fsc::make_simplex(std::vector<int>(vs));
}

// All subsets of {0..n}, born at their largest vertex.
inline fsc::filtered_complex delta(int n) {
  fsc::birth_map births;
  const std::uint32_t all = (std::uint32_t{1} << (n + 1)) - 1;
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    fsc::simplex s;
    int top = 0;
    for (int v = 0; v <= n; ++v)
      if (mask & (std::uint32_t{1} << v)) {
        s.push_back(v);
        top = v;
      }
    births.emplace(std::move(s), static_cast<double>(top));
  }
  return fsc::filtered_complex(n + 1, std::move(births));
}

// d(0,1) = 1, d(0,2) = d(1,2) = 2.
inline fsc::distance_matrix m3() {
  return fsc::distance_matrix(3, {0, 1, 2, 1, 0, 2, 2, 2, 0});
}

// Unit square: four sides of length 1, diagonals sqrt(2).
inline fsc::distance_matrix sq4() {
  const double d = std::sqrt(2.0);
  return fsc::distance_matrix(4, {0, 1, d, 1, 1, 0, 1, d, d, 1, 0, 1, 1, d, 1, 0});
}

// Path graph on vertices 0..n at time 0, full simplex from time 1.
inline fsc::filtered_complex path_family(int n) {
  fsc::birth_map births;
  const std::uint32_t all = (std::uint32_t{1} << (n + 1)) - 1;
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    fsc::simplex s;
    for (int v = 0; v <= n; ++v)
      if (mask & (std::uint32_t{1} << v)) s.push_back(v);
    const bool early = s.size() == 1 || (s.size() == 2 && s[1] == s[0] + 1);
    births.emplace(std::move(s), early ? 0.0 : 1.0);
  }
  return fsc::filtered_complex(n + 1, std::move(births));
}

// Every subset born at the same time c.
inline fsc::filtered_complex constant_complex(int n_vertices, double c) {
  fsc::birth_map births;
  const std::uint32_t all = (std::uint32_t{1} << n_vertices) - 1;
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    fsc::simplex s;
    for (int v = 0; v < n_vertices; ++v)
      if (mask & (std::uint32_t{1} << v)) s.push_back(v);
    births.emplace(std::move(s), c);
  }
  return fsc::filtered_complex(n_vertices, std::move(births));
}

// Twelve points on a circle at unit arc spacing plus two three-point flares
// of the given spacing, attached at circle points 0 and 6. Distances follow
// shortest paths through the attachment points.
inline fsc::distance_matrix flares(double spacing = 1.0) {
  const int n = 18;
  std::vector<double> d(n * n, 0.0);
  auto arc = [](int i, int j) {
    const int k = std::abs(i - j);
    return static_cast<double>(std::min(k, 12 - k));
  };
  auto depth = [&](int p) { return spacing * (p < 15 ? p - 11 : p - 14); };
  auto attach = [](int p) { return p < 15 ? 0 : 6; };
  auto dist = [&](int i, int j) -> double {
    if (i < 12 && j < 12) return arc(i, j);
    if (i >= 12 && j >= 12) {
      if (attach(i) == attach(j)) return std::abs(depth(i) - depth(j));
      return depth(i) + arc(attach(i), attach(j)) + depth(j);
    }
    if (i < 12) std::swap(i, j);
    return depth(i) + arc(attach(i), j);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(i) * n + j] = dist(i, j);
  return fsc::distance_matrix(n, std::move(d));
}

}  // namespace fixtures
