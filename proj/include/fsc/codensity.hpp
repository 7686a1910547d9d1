#pragma once

// Vertex quasi-distances and codensity. delta(v, w) is the smallest amount by
// which births must be inflated so that substituting w for v never makes a
// simplex appear earlier than it should; delta(v) = min_{w != v} delta(v, w)
// bounds the cost of deleting v.

#include <optional>
#include <vector>

#include "fsc/core.hpp"

namespace fsc {

enum class codensity_mode { brute, kclique };

struct codensity_options {
  // The exhaustive path enumerates all 2^n vertex subsets.
  int brute_cap = 20;
};

struct codensity_matrix {
  std::vector<vertex_id> labels;  // labels[i] = vertex id of row/column i
  std::vector<double> delta;      // n*n row-major; delta[i*n+j] = delta(v_i, v_j)
  codensity_mode mode = codensity_mode::brute;
  int kclique_k = 0;  // meaningful in kclique mode

  int size() const { return static_cast<int>(labels.size()); }
  double at(int i, int j) const {
    return delta[static_cast<std::size_t>(i) * labels.size() + j];
  }
};

// Exhaustive over all non-empty vertex subsets. +inf means substituting w for
// v can make some simplex appear that never appears around v.
double vertex_quasi_distance(const filtered_complex& c, vertex_id v, vertex_id w,
                             const codensity_options& opts = {});

// Restriction of the maximum to subsets of at most k vertices; equal to the
// exhaustive value whenever the complex is k-clique. Requires clique_order
// to be set and <= k.
double vertex_quasi_distance_kclique(const filtered_complex& c, vertex_id v, vertex_id w,
                                     int k);

codensity_matrix compute_codensity_matrix(const filtered_complex& c, codensity_mode mode,
                                          int kclique_k = 0,
                                          const codensity_options& opts = {});

// min over w != v of delta(v, w); +inf for a single-vertex matrix.
double codensity_of(const codensity_matrix& m, int row);

double min_codensity(const codensity_matrix& m);

}  // namespace fsc
