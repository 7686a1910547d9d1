#pragma once

// Persistent homology with Z/2 coefficients via boundary-matrix column
// reduction, and the bottleneck distance between the resulting diagrams.

#include <vector>

#include "fsc/core.hpp"

namespace fsc {

struct persistence_pair {
  double birth = 0;
  double death = inf;
};

struct persistence_diagram {
  int dim = 0;
  std::vector<persistence_pair> pairs;
};

// Diagrams for dimensions 0..max_hdim. The filtration order breaks birth ties
// by dimension, then by lexicographic vertex order; zero-length pairs are
// dropped. Complexes with a clique order have the required simplices above
// their stored dimension synthesized from the skeleton. Without a clique
// order the stored dimension must reach max_hdim + 1 unless the complex is
// already stored in full (max_dim = n - 1).
std::vector<persistence_diagram> barcodes(const filtered_complex& c, int max_hdim);

// Exact: binary search over realizable radii with bipartite matching
// feasibility checks. Points with infinite death match only among themselves;
// mismatched essential counts give +inf.
double bottleneck_distance(const persistence_diagram& a, const persistence_diagram& b);

}  // namespace fsc
