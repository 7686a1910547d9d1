#pragma once

// Constructions that change the complex but preserve a prescribed range of
// persistent homology: Vietoris-Rips from a metric, completion along the
// k-skeleton (preserves dimensions below k), the tail transform that lowers
// low-dimensional births to the cheapest qualifying coface (preserves
// dimensions k and above, and shrinks vertex quasi-distances), and the
// single-vertex extension whose new vertex is free to delete.

#include <vector>

#include "fsc/core.hpp"
#include "fsc/metric.hpp"

namespace fsc {

// Births are subset diameters, materialized up to max_dim; the result has
// clique order 1, so sizes above max_dim stay defined.
filtered_complex vietoris_rips(const distance_matrix& d, int max_dim);

// Fills in every simplex whose k-skeleton is present, at the birth of the
// latest piece of that skeleton. Materializes up to the input's max_dim.
filtered_complex clique_completion(const filtered_complex& c, int k);

// Lowers the birth of every simplex with fewer than k+1 vertices to the
// minimum birth over its cofaces with at least k+1 vertices; such faces with
// no qualifying coface leave the filtration entirely. A vertex with no
// qualifying coface is an error, since vertices cannot be dropped.
filtered_complex tail_transform(const filtered_complex& c, int k);

// min over supersets beta of alpha with |beta| >= k+1 of diam(beta); the size
// function of tail_transform(vietoris_rips(d, .), k) evaluated directly on
// the metric.
double diam_k(const distance_matrix& d, int k, const std::vector<int>& alpha);

struct closest_point_result {
  int y = -1;       // nearest point to x, smallest index on ties
  double value = 0; // quasi-distance from x to y after the k=1 tail transform
};

// Closed form: max(0, max_{p != x,y} (d(y,p) - d(x,p))).
closest_point_result closest_point_delta1(const distance_matrix& d, int x);

// Appends a new vertex whose star mirrors the star of w, shifted r later.
// The new vertex has quasi-distance 0 to w, hence deleting it is free.
filtered_complex single_vertex_extension(const filtered_complex& c, vertex_id w, double r);

}  // namespace fsc
