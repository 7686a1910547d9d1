#pragma once

// Seeded generators for randomized verification runs.

#include <random>

#include "fsc/core.hpp"
#include "fsc/metric.hpp"

namespace fsc {

// Fully stored complex on n vertices (every subset appears) with a random
// monotone size function. With probability tie_probability a simplex is born
// exactly with its latest face, which exercises the tie-breaking rules.
filtered_complex random_monotone_complex(std::mt19937_64& rng, int n_vertices,
                                         double scale = 1.0, double tie_probability = 0.25);

// Random symmetric nonnegative matrix repaired into a metric by shortest
// paths (iterated to a fixed point, so the triangle inequality holds for the
// stored values exactly).
distance_matrix random_metric(std::mt19937_64& rng, int n_points, double scale = 1.0);

}  // namespace fsc
