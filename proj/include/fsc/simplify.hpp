#pragma once

// Greedy vertex removal driven by the codensity matrix. Each step removes the
// vertex with the cheapest substitute and adds that cost to a certificate:
// the interleaving distance between input and output is at most the
// accumulated error bound. Removing a zero-codensity vertex is free, and
// iterating free removals to exhaustion yields the core.

#include <vector>

#include "fsc/codensity.hpp"
#include "fsc/core.hpp"
#include "fsc/interleaving.hpp"

namespace fsc {

enum class matrix_mode { automatic, brute, kclique };

struct simplify_options {
  matrix_mode mode = matrix_mode::automatic;  // automatic: kclique when the complex has one
  int kclique_k = 0;                          // 0 = the complex's clique order
  bool recompute = false;                     // recompute the matrix after every removal
  codensity_options codensity;
};

struct simplification_step {
  vertex_id removed = -1;    // original vertex id
  vertex_id surrogate = -1;  // original vertex id
  double cost = 0;
};

struct simplification_log {
  std::vector<simplification_step> steps;
  double error_bound = 0;  // sum of step costs
  bool recompute = false;
  std::vector<vertex_id> kept;  // kept[new_id] = original id
};

struct simplify_result {
  filtered_complex complex;
  simplification_log log;
};

// Removes exactly n_remove vertices, always the row index of the minimal
// finite off-diagonal entry, ties broken lexicographically on original
// (row, column) indices. Without recompute the matrix only loses the removed
// row and column; restriction can only shrink entries, so the stale values
// still certify the bound.
simplify_result greedy_simplify(const filtered_complex& c, int n_remove,
                                const simplify_options& opts = {});

// Removes zero-codensity vertices (smallest index first) until none remain or
// a single vertex is left. The result is simple and the certificate is 0.
simplify_result extract_core(const filtered_complex& c, const simplify_options& opts = {});

struct removal_witness_result {
  morphism collapse;       // source -> subcomplex: identity except v, which goes to the surrogate
  morphism inclusion;      // subcomplex -> source
  double bound = 0;        // codensity of v
  vertex_id surrogate = -1;
  restriction restricted;
};

// The interleaving pair certifying that deleting v costs at most its
// codensity: collapse has degree <= bound, the inclusion has degree 0,
// collapse o inclusion is the identity, and the round trip is bound-close to
// the identity in codegree.
removal_witness_result removal_witness(const filtered_complex& c, vertex_id v,
                                       const simplify_options& opts = {});

}  // namespace fsc
