#pragma once

// Morphism degrees and codegrees, correspondence distortion, and the exact
// distance oracles between small complexes: the correspondence-enumeration
// distance (branch and bound over pairs of vertex maps, which realize every
// minimal correspondence), the interleaving distance (enumeration over
// morphism pairs with a minimax chain relaxation of the round-trip cost), and
// the strong variant that skips the chain relaxation.
//
// These searches exist to verify inequalities exactly at small scale; each is
// guarded by a configurable cap and fails hard rather than approximating.

#include <memory>
#include <utility>
#include <vector>

#include "fsc/core.hpp"

namespace fsc {

// A vertex map between two complexes; map[source_vertex] = target_vertex.
struct morphism {
  std::vector<vertex_id> map;
};

morphism identity_morphism(int n);
// outer applied after inner.
morphism compose(const morphism& outer, const morphism& inner);

using correspondence = std::vector<std::pair<vertex_id, vertex_id>>;

struct interleaving_options {
  long long morphism_cap = 4096;  // per enumerated function space
  long long pair_cap = 4096;      // (f, g) pairs visited by the distance searches
  int gh_vertex_cap = 12;         // |V| + |W| for the correspondence search
  int distortion_pair_cap = 20;   // exhaustive distortion enumerates 2^|R| subsets
};

// Worst birth inflation of f over the simplices of the source, clamped at 0.
double degree(const filtered_complex& src, const filtered_complex& tgt, const morphism& f);

// Worst birth of the joint image f(alpha) union g(alpha) relative to alpha.
double codegree(const filtered_complex& src, const filtered_complex& tgt, const morphism& f,
                const morphism& g);

// Minimax cost over chains of morphisms from f to g, edge weight codegree;
// enumerates the full function space source -> target.
double codegree_inf(const filtered_complex& src, const filtered_complex& tgt,
                    const morphism& f, const morphism& g,
                    const interleaving_options& opts = {});

// max over subsets beta of R of |size_a(pi1 beta) - size_b(pi2 beta)|, with
// inf - inf = 0. When both complexes have clique order 1 this reduces exactly
// to the pairwise maximum and runs through the SIMD kernels.
double distortion(const correspondence& r, const filtered_complex& a,
                  const filtered_complex& b, const interleaving_options& opts = {});

struct search_stats {
  long long candidates = 0;
};

struct gh_result {
  double value = 0;  // half the minimal distortion
  correspondence witness;
  search_stats stats;
};

gh_result dgh_exact(const filtered_complex& a, const filtered_complex& b,
                    const interleaving_options& opts = {});

struct interleaving_result {
  double value = 0;
  morphism forward;   // a -> b
  morphism backward;  // b -> a
  search_stats stats;
};

interleaving_result dif_exact(const filtered_complex& a, const filtered_complex& b,
                              const interleaving_options& opts = {});

interleaving_result dif_strong(const filtered_complex& a, const filtered_complex& b,
                               const interleaving_options& opts = {});

// Exactly dif_exact(a, b).value == 0, decided by restricting both searches to
// zero-cost morphisms; far cheaper than the full minimax tables.
bool dif_is_zero(const filtered_complex& a, const filtered_complex& b,
                 const interleaving_options& opts = {});

// Caches the per-complex enumeration tables, keyed by content, so repeated
// queries against equal complexes (fixture sweeps, subset searches) do not
// rebuild them.
class interleaving_oracle {
 public:
  explicit interleaving_oracle(interleaving_options opts = {});
  ~interleaving_oracle();
  interleaving_oracle(interleaving_oracle&&) noexcept;
  interleaving_oracle& operator=(interleaving_oracle&&) noexcept;

  interleaving_result dif_exact(const filtered_complex& a, const filtered_complex& b);
  interleaving_result dif_strong(const filtered_complex& a, const filtered_complex& b);
  bool dif_is_zero(const filtered_complex& a, const filtered_complex& b);
  gh_result dgh_exact(const filtered_complex& a, const filtered_complex& b);

 private:
  struct impl;
  std::unique_ptr<impl> impl_;
};

}  // namespace fsc
