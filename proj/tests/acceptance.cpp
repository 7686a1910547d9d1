// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code; randomized criteria
// use fixed seeds and report the worst margin they saw.

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "fsc/codensity.hpp"
#include "fsc/interleaving.hpp"
#include "fsc/io.hpp"
#include "fsc/persistence.hpp"
#include "fsc/random.hpp"
#include "fsc/simplify.hpp"
#include "fsc/transforms.hpp"

using namespace fsc;

namespace {

constexpr double tolerance = 1e-9;

interleaving_options roomy() {
  interleaving_options o;
  o.morphism_cap = 1 << 20;
  o.pair_cap = 1 << 24;
  return o;
}

bool equal_diagrams(const persistence_diagram& a, const persistence_diagram& b) {
  if (a.pairs.size() != b.pairs.size()) return false;
  for (std::size_t i = 0; i < a.pairs.size(); ++i)
    if (a.pairs[i].birth != b.pairs[i].birth || a.pairs[i].death != b.pairs[i].death)
      return false;
  return true;
}

struct outcome {
  bool pass = true;
  std::string detail;
};

outcome stability_sandwich() {
  std::mt19937_64 rng(20260809);
  interleaving_oracle oracle(roomy());
  double worst_upper = inf, worst_lower = inf;
  for (int trial = 0; trial < 200; ++trial) {
    const filtered_complex a = random_monotone_complex(rng, 1 + static_cast<int>(rng() % 4));
    const filtered_complex b = random_monotone_complex(rng, 1 + static_cast<int>(rng() % 4));
    const double gh = oracle.dgh_exact(a, b).value;
    const double iv = oracle.dif_exact(a, b).value;
    worst_upper = std::min(worst_upper, 2 * gh - iv);
    const auto bars_a = barcodes(a, 1);
    const auto bars_b = barcodes(b, 1);
    for (int k = 0; k <= 1; ++k) {
      const double bd = bottleneck_distance(bars_a[static_cast<std::size_t>(k)],
                                            bars_b[static_cast<std::size_t>(k)]);
      worst_lower = std::min(worst_lower, iv - bd);
    }
    if (worst_upper < -tolerance || worst_lower < -tolerance)
      return {false, "violated at trial " + std::to_string(trial)};
  }
  return {true, "200 pairs; min slack dif side " + format_double(worst_lower) +
                    ", gh side " + format_double(worst_upper)};
}

outcome removal_bound() {
  std::mt19937_64 rng(8101);
  double worst = inf;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const filtered_complex c = random_monotone_complex(rng, n);
    const codensity_matrix q = compute_codensity_matrix(c, codensity_mode::brute);
    const auto before = barcodes(c, 1);
    for (int v = 0; v < n; ++v) {
      const double bound = codensity_of(q, v);
      if (std::isinf(bound)) continue;
      std::vector<vertex_id> keep;
      for (int u = 0; u < n; ++u)
        if (u != v) keep.push_back(u);
      const auto after = barcodes(restrict_complex(c, keep).complex, 1);
      for (int k = 0; k <= 1; ++k) {
        const double bd = bottleneck_distance(before[static_cast<std::size_t>(k)],
                                              after[static_cast<std::size_t>(k)]);
        worst = std::min(worst, bound + tolerance - bd);
        if (bd > bound + tolerance)
          return {false, "trial " + std::to_string(trial) + " vertex " + std::to_string(v) +
                             ": bottleneck " + format_double(bd) + " > codensity " +
                             format_double(bound)};
      }
    }
  }
  return {true, "200 complexes, every vertex; min slack " + format_double(worst)};
}

outcome rips_codensity_identity() {
  std::mt19937_64 rng(8102);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const distance_matrix d = random_metric(rng, n);
    const codensity_matrix q =
        compute_codensity_matrix(vietoris_rips(d, n - 1), codensity_mode::brute);
    if (q.delta != d.data())
      return {false, "matrix differs from the metric at trial " + std::to_string(trial)};
  }
  return {true, "50 metric spaces, entrywise equality"};
}

outcome flares_pipeline() {
  double previous_bound = 0.0;
  for (double spacing : {1.0, 2.0}) {
    const distance_matrix m = fixtures::flares(spacing);
    const filtered_complex vr = vietoris_rips(m, 2);
    const filtered_complex tailed = tail_transform(vr, 1);
    simplify_options opts;
    opts.recompute = true;
    const simplify_result r = greedy_simplify(tailed, 6, opts);
    if (r.log.error_bound != 0.0) return {false, "removal was not free"};
    std::set<vertex_id> removed;
    for (const auto& s : r.log.steps) removed.insert(s.removed);
    if (removed != std::set<vertex_id>{12, 13, 14, 15, 16, 17})
      return {false, "removed vertices are not exactly the flare points"};
    const auto original = barcodes(vr, 1);
    const auto simplified = barcodes(r.complex, 1);
    if (!equal_diagrams(original[1], simplified[1]))
      return {false, "loop diagrams differ after simplification"};
    // The correspondence bound, by contrast, cannot drop below the diameter
    // gap, which is the total flare length and grows with the spacing.
    const simplex everything_core = [&] {
      simplex s;
      for (int v = 0; v < r.complex.vertex_count(); ++v) s.push_back(v);
      return s;
    }();
    simplex everything;
    for (int v = 0; v < vr.vertex_count(); ++v) everything.push_back(v);
    const double gh_floor =
        (vr.size_of(everything) - r.complex.size_of(everything_core)) / 2;
    if (!(gh_floor >= 3 * spacing / 2) || !(gh_floor > previous_bound))
      return {false, "correspondence floor did not grow with the flare length"};
    previous_bound = gh_floor;
  }
  return {true, "6 flare points free at both spacings; loop diagram exact; floor grows"};
}

outcome core_classification() {
  std::mt19937_64 rng(8103);
  interleaving_oracle oracle(roomy());
  int candidates_checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const filtered_complex c = random_monotone_complex(rng, n, 1.0, 0.5);
    const simplify_result core = extract_core(c);

    // (a) simple: strictly positive minimal codensity, or a single vertex.
    const codensity_matrix q = compute_codensity_matrix(core.complex, codensity_mode::brute);
    if (!(min_codensity(q) > 0.0)) return {false, "core is not simple at trial " + std::to_string(trial)};

    // (b) five random removal orders land in isomorphic complexes.
    std::vector<filtered_complex> cores;
    for (int order = 0; order < 5; ++order) {
      filtered_complex current = c;
      while (current.vertex_count() > 1) {
        const codensity_matrix step = compute_codensity_matrix(current, codensity_mode::brute);
        std::vector<int> zero;
        for (int v = 0; v < step.size(); ++v)
          if (codensity_of(step, v) == 0.0) zero.push_back(v);
        if (zero.empty()) break;
        const int pick = zero[rng() % zero.size()];
        std::vector<vertex_id> keep;
        for (int v = 0; v < current.vertex_count(); ++v)
          if (v != pick) keep.push_back(v);
        current = restrict_complex(current, keep).complex;
      }
      cores.push_back(std::move(current));
    }
    for (std::size_t i = 0; i < cores.size(); ++i)
      for (std::size_t j = i + 1; j < cores.size(); ++j)
        if (!find_isomorphism(cores[i], cores[j]).has_value())
          return {false, "removal orders disagree at trial " + std::to_string(trial)};

    // (c) no strictly smaller simple full subcomplex sits at distance zero.
    const int core_size = core.complex.vertex_count();
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 1; mask < all; ++mask) {
      std::vector<vertex_id> keep;
      for (int v = 0; v < n; ++v)
        if (mask & (std::uint32_t{1} << v)) keep.push_back(v);
      if (static_cast<int>(keep.size()) >= core_size) continue;
      const filtered_complex sub = restrict_complex(c, keep).complex;
      const codensity_matrix sq = compute_codensity_matrix(sub, codensity_mode::brute);
      if (!(min_codensity(sq) > 0.0)) continue;
      ++candidates_checked;
      if (oracle.dif_is_zero(c, sub))
        return {false, "a smaller simple subcomplex is equivalent at trial " +
                           std::to_string(trial)};
    }
  }
  return {true, "100 complexes; " + std::to_string(candidates_checked) +
                    " smaller simple subcomplexes all at positive distance"};
}

outcome simplex_family() {
  interleaving_oracle oracle(roomy());
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const filtered_complex a = fixtures::delta(m);
      const filtered_complex b = fixtures::delta(n);
      if (oracle.dif_exact(a, b).value != 0.0)
        return {false, "interleaving distance not zero between sizes " + std::to_string(m) +
                           " and " + std::to_string(n)};
      if (oracle.dgh_exact(a, b).value != std::abs(m - n) / 2.0)
        return {false, "correspondence distance wrong between sizes " + std::to_string(m) +
                           " and " + std::to_string(n)};
    }
  return {true, "all pairs up to size 4, exact"};
}

outcome strong_interleaving_failure() {
  std::vector<filtered_complex> family;
  for (int n = 0; n <= 3; ++n) family.push_back(fixtures::path_family(n));
  for (int n = 0; n <= 2; ++n) {
    const double step = dif_strong(family[static_cast<std::size_t>(n)],
                                   family[static_cast<std::size_t>(n) + 1], roomy())
                            .value;
    if (step != 0.0)
      return {false, "consecutive strong distance not zero at n = " + std::to_string(n)};
  }
  const double across = dif_strong(family[0], family[3], roomy()).value;
  if (!(across > 0.0)) return {false, "strong distance across the family is zero"};
  return {true, "chain steps all zero, endpoints at " + format_double(across) +
                    ": the triangle inequality fails"};
}

outcome transform_correctness() {
  std::mt19937_64 rng(8104);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const filtered_complex c = random_monotone_complex(rng, n);
    const auto reference = barcodes(c, 2);
    const codensity_matrix before = compute_codensity_matrix(c, codensity_mode::brute);
    for (int k : {1, 2}) {
      const auto completed = barcodes(clique_completion(c, k), 2);
      for (int d = 0; d < k; ++d)
        if (!equal_diagrams(completed[static_cast<std::size_t>(d)],
                            reference[static_cast<std::size_t>(d)]))
          return {false, "completion changed dimension " + std::to_string(d) + " at trial " +
                             std::to_string(trial)};
      const filtered_complex tailed = tail_transform(c, k);
      const auto kept = barcodes(tailed, 2);
      for (int d = k; d <= 2; ++d)
        if (!equal_diagrams(kept[static_cast<std::size_t>(d)],
                            reference[static_cast<std::size_t>(d)]))
          return {false, "tail changed dimension " + std::to_string(d) + " at trial " +
                             std::to_string(trial)};
      const codensity_matrix after = compute_codensity_matrix(tailed, codensity_mode::brute);
      for (std::size_t e = 0; e < after.delta.size(); ++e)
        if (!(after.delta[e] <= before.delta[e]))
          return {false, "tail increased a quasi-distance at trial " + std::to_string(trial)};
    }
  }
  return {true, "100 complexes, k = 1 and 2, exact diagram equality and entrywise shrinkage"};
}

outcome single_vertex_extension_bounds() {
  std::mt19937_64 rng(8105);
  interleaving_oracle oracle(roomy());
  double worst_gap = inf;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const filtered_complex c = random_monotone_complex(rng, n);
    const vertex_id w = static_cast<vertex_id>(rng() % n);
    const double r = static_cast<double>(rng() % 1601) / 160.0;  // 0..10
    const filtered_complex extended = single_vertex_extension(c, w, r);
    if (!extended.validate().ok()) return {false, "extension failed validation"};
    const codensity_matrix q = compute_codensity_matrix(extended, codensity_mode::brute);
    if (codensity_of(q, n) != 0.0) return {false, "new vertex is not free"};
    if (!oracle.dif_is_zero(extended, c))
      return {false, "extension is not equivalent at trial " + std::to_string(trial)};
    if (n <= 3 && oracle.dif_exact(extended, c).value != 0.0)
      return {false, "full search disagrees with the zero test"};
    const double gh = oracle.dgh_exact(extended, c).value;
    worst_gap = std::min(worst_gap, gh - r / 2);
    if (gh < r / 2 - tolerance)
      return {false, "correspondence distance " + format_double(gh) + " below r/2 = " +
                         format_double(r / 2)};
  }
  return {true, "50 extensions; min(gh - r/2) = " + format_double(worst_gap)};
}

outcome fast_path_equivalence() {
  std::mt19937_64 rng(8106);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const filtered_complex vr = vietoris_rips(random_metric(rng, n), n - 1);
    if (compute_codensity_matrix(vr, codensity_mode::brute).delta !=
        compute_codensity_matrix(vr, codensity_mode::kclique, 1).delta)
      return {false, "pairwise codensity differs from enumeration on a Rips complex"};
  }
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const filtered_complex base = random_monotone_complex(rng, n);
    for (int k : {1, 2, 3}) {
      const filtered_complex clique = clique_completion(base, k);
      if (compute_codensity_matrix(clique, codensity_mode::brute).delta !=
          compute_codensity_matrix(clique, codensity_mode::kclique, k).delta)
        return {false, "subset-limited codensity differs from enumeration at k = " +
                           std::to_string(k)};
    }
  }
  for (int trial = 0; trial < 30; ++trial) {
    const int na = 2 + static_cast<int>(rng() % 3);
    const int nb = 2 + static_cast<int>(rng() % 3);
    const filtered_complex a = vietoris_rips(random_metric(rng, na), na - 1);
    const filtered_complex b = vietoris_rips(random_metric(rng, nb), nb - 1);
    const filtered_complex plain_a(a.vertex_count(), birth_map(a.births()), std::nullopt);
    const filtered_complex plain_b(b.vertex_count(), birth_map(b.births()), std::nullopt);
    correspondence r;
    for (int v = 0; v < na; ++v) r.emplace_back(v, static_cast<int>(rng() % nb));
    for (int u = 0; u < nb; ++u) r.emplace_back(static_cast<int>(rng() % na), u);
    if (distortion(r, a, b) != distortion(r, plain_a, plain_b))
      return {false, "pairwise distortion differs from exhaustive enumeration"};
  }
  return {true, "codensity and distortion fast paths match enumeration exactly"};
}

}  // namespace

int main() {
  struct criterion {
    int id;
    const char* name;
    std::function<outcome()> run;
  };
  const std::vector<criterion> criteria{
      {1, "stability sandwich on random pairs", stability_sandwich},
      {2, "vertex removal moves diagrams at most its codensity", removal_bound},
      {3, "Rips codensity matrix equals the distance matrix", rips_codensity_identity},
      {4, "circle-with-flares simplification", flares_pipeline},
      {5, "cores: simple, order-independent, minimal", core_classification},
      {6, "max-size family: equivalent but far apart", simplex_family},
      {7, "strong interleaving breaks the triangle inequality", strong_interleaving_failure},
      {8, "skeleton completion and tail transform preserve their range", transform_correctness},
      {9, "single vertex extension: free for interleavings, costly for correspondences",
       single_vertex_extension_bounds},
      {10, "SIMD/subset fast paths match their exhaustive counterparts", fast_path_equivalence},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    outcome result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %2d: %s%s%s\n", result.pass ? "PASS" : "FAIL", c.id, c.name,
                result.detail.empty() ? "" : " -- ", result.detail.c_str());
    if (!result.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
