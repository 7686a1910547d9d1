#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "fsc/codensity.hpp"
#include "fsc/persistence.hpp"
#include "fsc/random.hpp"
#include "fsc/transforms.hpp"

using namespace fsc;
using fixtures::sx;

namespace {

bool same_diagram(const persistence_diagram& a, const persistence_diagram& b) {
  if (a.pairs.size() != b.pairs.size()) return false;
  for (std::size_t i = 0; i < a.pairs.size(); ++i)
    if (a.pairs[i].birth != b.pairs[i].birth || a.pairs[i].death != b.pairs[i].death)
      return false;
  return true;
}

}  // namespace

TEST_CASE("Rips construction") {
  const filtered_complex m3 = vietoris_rips(fixtures::m3(), 2);
  CHECK(m3.size_of(sx({0, 1})) == 1.0);
  CHECK(m3.size_of(sx({0, 2})) == 2.0);
  CHECK(m3.size_of(sx({1, 2})) == 2.0);
  CHECK(m3.size_of(sx({0, 1, 2})) == 2.0);
  CHECK(m3.clique_order() == 1);

  const filtered_complex point = vietoris_rips(distance_matrix(1, {0.0}), 1);
  CHECK(point.vertex_count() == 1);
  CHECK(point.size_of(sx({0})) == 0.0);

  const filtered_complex square = vietoris_rips(fixtures::sq4(), 3);
  const double diag = std::sqrt(2.0);
  CHECK(square.size_of(sx({0, 1})) == 1.0);
  CHECK(square.size_of(sx({1, 2})) == 1.0);
  CHECK(square.size_of(sx({0, 2})) == diag);
  CHECK(square.size_of(sx({0, 1, 2})) == diag);
  CHECK(square.size_of(sx({0, 1, 2, 3})) == diag);
}

TEST_CASE("clique completion") {
  // A Rips complex is already clique: completion changes nothing.
  const filtered_complex m3 = vietoris_rips(fixtures::m3(), 2);
  const filtered_complex completed = clique_completion(m3, 1);
  CHECK(completed.births() == m3.births());
  CHECK(completed.clique_order() == 1);

  // A triangle born later than its edges is pulled down to the latest edge.
  birth_map late;
  late.emplace(sx({0}), 0.0);
  late.emplace(sx({1}), 0.0);
  late.emplace(sx({2}), 0.0);
  late.emplace(sx({0, 1}), 1.0);
  late.emplace(sx({0, 2}), 2.0);
  late.emplace(sx({1, 2}), 3.0);
  late.emplace(sx({0, 1, 2}), 9.0);
  const filtered_complex hollow(3, std::move(late));
  CHECK(clique_completion(hollow, 1).size_of(sx({0, 1, 2})) == 3.0);
  // With k = 2 the triangle is its own skeleton and keeps its birth.
  CHECK(clique_completion(hollow, 2).size_of(sx({0, 1, 2})) == 9.0);
  CHECK(clique_completion(hollow, 2).clique_order() == 2);
}

TEST_CASE("tail transform") {
  std::mt19937_64 rng(43);
  const filtered_complex c = random_monotone_complex(rng, 5);
  CHECK(tail_transform(c, 0).births() == c.births());

  const filtered_complex m3 = vietoris_rips(fixtures::m3(), 2);
  const filtered_complex tailed = tail_transform(m3, 1);
  CHECK(tailed.size_of(sx({0})) == 1.0);  // cheapest incident edge
  CHECK(tailed.size_of(sx({1})) == 1.0);
  CHECK(tailed.size_of(sx({2})) == 2.0);
  CHECK(tailed.size_of(sx({0, 1})) == m3.size_of(sx({0, 1})));
  CHECK(tailed.clique_order() == 1);
  CHECK(tailed.validate().ok());

  birth_map isolated;
  isolated.emplace(sx({0}), 0.0);
  isolated.emplace(sx({1}), 0.0);
  const filtered_complex no_edges(2, std::move(isolated));
  CHECK_THROWS_AS((void)tail_transform(no_edges, 1), input_error);
}

TEST_CASE("flare endpoints become free after the k=1 tail transform") {
  const distance_matrix m = fixtures::flares();
  const filtered_complex vr = vietoris_rips(m, 2);
  const filtered_complex tailed = tail_transform(vr, 1);
  // Endpoint of the first flare is vertex 14, its neighbor 13.
  CHECK(vertex_quasi_distance_kclique(tailed, 14, 13, 1) == 0.0);
  const auto closest = closest_point_delta1(m, 14);
  CHECK(closest.y == 13);
  CHECK(closest.value == 0.0);
}

TEST_CASE("diam_k agrees with the tail-transformed Rips complex") {
  const distance_matrix m3 = fixtures::m3();
  CHECK(diam_k(m3, 0, {0, 1, 2}) == 2.0);
  CHECK(diam_k(m3, 1, {0}) == 1.0);
  CHECK(diam_k(m3, 1, {0, 2}) == 2.0);
  CHECK_THROWS_AS((void)diam_k(m3, 3, {0}), input_error);

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const distance_matrix d = random_metric(rng, n);
    const filtered_complex vr = vietoris_rips(d, n - 1);
    for (int k : {0, 1, 2}) {
      const filtered_complex tailed = tail_transform(vr, k);
      const size_table table = build_size_table(tailed);
      for (std::uint32_t mask = 1; mask < table.value.size(); ++mask) {
        std::vector<int> alpha;
        for (int v = 0; v < n; ++v)
          if (mask & (std::uint32_t{1} << v)) alpha.push_back(v);
        CHECK(diam_k(d, k, alpha) == table[mask]);
      }
    }
  }
}

TEST_CASE("closest-point formula matches the k-clique quasi-distance") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const distance_matrix d = random_metric(rng, n);
    const filtered_complex tailed = tail_transform(vietoris_rips(d, n - 1), 1);
    for (int x = 0; x < n; ++x) {
      const auto r = closest_point_delta1(d, x);
      CHECK(r.value == vertex_quasi_distance_kclique(tailed, x, r.y, 1));
    }
  }
  const distance_matrix two(2, {0, 3, 3, 0});
  const auto r = closest_point_delta1(two, 0);
  CHECK(r.y == 1);
  CHECK(r.value == 0.0);

  const auto m3 = closest_point_delta1(fixtures::m3(), 2);
  CHECK(m3.y == 0);
  CHECK(m3.value == 0.0);
}

TEST_CASE("single vertex extension") {
  // Extending the max-size family at its top vertex reproduces the next one.
  const filtered_complex d3 = fixtures::delta(3);
  const filtered_complex extended = single_vertex_extension(d3, 3, 1.0);
  CHECK(extended.vertex_count() == 5);
  CHECK(extended.births() == fixtures::delta(4).births());
  CHECK(extended.validate().ok());

  // r = 0 duplicates the vertex.
  std::mt19937_64 rng(59);
  const filtered_complex c = random_monotone_complex(rng, 4);
  const filtered_complex dup = single_vertex_extension(c, 2, 0.0);
  CHECK(dup.validate().ok());
  CHECK(dup.size_of(sx({4})) == c.size_of(sx({2})));
  const codensity_matrix q = compute_codensity_matrix(dup, codensity_mode::brute);
  CHECK(q.at(4, 2) == 0.0);
  CHECK(codensity_of(q, 4) == 0.0);

  CHECK_THROWS_AS((void)single_vertex_extension(c, 1, -0.5), input_error);
}

TEST_CASE("extension always validates and has a free new vertex") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const filtered_complex c = random_monotone_complex(rng, n);
    const vertex_id w = static_cast<vertex_id>(rng() % n);
    const double r = static_cast<double>(rng() % 100) / 10.0;
    const filtered_complex ext = single_vertex_extension(c, w, r);
    CHECK(ext.validate().ok());
    const codensity_matrix q = compute_codensity_matrix(ext, codensity_mode::brute);
    CHECK(q.at(n, w) == 0.0);
  }
}

TEST_CASE("homology is preserved below k by completion and at k and above by the tail") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const filtered_complex c = random_monotone_complex(rng, n);
    const auto reference = barcodes(c, 2);
    for (int k : {1, 2}) {
      const auto completed = barcodes(clique_completion(c, k), 2);
      for (int d = 0; d < k; ++d)
        CHECK(same_diagram(completed[static_cast<std::size_t>(d)],
                           reference[static_cast<std::size_t>(d)]));
      const auto tailed = barcodes(tail_transform(c, k), 2);
      for (int d = k; d <= 2; ++d)
        CHECK(same_diagram(tailed[static_cast<std::size_t>(d)],
                           reference[static_cast<std::size_t>(d)]));
    }
  }
}

TEST_CASE("the tail transform shrinks quasi-distances entrywise") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const filtered_complex c = random_monotone_complex(rng, n);
    const codensity_matrix before = compute_codensity_matrix(c, codensity_mode::brute);
    for (int k : {1, 2}) {
      if (c.max_dim() < k) continue;
      const codensity_matrix after =
          compute_codensity_matrix(tail_transform(c, k), codensity_mode::brute);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(after.at(i, j) <= before.at(i, j) + 1e-12);
    }
  }
}
