#include "fsc/interleaving.hpp"
#include <cstring>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "fsc/kernels.hpp"

namespace fsc {

morphism identity_morphism(int n) {
  morphism m;
  m.map.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m.map[static_cast<std::size_t>(i)] = i;
  return m;
}

morphism compose(const morphism& outer, const morphism& inner) {
  morphism m;
  m.map.reserve(inner.map.size());
  for (vertex_id v : inner.map) {
    if (v < 0 || v >= static_cast<int>(outer.map.size()))
      throw input_error("morphism composition: inner image misses the outer source");
    m.map.push_back(outer.map[static_cast<std::size_t>(v)]);
  }
  return m;
}

namespace {

void check_morphism(const filtered_complex& src, const filtered_complex& tgt,
                    const morphism& f) {
  if (static_cast<int>(f.map.size()) != src.vertex_count())
    throw input_error("morphism must assign every source vertex");
  for (vertex_id v : f.map)
    if (v < 0 || v >= tgt.vertex_count())
      throw input_error("morphism maps to unknown vertex " + std::to_string(v));
}

struct complex_tables {
  int n = 0;
  size_table table;
  std::vector<std::uint32_t> present_mask;  // masks with finite birth
  std::vector<double> present_birth;
};

complex_tables make_tables(const filtered_complex& c) {
  complex_tables t;
  t.n = c.vertex_count();
  t.table = build_size_table(c);
  for (std::uint32_t m = 1; m < t.table.value.size(); ++m)
    if (std::isfinite(t.table.value[m])) {
      t.present_mask.push_back(m);
      t.present_birth.push_back(t.table.value[m]);
    }
  return t;
}

inline std::uint32_t image_mask(std::uint32_t m, const int* digits) {
  std::uint32_t r = 0;
  while (m) {
    r |= std::uint32_t{1} << digits[std::countr_zero(m)];
    m &= m - 1;
  }
  return r;
}

double degree_on_tables(const complex_tables& src, const complex_tables& tgt,
                        const int* digits) {
  double best = 0.0;
  for (std::size_t i = 0; i < src.present_mask.size(); ++i) {
    best = std::max(best, ext_sub(tgt.table[image_mask(src.present_mask[i], digits)],
                                  src.present_birth[i]));
    if (std::isinf(best)) break;
  }
  return best;
}

double codegree_on_tables(const complex_tables& src, const complex_tables& tgt,
                          const int* f_digits, const int* g_digits) {
  double best = 0.0;
  for (std::size_t i = 0; i < src.present_mask.size(); ++i) {
    const std::uint32_t joint = image_mask(src.present_mask[i], f_digits) |
                                image_mask(src.present_mask[i], g_digits);
    best = std::max(best, ext_sub(tgt.table[joint], src.present_birth[i]));
    if (std::isinf(best)) break;
  }
  return best;
}

// True when the source is a clique complex stored below its full dimension,
// so the simplices above the stored range exist but are not in the map.
bool has_synthesized_simplices(const filtered_complex& c) {
  return c.clique_order().has_value() && c.max_dim() < c.vertex_count() - 1;
}

constexpr int table_vertex_limit = 20;

long long checked_pow(int base, int exp, long long cap) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / std::max(base, 1)) return -1;
    r *= base;
    if (r > cap) return -1;
  }
  return r;
}

// All maps source -> target as digit strings, plus their images of the
// present source masks.
struct function_space {
  int src_n = 0, tgt_n = 0;
  long long count = 0;
  std::vector<int> digits;            // count * src_n
  std::vector<std::uint32_t> images;  // count * |present|
  std::size_t stride = 0;

  const int* digits_of(long long code) const { return digits.data() + code * src_n; }
  const std::uint32_t* images_of(long long code) const { return images.data() + code * static_cast<long long>(stride); }
};

function_space enumerate_functions(const complex_tables& src, int tgt_n, long long count) {
  function_space fs;
  fs.src_n = src.n;
  fs.tgt_n = tgt_n;
  fs.count = count;
  fs.stride = src.present_mask.size();
  fs.digits.assign(static_cast<std::size_t>(count) * src.n, 0);
  fs.images.assign(static_cast<std::size_t>(count) * fs.stride, 0);
  for (long long code = 0; code < count; ++code) {
    int* d = fs.digits.data() + code * src.n;
    long long rest = code;
    for (int i = 0; i < src.n; ++i) {
      d[i] = static_cast<int>(rest % tgt_n);
      rest /= tgt_n;
    }
    std::uint32_t* img = fs.images.data() + code * static_cast<long long>(fs.stride);
    for (std::size_t i = 0; i < fs.stride; ++i) img[i] = image_mask(src.present_mask[i], d);
  }
  return fs;
}

double codegree_codes(const function_space& fs, const complex_tables& src,
                      const complex_tables& tgt, long long c1, long long c2) {
  const std::uint32_t* i1 = fs.images_of(c1);
  const std::uint32_t* i2 = fs.images_of(c2);
  double best = 0.0;
  for (std::size_t k = 0; k < fs.stride; ++k) {
    best = std::max(best, ext_sub(tgt.table[i1[k] | i2[k]], src.present_birth[k]));
    if (std::isinf(best)) break;
  }
  return best;
}

long long encode_digits(const int* d, int len, int base) {
  long long code = 0;
  for (int i = len - 1; i >= 0; --i) code = code * base + d[i];
  return code;
}

long long identity_code(int n) {
  long long code = 0;
  for (int i = n - 1; i >= 0; --i) code = code * n + i;
  return code;
}

// Dense single-source minimax path over the complete graph on a function
// space, edge weight codegree. O(count^2) edge evaluations.
std::vector<double> minimax_from(const function_space& fs, const complex_tables& src,
                                 const complex_tables& tgt, long long source,
                                 long long stop_at = -1) {
  const long long m = fs.count;
  std::vector<double> value(static_cast<std::size_t>(m), inf);
  std::vector<char> settled(static_cast<std::size_t>(m), 0);
  value[static_cast<std::size_t>(source)] = 0.0;
  for (long long round = 0; round < m; ++round) {
    long long u = -1;
    double best = inf;
    for (long long x = 0; x < m; ++x)
      if (!settled[static_cast<std::size_t>(x)] && value[static_cast<std::size_t>(x)] < best) {
        best = value[static_cast<std::size_t>(x)];
        u = x;
      }
    if (u < 0) break;  // the rest is unreachable at finite cost
    settled[static_cast<std::size_t>(u)] = 1;
    if (u == stop_at) break;
    for (long long x = 0; x < m; ++x) {
      if (settled[static_cast<std::size_t>(x)]) continue;
      const double through = std::max(value[static_cast<std::size_t>(u)],
                                      codegree_codes(fs, src, tgt, u, x));
      if (through < value[static_cast<std::size_t>(x)]) value[static_cast<std::size_t>(x)] = through;
    }
  }
  return value;
}

std::vector<char> zero_component_of(const function_space& fs, const complex_tables& src,
                                    const complex_tables& tgt, long long source) {
  std::vector<char> in(static_cast<std::size_t>(fs.count), 0);
  std::vector<long long> frontier{source};
  in[static_cast<std::size_t>(source)] = 1;
  while (!frontier.empty()) {
    const long long u = frontier.back();
    frontier.pop_back();
    for (long long x = 0; x < fs.count; ++x)
      if (!in[static_cast<std::size_t>(x)] && codegree_codes(fs, src, tgt, u, x) == 0.0) {
        in[static_cast<std::size_t>(x)] = 1;
        frontier.push_back(x);
      }
  }
  return in;
}

}  // namespace

double degree(const filtered_complex& src, const filtered_complex& tgt, const morphism& f) {
  check_morphism(src, tgt, f);
  if (!has_synthesized_simplices(src)) {
    double best = 0.0;
    simplex mapped;
    for (const auto& [s, b] : src.births()) {
      mapped.clear();
      for (vertex_id v : s) mapped.push_back(f.map[static_cast<std::size_t>(v)]);
      std::sort(mapped.begin(), mapped.end());
      mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
      best = std::max(best, ext_sub(tgt.size_of(mapped), b));
      if (std::isinf(best)) break;
    }
    return best;
  }
  if (src.vertex_count() > table_vertex_limit)
    throw feasibility_error("degree over a truncated clique complex enumerates 2^n simplices; capped at " +
                            std::to_string(table_vertex_limit) + " vertices");
  const complex_tables ts = make_tables(src);
  const complex_tables tt = make_tables(tgt);
  return degree_on_tables(ts, tt, f.map.data());
}

double codegree(const filtered_complex& src, const filtered_complex& tgt, const morphism& f,
                const morphism& g) {
  check_morphism(src, tgt, f);
  check_morphism(src, tgt, g);
  if (!has_synthesized_simplices(src)) {
    double best = 0.0;
    simplex joint;
    for (const auto& [s, b] : src.births()) {
      joint.clear();
      for (vertex_id v : s) {
        joint.push_back(f.map[static_cast<std::size_t>(v)]);
        joint.push_back(g.map[static_cast<std::size_t>(v)]);
      }
      std::sort(joint.begin(), joint.end());
      joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
      best = std::max(best, ext_sub(tgt.size_of(joint), b));
      if (std::isinf(best)) break;
    }
    return best;
  }
  if (src.vertex_count() > table_vertex_limit)
    throw feasibility_error("codegree over a truncated clique complex enumerates 2^n simplices; capped at " +
                            std::to_string(table_vertex_limit) + " vertices");
  const complex_tables ts = make_tables(src);
  const complex_tables tt = make_tables(tgt);
  return codegree_on_tables(ts, tt, f.map.data(), g.map.data());
}

double codegree_inf(const filtered_complex& src, const filtered_complex& tgt,
                    const morphism& f, const morphism& g, const interleaving_options& opts) {
  check_morphism(src, tgt, f);
  check_morphism(src, tgt, g);
  if (f.map == g.map) return degree(src, tgt, f);
  const long long count = checked_pow(tgt.vertex_count(), src.vertex_count(), opts.morphism_cap);
  if (count < 0)
    throw feasibility_error("codegree chains enumerate " + std::to_string(tgt.vertex_count()) +
                            "^" + std::to_string(src.vertex_count()) +
                            " morphisms, over the cap of " + std::to_string(opts.morphism_cap));
  const complex_tables ts = make_tables(src);
  const complex_tables tt = make_tables(tgt);
  const function_space fs = enumerate_functions(ts, tgt.vertex_count(), count);
  const long long from = encode_digits(f.map.data(), src.vertex_count(), tgt.vertex_count());
  const long long to = encode_digits(g.map.data(), src.vertex_count(), tgt.vertex_count());
  return minimax_from(fs, ts, tt, from, to)[static_cast<std::size_t>(to)];
}

double distortion(const correspondence& r, const filtered_complex& a,
                  const filtered_complex& b, const interleaving_options& opts) {
  if (r.empty()) throw input_error("distortion of an empty correspondence");
  std::vector<char> hit_a(static_cast<std::size_t>(a.vertex_count()), 0);
  std::vector<char> hit_b(static_cast<std::size_t>(b.vertex_count()), 0);
  for (const auto& [x, y] : r) {
    if (x < 0 || x >= a.vertex_count() || y < 0 || y >= b.vertex_count())
      throw input_error("correspondence pair (" + std::to_string(x) + "," + std::to_string(y) +
                        ") is out of range");
    hit_a[static_cast<std::size_t>(x)] = 1;
    hit_b[static_cast<std::size_t>(y)] = 1;
  }
  if (std::count(hit_a.begin(), hit_a.end(), char{1}) != a.vertex_count() ||
      std::count(hit_b.begin(), hit_b.end(), char{1}) != b.vertex_count())
    throw input_error("correspondence must cover both vertex sets");

  const int m = static_cast<int>(r.size());
  if (a.clique_order() == 1 && b.clique_order() == 1) {
    // Both size functions are pairwise maxima, so the subset maximum is
    // attained on pairs: gather both m x m pair tables and reduce.
    const pair_matrix ea = build_pair_matrix(a);
    const pair_matrix eb = build_pair_matrix(b);
    std::vector<double> p(static_cast<std::size_t>(m) * m), q(static_cast<std::size_t>(m) * m);
    bool finite = true;
    for (int t = 0; t < m; ++t)
      for (int s = 0; s < m; ++s) {
        const double x = ea.at(r[static_cast<std::size_t>(t)].first, r[static_cast<std::size_t>(s)].first);
        const double y = eb.at(r[static_cast<std::size_t>(t)].second, r[static_cast<std::size_t>(s)].second);
        p[static_cast<std::size_t>(t) * m + s] = x;
        q[static_cast<std::size_t>(t) * m + s] = y;
        finite = finite && std::isfinite(x) && std::isfinite(y);
      }
    if (finite)
      return kernels::max_abs_difference(p.data(), q.data(), static_cast<std::size_t>(m) * m);
    double best = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) best = std::max(best, ext_absdiff(p[i], q[i]));
    return best;
  }

  if (m > opts.distortion_pair_cap)
    throw feasibility_error("exhaustive distortion capped at " +
                            std::to_string(opts.distortion_pair_cap) + " pairs, got " +
                            std::to_string(m) + " (no clique fast path applies)");
  const size_table ta = build_size_table(a);
  const size_table tb = build_size_table(b);
  std::vector<std::uint32_t> pa(std::size_t{1} << m, 0), pb(std::size_t{1} << m, 0);
  double best = 0.0;
  for (std::uint32_t beta = 1; beta < (std::uint32_t{1} << m); ++beta) {
    const int t = std::countr_zero(beta);
    const std::uint32_t rest = beta & (beta - 1);
    pa[beta] = pa[rest] | (std::uint32_t{1} << r[static_cast<std::size_t>(t)].first);
    pb[beta] = pb[rest] | (std::uint32_t{1} << r[static_cast<std::size_t>(t)].second);
    best = std::max(best, ext_absdiff(ta[pa[beta]], tb[pb[beta]]));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Distance searches.

struct interleaving_oracle::impl {
  interleaving_options opts;

  // Per-complex tables, keyed by content (hash bucket plus exact equality),
  // so cached state can never leak between distinct complexes that happen to
  // reuse an address.
  struct cache_entry {
    int n = 0;
    std::optional<int> clique;
    birth_map births;
    complex_tables tables;
    std::optional<function_space> self;
    std::optional<std::vector<double>> from_id;
    std::optional<std::vector<char>> zero;
  };
  std::unordered_map<std::uint64_t, std::vector<std::unique_ptr<cache_entry>>> cache;

  static std::uint64_t content_hash(const filtered_complex& c) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(c.vertex_count() + 1);
    simplex_hash hasher;
    for (const auto& [s, b] : c.births()) {
      std::uint64_t piece = hasher(s);
      std::uint64_t bits;
      std::memcpy(&bits, &b, sizeof bits);
      piece ^= bits + 0x9e3779b97f4a7c15ull + (piece << 6) + (piece >> 2);
      h += piece;  // order independent
    }
    return h;
  }

  cache_entry& entry_for(const filtered_complex& c) {
    auto& bucket = cache[content_hash(c)];
    for (auto& e : bucket)
      if (e->n == c.vertex_count() && e->clique == c.clique_order() && e->births == c.births())
        return *e;
    auto fresh = std::make_unique<cache_entry>();
    fresh->n = c.vertex_count();
    fresh->clique = c.clique_order();
    fresh->births = c.births();
    fresh->tables = make_tables(c);
    bucket.push_back(std::move(fresh));
    return *bucket.back();
  }

  const complex_tables& tables(const filtered_complex& c) { return entry_for(c).tables; }

  const function_space& self_space(const filtered_complex& c) {
    cache_entry& e = entry_for(c);
    if (!e.self) {
      const int n = c.vertex_count();
      const long long count = checked_pow(n, n, opts.morphism_cap);
      if (count < 0)
        throw feasibility_error("round-trip chains enumerate " + std::to_string(n) + "^" +
                                std::to_string(n) + " self-morphisms, over the cap of " +
                                std::to_string(opts.morphism_cap));
      e.self = enumerate_functions(e.tables, n, count);
    }
    return *e.self;
  }

  const std::vector<double>& from_id(const filtered_complex& c) {
    cache_entry& e = entry_for(c);
    if (!e.from_id) {
      const function_space& fs = self_space(c);
      e.from_id = minimax_from(fs, e.tables, e.tables, identity_code(c.vertex_count()));
    }
    return *e.from_id;
  }

  const std::vector<char>& zero_component(const filtered_complex& c) {
    cache_entry& e = entry_for(c);
    if (!e.zero) {
      const function_space& fs = self_space(c);
      e.zero = zero_component_of(fs, e.tables, e.tables, identity_code(c.vertex_count()));
    }
    return *e.zero;
  }

  // Shared frame for the pairwise searches: cross function spaces plus the
  // degree of every candidate morphism.
  struct pair_frame {
    function_space f_space, g_space;
    std::vector<double> deg_f, deg_g;
  };

  pair_frame make_pair_frame(const filtered_complex& a, const filtered_complex& b) {
    const int va = a.vertex_count(), wb = b.vertex_count();
    const long long count_f = checked_pow(wb, va, opts.pair_cap);
    const long long count_g = checked_pow(va, wb, opts.pair_cap);
    if (count_f < 0 || count_g < 0 || count_f > opts.pair_cap / count_g)
      throw feasibility_error("interleaving search visits " + std::to_string(wb) + "^" +
                              std::to_string(va) + " * " + std::to_string(va) + "^" +
                              std::to_string(wb) + " morphism pairs, over the cap of " +
                              std::to_string(opts.pair_cap));
    pair_frame frame;
    frame.f_space = enumerate_functions(tables(a), wb, count_f);
    frame.g_space = enumerate_functions(tables(b), va, count_g);
    frame.deg_f.resize(static_cast<std::size_t>(count_f));
    frame.deg_g.resize(static_cast<std::size_t>(count_g));
    const complex_tables& ta = tables(a);
    const complex_tables& tb = tables(b);
    for (long long c = 0; c < count_f; ++c)
      frame.deg_f[static_cast<std::size_t>(c)] = degree_on_tables(ta, tb, frame.f_space.digits_of(c));
    for (long long c = 0; c < count_g; ++c)
      frame.deg_g[static_cast<std::size_t>(c)] = degree_on_tables(tb, ta, frame.g_space.digits_of(c));
    return frame;
  }

  interleaving_result dif(const filtered_complex& a, const filtered_complex& b, bool strong);
  bool dif_zero(const filtered_complex& a, const filtered_complex& b);
  gh_result dgh(const filtered_complex& a, const filtered_complex& b);
};

interleaving_result interleaving_oracle::impl::dif(const filtered_complex& a,
                                                   const filtered_complex& b, bool strong) {
  const int va = a.vertex_count(), wb = b.vertex_count();
  const pair_frame frame = make_pair_frame(a, b);
  const function_space& sa = self_space(a);
  const function_space& sb = self_space(b);
  const complex_tables& ta = tables(a);
  const complex_tables& tb = tables(b);
  const long long id_a = identity_code(va);
  const long long id_b = identity_code(wb);
  const std::vector<double>* from_a = nullptr;
  const std::vector<double>* from_b = nullptr;
  if (!strong) {
    from_a = &from_id(a);
    from_b = &from_id(b);
  }

  interleaving_result out;
  out.value = inf;
  std::vector<int> gf(static_cast<std::size_t>(va)), fg(static_cast<std::size_t>(wb));
  for (long long fc = 0; fc < frame.f_space.count; ++fc) {
    const double df = frame.deg_f[static_cast<std::size_t>(fc)];
    if (df >= out.value) continue;
    const int* fd = frame.f_space.digits_of(fc);
    for (long long gc = 0; gc < frame.g_space.count; ++gc) {
      ++out.stats.candidates;
      double cost = std::max(df, frame.deg_g[static_cast<std::size_t>(gc)]);
      if (cost >= out.value) continue;
      const int* gd = frame.g_space.digits_of(gc);
      for (int i = 0; i < va; ++i) gf[static_cast<std::size_t>(i)] = gd[fd[i]];
      for (int j = 0; j < wb; ++j) fg[static_cast<std::size_t>(j)] = fd[gd[j]];
      const long long gf_code = encode_digits(gf.data(), va, va);
      const long long fg_code = encode_digits(fg.data(), wb, wb);
      if (strong) {
        cost = std::max(cost, 0.5 * codegree_codes(sa, ta, ta, gf_code, id_a));
        if (cost >= out.value) continue;
        cost = std::max(cost, 0.5 * codegree_codes(sb, tb, tb, fg_code, id_b));
      } else {
        cost = std::max(cost, 0.5 * (*from_a)[static_cast<std::size_t>(gf_code)]);
        if (cost >= out.value) continue;
        cost = std::max(cost, 0.5 * (*from_b)[static_cast<std::size_t>(fg_code)]);
      }
      if (cost < out.value) {
        out.value = cost;
        out.forward.map.assign(fd, fd + va);
        out.backward.map.assign(gd, gd + wb);
        if (out.value == 0.0) return out;
      }
    }
  }
  return out;
}

bool interleaving_oracle::impl::dif_zero(const filtered_complex& a, const filtered_complex& b) {
  const int va = a.vertex_count(), wb = b.vertex_count();
  const pair_frame frame = make_pair_frame(a, b);
  std::vector<long long> zero_f, zero_g;
  for (long long c = 0; c < frame.f_space.count; ++c)
    if (frame.deg_f[static_cast<std::size_t>(c)] == 0.0) zero_f.push_back(c);
  for (long long c = 0; c < frame.g_space.count; ++c)
    if (frame.deg_g[static_cast<std::size_t>(c)] == 0.0) zero_g.push_back(c);
  if (zero_f.empty() || zero_g.empty()) return false;
  const std::vector<char>& comp_a = zero_component(a);
  const std::vector<char>& comp_b = zero_component(b);
  std::vector<int> gf(static_cast<std::size_t>(va)), fg(static_cast<std::size_t>(wb));
  for (long long fc : zero_f) {
    const int* fd = frame.f_space.digits_of(fc);
    for (long long gc : zero_g) {
      const int* gd = frame.g_space.digits_of(gc);
      for (int i = 0; i < va; ++i) gf[static_cast<std::size_t>(i)] = gd[fd[i]];
      if (!comp_a[static_cast<std::size_t>(encode_digits(gf.data(), va, va))]) continue;
      for (int j = 0; j < wb; ++j) fg[static_cast<std::size_t>(j)] = fd[gd[j]];
      if (comp_b[static_cast<std::size_t>(encode_digits(fg.data(), wb, wb))]) return true;
    }
  }
  return false;
}

gh_result interleaving_oracle::impl::dgh(const filtered_complex& a, const filtered_complex& b) {
  const int va = a.vertex_count(), wb = b.vertex_count();
  if (va + wb > opts.gh_vertex_cap)
    throw feasibility_error("correspondence search capped at " +
                            std::to_string(opts.gh_vertex_cap) + " total vertices, got " +
                            std::to_string(va + wb));
  const pair_matrix ea = build_pair_matrix(a);
  const pair_matrix eb = build_pair_matrix(b);
  const bool pairwise_exact = a.clique_order() == 1 && b.clique_order() == 1;
  const complex_tables& ta = tables(a);
  const complex_tables& tb = tables(b);

  gh_result out;
  correspondence pairs;
  pairs.reserve(static_cast<std::size_t>(va + wb));
  std::vector<double> lb_stack{0.0};

  std::vector<std::uint32_t> proj_a(std::size_t{1} << (va + wb), 0);
  std::vector<std::uint32_t> proj_b(std::size_t{1} << (va + wb), 0);

  double best = inf;
  correspondence best_pairs;

  auto exact_distortion = [&](const correspondence& r) {
    correspondence dedup = r;
    std::sort(dedup.begin(), dedup.end());
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
    const int m = static_cast<int>(dedup.size());
    double value = 0.0;
    for (std::uint32_t beta = 1; beta < (std::uint32_t{1} << m); ++beta) {
      const int t = std::countr_zero(beta);
      const std::uint32_t rest = beta & (beta - 1);
      proj_a[beta] = proj_a[rest] | (std::uint32_t{1} << dedup[static_cast<std::size_t>(t)].first);
      proj_b[beta] = proj_b[rest] | (std::uint32_t{1} << dedup[static_cast<std::size_t>(t)].second);
      value = std::max(value, ext_absdiff(ta.table[proj_a[beta]], tb.table[proj_b[beta]]));
    }
    return value;
  };

  auto leaf_value = [&](const correspondence& r, double pairwise_lb) {
    ++out.stats.candidates;
    return pairwise_exact ? pairwise_lb : exact_distortion(r);
  };

  auto push_pair = [&](vertex_id x, vertex_id y) {
    double lb = lb_stack.back();
    lb = std::max(lb, ext_absdiff(ea.at(x, x), eb.at(y, y)));
    for (const auto& [px, py] : pairs)
      lb = std::max(lb, ext_absdiff(ea.at(x, px), eb.at(y, py)));
    pairs.emplace_back(x, y);
    lb_stack.push_back(lb);
  };
  auto pop_pair = [&]() {
    pairs.pop_back();
    lb_stack.pop_back();
  };

  // Seed the incumbent with the truncation maps in both directions.
  {
    for (int i = 0; i < va; ++i) push_pair(i, std::min(i, wb - 1));
    for (int j = 0; j < wb; ++j) push_pair(std::min(j, va - 1), j);
    best = leaf_value(pairs, lb_stack.back());
    best_pairs = pairs;
    while (!pairs.empty()) pop_pair();
  }

  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == va + wb) {
      const double value = leaf_value(pairs, lb_stack.back());
      if (value < best) {
        best = value;
        best_pairs = pairs;
      }
      return;
    }
    if (depth < va) {
      for (int y = 0; y < wb; ++y) {
        push_pair(depth, y);
        if (lb_stack.back() < best) self(self, depth + 1);
        pop_pair();
      }
    } else {
      const int j = depth - va;
      for (int x = 0; x < va; ++x) {
        push_pair(x, j);
        if (lb_stack.back() < best) self(self, depth + 1);
        pop_pair();
      }
    }
  };
  if (best > 0.0) dfs(dfs, 0);

  std::sort(best_pairs.begin(), best_pairs.end());
  best_pairs.erase(std::unique(best_pairs.begin(), best_pairs.end()), best_pairs.end());
  out.value = best / 2;
  out.witness = std::move(best_pairs);
  return out;
}

interleaving_oracle::interleaving_oracle(interleaving_options opts)
    : impl_(std::make_unique<impl>()) {
  impl_->opts = opts;
}
interleaving_oracle::~interleaving_oracle() = default;
interleaving_oracle::interleaving_oracle(interleaving_oracle&&) noexcept = default;
interleaving_oracle& interleaving_oracle::operator=(interleaving_oracle&&) noexcept = default;

interleaving_result interleaving_oracle::dif_exact(const filtered_complex& a,
                                                   const filtered_complex& b) {
  return impl_->dif(a, b, false);
}
interleaving_result interleaving_oracle::dif_strong(const filtered_complex& a,
                                                    const filtered_complex& b) {
  return impl_->dif(a, b, true);
}
bool interleaving_oracle::dif_is_zero(const filtered_complex& a, const filtered_complex& b) {
  return impl_->dif_zero(a, b);
}
gh_result interleaving_oracle::dgh_exact(const filtered_complex& a, const filtered_complex& b) {
  return impl_->dgh(a, b);
}

gh_result dgh_exact(const filtered_complex& a, const filtered_complex& b,
                    const interleaving_options& opts) {
  interleaving_oracle oracle(opts);
  return oracle.dgh_exact(a, b);
}

interleaving_result dif_exact(const filtered_complex& a, const filtered_complex& b,
                              const interleaving_options& opts) {
  interleaving_oracle oracle(opts);
  return oracle.dif_exact(a, b);
}

interleaving_result dif_strong(const filtered_complex& a, const filtered_complex& b,
                               const interleaving_options& opts) {
  interleaving_oracle oracle(opts);
  return oracle.dif_strong(a, b);
}

bool dif_is_zero(const filtered_complex& a, const filtered_complex& b,
                 const interleaving_options& opts) {
  interleaving_oracle oracle(opts);
  return oracle.dif_is_zero(a, b);
}

}  // namespace fsc
