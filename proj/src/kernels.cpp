#include "fsc/kernels.hpp"

#include <algorithm>
#include <cmath>

#if defined(__x86_64__) || defined(_M_X64)
#define FSC_X86_64 1
#include <immintrin.h>
#else
#define FSC_X86_64 0
#endif

#if defined(__aarch64__)
#define FSC_AARCH64 1
#include <arm_neon.h>
#else
#define FSC_AARCH64 0
#endif

namespace fsc::kernels {

double max_difference_scalar(const double* a, const double* b, std::size_t n) {
  double best = a[0] - b[0];
  for (std::size_t i = 1; i < n; ++i) best = std::max(best, a[i] - b[i]);
  return best;
}

double max_abs_difference_scalar(const double* a, const double* b, std::size_t n) {
  double best = std::abs(a[0] - b[0]);
  for (std::size_t i = 1; i < n; ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

#if FSC_X86_64

__attribute__((target("avx2"))) static double max_difference_avx2(const double* a,
                                                                   const double* b,
                                                                   std::size_t n) {
  std::size_t i = 0;
  double best = a[0] - b[0];
  if (n >= 4) {
    __m256d acc = _mm256_sub_pd(_mm256_loadu_pd(a), _mm256_loadu_pd(b));
    for (i = 4; i + 4 <= n; i += 4)
      acc = _mm256_max_pd(acc, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    best = std::max(std::max(lane[0], lane[1]), std::max(lane[2], lane[3]));
  }
  for (; i < n; ++i) best = std::max(best, a[i] - b[i]);
  return best;
}

__attribute__((target("avx2"))) static double max_abs_difference_avx2(const double* a,
                                                                       const double* b,
                                                                       std::size_t n) {
  // Clears the sign bit instead of calling fabs per lane.
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  double best = std::abs(a[0] - b[0]);
  if (n >= 4) {
    __m256d acc =
        _mm256_andnot_pd(sign_mask, _mm256_sub_pd(_mm256_loadu_pd(a), _mm256_loadu_pd(b)));
    for (i = 4; i + 4 <= n; i += 4) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
      acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign_mask, d));
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    best = std::max(std::max(lane[0], lane[1]), std::max(lane[2], lane[3]));
  }
  for (; i < n; ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

#endif  // FSC_X86_64

#if FSC_AARCH64

static double max_difference_neon(const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  double best = a[0] - b[0];
  if (n >= 2) {
    float64x2_t acc = vsubq_f64(vld1q_f64(a), vld1q_f64(b));
    for (i = 2; i + 2 <= n; i += 2)
      acc = vmaxq_f64(acc, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    best = std::max(vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1));
  }
  for (; i < n; ++i) best = std::max(best, a[i] - b[i]);
  return best;
}

static double max_abs_difference_neon(const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  double best = std::abs(a[0] - b[0]);
  if (n >= 2) {
    float64x2_t acc = vabsq_f64(vsubq_f64(vld1q_f64(a), vld1q_f64(b)));
    for (i = 2; i + 2 <= n; i += 2)
      acc = vmaxq_f64(acc, vabsq_f64(vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i))));
    best = std::max(vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1));
  }
  for (; i < n; ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

#endif  // FSC_AARCH64

namespace {

using reduce_fn = double (*)(const double*, const double*, std::size_t);

struct dispatch_table {
  reduce_fn max_diff = &max_difference_scalar;
  reduce_fn max_abs_diff = &max_abs_difference_scalar;
  const char* backend = "scalar";
};

dispatch_table resolve() {
  dispatch_table t;
#if FSC_X86_64
  if (__builtin_cpu_supports("avx2")) {
    t.max_diff = &max_difference_avx2;
    t.max_abs_diff = &max_abs_difference_avx2;
    t.backend = "avx2";
  }
#elif FSC_AARCH64
  t.max_diff = &max_difference_neon;
  t.max_abs_diff = &max_abs_difference_neon;
  t.backend = "neon";
#endif
  return t;
}

const dispatch_table& table() {
  static const dispatch_table t = resolve();
  return t;
}

}  // namespace

double max_difference(const double* a, const double* b, std::size_t n) {
  return table().max_diff(a, b, n);
}

double max_abs_difference(const double* a, const double* b, std::size_t n) {
  return table().max_abs_diff(a, b, n);
}

const char* active_backend() { return table().backend; }

}  // namespace fsc::kernels
