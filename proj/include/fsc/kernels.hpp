#pragma once

// Reduction kernels for the dense inner loops: the clique-complex vertex
// quasi-distance is a max over rowwise differences of the pair matrix, and
// the clique distortion fast path is a max over elementwise absolute
// differences of two gathered matrices.
//
// All kernels require finite inputs (otherwise inf - inf would poison the
// reduction with NaN); callers route matrices containing +inf through the
// extended-arithmetic scalar code instead. Scalar and SIMD variants return
// bit-identical results on finite data, which the tests assert.

#include <cstddef>

namespace fsc::kernels {

// max_i (a[i] - b[i]); n >= 1.
double max_difference(const double* a, const double* b, std::size_t n);

// max_i |a[i] - b[i]|; n >= 1.
double max_abs_difference(const double* a, const double* b, std::size_t n);

// Reference implementations, always available.
double max_difference_scalar(const double* a, const double* b, std::size_t n);
double max_abs_difference_scalar(const double* a, const double* b, std::size_t n);

// Name of the backend the dispatched entry points resolved to at startup:
// "avx2", "neon" or "scalar".
const char* active_backend();

}  // namespace fsc::kernels
