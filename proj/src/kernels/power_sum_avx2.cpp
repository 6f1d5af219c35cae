#include <immintrin.h>

#include <algorithm>
#include <vector>

#include "projcub/error.hpp"
#include "projcub/kernels/power_sum.hpp"
#include "projcub/summation.hpp"

namespace projcub::kernels {

#define VEC __m256d
#define VLEN 4
static inline __m256d vzero() { return _mm256_setzero_pd(); }
static inline __m256d vload(const double* p) { return _mm256_load_pd(p); }
static inline __m256d vset1(double v) { return _mm256_set1_pd(v); }
static inline __m256d vfmadd(__m256d a, __m256d b, __m256d c) { return _mm256_fmadd_pd(a, b, c); }
static inline __m256d vmul(__m256d a, __m256d b) { return _mm256_mul_pd(a, b); }
static inline double vreduce(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

#include "power_sum_simd.inc"

#undef VEC
#undef VLEN

void power_sums_avx2(const PowerSumTask& task) {
  switch (task.components) {
    case 1: run_blocks<1, 8>(task); return;
    case 2: run_blocks<2, 4>(task); return;
    case 4: run_blocks<4, 2>(task); return;
    default: throw InvalidArgument("unsupported component count");
  }
}

}  // namespace projcub::kernels
