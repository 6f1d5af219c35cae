#include <immintrin.h>

#include <algorithm>
#include <vector>

#include "projcub/error.hpp"
#include "projcub/kernels/power_sum.hpp"
#include "projcub/summation.hpp"

namespace projcub::kernels {

#define VEC __m512d
#define VLEN 8
static inline __m512d vzero() { return _mm512_setzero_pd(); }
static inline __m512d vload(const double* p) { return _mm512_load_pd(p); }
static inline __m512d vset1(double v) { return _mm512_set1_pd(v); }
static inline __m512d vfmadd(__m512d a, __m512d b, __m512d c) { return _mm512_fmadd_pd(a, b, c); }
static inline __m512d vmul(__m512d a, __m512d b) { return _mm512_mul_pd(a, b); }
static inline double vreduce(__m512d v) { return _mm512_reduce_add_pd(v); }

#include "power_sum_simd.inc"

#undef VEC
#undef VLEN

void power_sums_avx512(const PowerSumTask& task) {
  switch (task.components) {
    case 1: run_blocks<1, 8>(task); return;
    case 2: run_blocks<2, 8>(task); return;
    case 4: run_blocks<4, 4>(task); return;
    default: throw InvalidArgument("unsupported component count");
  }
}

}  // namespace projcub::kernels
