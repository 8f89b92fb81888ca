#include "scc/kernels.hpp"

#if defined(SCC_HAVE_AVX2_KERNELS)

#include <immintrin.h>

namespace scc::kernels {

namespace {

// Reduction matching the scalar kernels exactly: lanes [l0,l1,l2,l3] fold to
// (l0+l2)+(l1+l3). Explicit mul+add throughout; FMA would round differently.
inline double reduce_lanes(__m256d acc) {
  const __m128d lo = _mm256_castpd256_pd128(acc);       // [l0, l1]
  const __m128d hi = _mm256_extractf128_pd(acc, 1);     // [l2, l3]
  const __m128d sum = _mm_add_pd(lo, hi);               // [l0+l2, l1+l3]
  return _mm_cvtsd_f64(_mm_hadd_pd(sum, sum));          // (l0+l2)+(l1+l3)
}

double squared_euclidean_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    tail += d * d;
  }
  return reduce_lanes(acc) + tail;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    tail += a[i] * b[i];
  }
  return reduce_lanes(acc) + tail;
}

}  // namespace

const Ops avx2_ops{&squared_euclidean_avx2, &dot_avx2};

}  // namespace scc::kernels

#endif  // SCC_HAVE_AVX2_KERNELS
