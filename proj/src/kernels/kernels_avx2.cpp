// AVX2 variants. This translation unit is compiled with -mavx2 and only
// entered after a runtime cpuid check, so the rest of the binary stays free
// of AVX encodings.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "hidden_ties/kernels.hpp"

namespace hidden_ties::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, shuf));
}

double reduce_add_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i];
  return r;
}

void scale_avx2(double* x, std::size_t n, double s) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), vs));
  for (; i < n; ++i) x[i] *= s;
}

void axpby_avx2(double a, const double* x, double b, const double* y,
                double* out, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(x + i)),
                                    _mm256_mul_pd(vb, _mm256_loadu_pd(y + i)));
    _mm256_storeu_pd(out + i, t);
  }
  for (; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

double squared_distance_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double r = hsum(acc);
  for (; i < n; ++i) {
    const double d = x[i] - y[i];
    r += d * d;
  }
  return r;
}

double max_abs_diff_avx2(const double* x, const double* y, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign_mask, d));
  }
  double r = hmax(acc);
  for (; i < n; ++i) {
    const double d = std::fabs(x[i] - y[i]);
    if (d > r) r = d;
  }
  return r;
}

void spmv_unit_avx2(const std::uint32_t* offsets, const std::uint32_t* targets,
                    std::size_t n, const double* x, double* y) {
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint32_t begin = offsets[v];
    const std::uint32_t end = offsets[v + 1];
    __m256d acc = _mm256_setzero_pd();
    std::uint32_t j = begin;
    for (; j + 4 <= end; j += 4) {
      const __m128i idx =
          _mm_loadu_si128(reinterpret_cast<const __m128i*>(targets + j));
      acc = _mm256_add_pd(acc, _mm256_i32gather_pd(x, idx, 8));
    }
    double r = hsum(acc);
    for (; j < end; ++j) r += x[targets[j]];
    y[v] = r;
  }
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops = {
      "avx2",        reduce_add_avx2, scale_avx2,
      axpby_avx2,    squared_distance_avx2,
      max_abs_diff_avx2, spmv_unit_avx2,
  };
  return ops;
}

}  // namespace hidden_ties::kernels

#endif  // x86_64
