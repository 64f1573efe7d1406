// NEON variants for aarch64, where Advanced SIMD is baseline.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

#include "hidden_ties/kernels.hpp"

namespace hidden_ties::kernels {
namespace {

double reduce_add_neon(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(x + i));
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) r += x[i];
  return r;
}

void scale_neon(double* x, std::size_t n, double s) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(vld1q_f64(x + i), vs));
  for (; i < n; ++i) x[i] *= s;
}

void axpby_neon(double a, const double* x, double b, const double* y,
                double* out, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  const float64x2_t vb = vdupq_n_f64(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t t = vaddq_f64(vmulq_f64(va, vld1q_f64(x + i)),
                                    vmulq_f64(vb, vld1q_f64(y + i)));
    vst1q_f64(out + i, t);
  }
  for (; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

double squared_distance_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(x + i), vld1q_f64(y + i));
    acc = vaddq_f64(acc, vmulq_f64(d, d));
  }
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) {
    const double d = x[i] - y[i];
    r += d * d;
  }
  return r;
}

double max_abs_diff_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vabdq_f64(vld1q_f64(x + i), vld1q_f64(y + i));
    acc = vmaxq_f64(acc, d);
  }
  double r = vmaxvq_f64(acc);
  for (; i < n; ++i) {
    const double d = std::fabs(x[i] - y[i]);
    if (d > r) r = d;
  }
  return r;
}

void spmv_unit_neon(const std::uint32_t* offsets, const std::uint32_t* targets,
                    std::size_t n, const double* x, double* y) {
  for (std::size_t v = 0; v < n; ++v) {
    double acc = 0.0;
    for (std::uint32_t j = offsets[v]; j < offsets[v + 1]; ++j) acc += x[targets[j]];
    y[v] = acc;
  }
}

}  // namespace

const Ops& neon_ops() {
  static const Ops ops = {
      "neon",        reduce_add_neon, scale_neon,
      axpby_neon,    squared_distance_neon,
      max_abs_diff_neon, spmv_unit_neon,
  };
  return ops;
}

}  // namespace hidden_ties::kernels

#endif  // __aarch64__
