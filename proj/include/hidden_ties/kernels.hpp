#pragma once

#include <cstddef>
#include <cstdint>

// Dense double-precision kernels behind the numeric inner loops (power
// iteration, random-walk signature distances). Each operation exists as a
// scalar reference implementation plus SIMD variants; one variant is picked
// at startup from CPU features, overridable with HIDDEN_TIES_SIMD=
// scalar|avx2|neon|auto. Variants may reassociate reductions, so cross-variant
// results agree to rounding, not bit-for-bit; for a fixed process the selected
// variant never changes, which keeps runs byte-reproducible.

namespace hidden_ties::kernels {

struct Ops {
  const char* name;

  // sum of x[0..n)
  double (*reduce_add)(const double* x, std::size_t n);
  // x[i] *= s
  void (*scale)(double* x, std::size_t n, double s);
  // out[i] = a*x[i] + b*y[i]; out may alias x or y
  void (*axpby)(double a, const double* x, double b, const double* y,
                double* out, std::size_t n);
  // sum of (x[i]-y[i])^2
  double (*squared_distance)(const double* x, const double* y, std::size_t n);
  // max of |x[i]-y[i]|, 0 for n == 0
  double (*max_abs_diff)(const double* x, const double* y, std::size_t n);
  // y[v] = sum of x[u] over u in targets[offsets[v]..offsets[v+1]) for each
  // of the n rows; unit-weight CSR matrix-vector product
  void (*spmv_unit)(const std::uint32_t* offsets, const std::uint32_t* targets,
                    std::size_t n, const double* x, double* y);
};

const Ops& scalar_ops();

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_available();
const Ops& avx2_ops();
#endif

#if defined(__aarch64__)
const Ops& neon_ops();
#endif

// Variant selected once per process.
const Ops& active();

}  // namespace hidden_ties::kernels
