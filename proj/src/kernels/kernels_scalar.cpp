#include "hidden_ties/kernels.hpp"

#include <cmath>

namespace hidden_ties::kernels {
namespace {

double reduce_add_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

void scale_scalar(double* x, std::size_t n, double s) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= s;
}

void axpby_scalar(double a, const double* x, double b, const double* y,
                  double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

double squared_distance_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
  }
  return acc;
}

double max_abs_diff_scalar(const double* x, const double* y, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::fabs(x[i] - y[i]);
    if (d > m) m = d;
  }
  return m;
}

void spmv_unit_scalar(const std::uint32_t* offsets, const std::uint32_t* targets,
                      std::size_t n, const double* x, double* y) {
  for (std::size_t v = 0; v < n; ++v) {
    double acc = 0.0;
    for (std::uint32_t j = offsets[v]; j < offsets[v + 1]; ++j) acc += x[targets[j]];
    y[v] = acc;
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {
      "scalar",          reduce_add_scalar, scale_scalar,
      axpby_scalar,      squared_distance_scalar,
      max_abs_diff_scalar, spmv_unit_scalar,
  };
  return ops;
}

}  // namespace hidden_ties::kernels
