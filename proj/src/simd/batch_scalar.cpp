// Scalar reference implementations of the batch primitives. These define the
// semantics the wider variants are tested against.

#include <cmath>
#include <cstddef>

#include "tables.hpp"

namespace socgrad::simd::detail {
namespace {

void sq_accum(const double* col, double q, double scale, double* acc,
              std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    const double d = col[i] - q;
    acc[i] += scale * d * d;
  }
}

void exp_neg(const double* acc, double scale, double* out, std::size_t len) {
  const double c = -scale;
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = std::exp(c * acc[i]);
  }
}

void mul2(const double* a, const double* b, double* w, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    w[i] = a[i] * b[i];
  }
}

double dot(const double* w, const double* col, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    s += w[i] * col[i];
  }
  return s;
}

double sum(const double* w, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    s += w[i];
  }
  return s;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{&sq_accum, &exp_neg, &mul2, &dot, &sum};
  return table;
}

}  // namespace socgrad::simd::detail
