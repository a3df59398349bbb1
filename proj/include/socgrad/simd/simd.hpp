#pragma once

#include <cstddef>
#include <string_view>

namespace socgrad::simd {

enum class Level { scalar, avx2 };

/// Batch primitives over contiguous double arrays. These are the inner loops
/// of kernel-vector evaluation, Gram construction, and weighted reductions.
/// Each operation has a scalar reference implementation and may have wider
/// variants; all variants of one operation agree to floating-point tolerance
/// (not bitwise), see tests/test_simd.cpp for the equivalence contract.
struct Ops {
  // acc[i] += scale * (col[i] - q)^2
  void (*sq_accum)(const double* col, double q, double scale, double* acc,
                   std::size_t len);
  // out[i] = exp(-scale * acc[i])
  void (*exp_neg)(const double* acc, double scale, double* out,
                  std::size_t len);
  // w[i] = a[i] * b[i]
  void (*mul2)(const double* a, const double* b, double* w, std::size_t len);
  // sum_i w[i] * col[i]
  double (*dot)(const double* w, const double* col, std::size_t len);
  // sum_i w[i]
  double (*sum)(const double* w, std::size_t len);
};

/// Best level supported by this CPU (and compiled into this binary).
Level detected_level();

/// Level in effect: detected_level() unless overridden by the environment
/// variable SOCGRAD_SIMD (values: "scalar", "avx2") or set_active_level().
/// An unavailable or unrecognized override throws on first use.
Level active_level();

/// Force a level (test hook). Throws std::invalid_argument if unavailable.
void set_active_level(Level level);

bool available(Level level);
std::string_view level_name(Level level);

/// Dispatch table for the active level.
const Ops& ops();

/// Dispatch table for a specific level (equivalence tests). Throws if the
/// level is unavailable.
const Ops& ops(Level level);

}  // namespace socgrad::simd
