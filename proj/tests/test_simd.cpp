#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "socgrad/rng.hpp"
#include "socgrad/simd/simd.hpp"

using socgrad::SplitMix64;
namespace simd = socgrad::simd;

namespace {

constexpr double kSentinel = -777.25;

// Buffer lengths chosen around the 4-lane AVX2 width: empty, sub-width,
// exact multiples, one past a multiple, and large enough to exercise the
// main loop.
const std::vector<std::size_t> kLengths = {0, 1, 2, 3, 4, 5, 7, 8, 9, 16, 33, 100, 1000};

std::vector<double> random_vector(SplitMix64& rng, std::size_t len, double lo,
                                  double hi) {
  std::vector<double> v(len + 4, kSentinel);  // canary tail past len
  for (std::size_t i = 0; i < len; ++i) {
    v[i] = rng.uniform(lo, hi);
  }
  return v;
}

void check_canary(const std::vector<double>& v, std::size_t len) {
  for (std::size_t i = len; i < v.size(); ++i) {
    REQUIRE(v[i] == kSentinel);
  }
}

bool close_rel(double a, double b, double rtol, double atol) {
  return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("level names and availability") {
  CHECK(simd::level_name(simd::Level::scalar) == "scalar");
  CHECK(simd::level_name(simd::Level::avx2) == "avx2");
  CHECK(simd::available(simd::Level::scalar));
  // The active level is always an available one.
  CHECK(simd::available(simd::active_level()));
}

TEST_CASE("set_active_level switches dispatch and rejects unavailable") {
  const simd::Level before = simd::active_level();
  simd::set_active_level(simd::Level::scalar);
  CHECK(simd::active_level() == simd::Level::scalar);
  CHECK(&simd::ops() == &simd::ops(simd::Level::scalar));
  if (simd::available(simd::Level::avx2)) {
    simd::set_active_level(simd::Level::avx2);
    CHECK(simd::active_level() == simd::Level::avx2);
    CHECK(&simd::ops() == &simd::ops(simd::Level::avx2));
  } else {
    CHECK_THROWS_AS(simd::set_active_level(simd::Level::avx2),
                    std::invalid_argument);
    CHECK_THROWS_AS(simd::ops(simd::Level::avx2), std::invalid_argument);
  }
  simd::set_active_level(before);
}

TEST_CASE("scalar sq_accum accumulates scaled squared residuals") {
  const auto& ops = simd::ops(simd::Level::scalar);
  std::vector<double> col = {1.0, -2.0, 0.5};
  std::vector<double> acc = {10.0, 20.0, 30.0};
  ops.sq_accum(col.data(), 0.5, 2.0, acc.data(), 3);
  CHECK(acc[0] == doctest::Approx(10.0 + 2.0 * 0.25).epsilon(1e-15));
  CHECK(acc[1] == doctest::Approx(20.0 + 2.0 * 6.25).epsilon(1e-15));
  CHECK(acc[2] == doctest::Approx(30.0 + 2.0 * 0.0).epsilon(1e-15));
}

TEST_CASE("scalar exp_neg matches std::exp") {
  const auto& ops = simd::ops(simd::Level::scalar);
  SplitMix64 rng(11);
  std::vector<double> acc = random_vector(rng, 64, 0.0, 50.0);
  std::vector<double> out(64 + 4, kSentinel);
  ops.exp_neg(acc.data(), 0.7, out.data(), 64);
  for (std::size_t i = 0; i < 64; ++i) {
    CHECK(close_rel(out[i], std::exp(-0.7 * acc[i]), 1e-14, 0.0));
  }
  check_canary(out, 64);
}

TEST_CASE("exp_neg is exactly 1 at zero and flushes deep underflow") {
  for (const simd::Level level : {simd::Level::scalar, simd::Level::avx2}) {
    if (!simd::available(level)) {
      continue;
    }
    CAPTURE(simd::level_name(level));
    const auto& ops = simd::ops(level);
    std::vector<double> acc = {0.0, 800.0, 1e6, 40.0};
    std::vector<double> out(acc.size() + 4, kSentinel);
    ops.exp_neg(acc.data(), 1.0, out.data(), acc.size());
    CHECK(out[0] == 1.0);
    CHECK(std::abs(out[1]) <= 1e-300);  // exp(-800) underflows
    CHECK(std::abs(out[2]) <= 1e-300);
    CHECK(close_rel(out[3], std::exp(-40.0), 1e-12, 0.0));
    check_canary(out, acc.size());
  }
}

TEST_CASE("dot and sum reference values") {
  const auto& ops = simd::ops(simd::Level::scalar);
  std::vector<double> w = {1.0, 2.0, 3.0, 4.0, 5.0};
  std::vector<double> c = {2.0, -1.0, 0.5, 0.0, 1.0};
  CHECK(ops.dot(w.data(), c.data(), 5) == doctest::Approx(6.5).epsilon(1e-15));
  CHECK(ops.sum(w.data(), 5) == doctest::Approx(15.0).epsilon(1e-15));
  CHECK(ops.dot(w.data(), c.data(), 0) == 0.0);
  CHECK(ops.sum(w.data(), 0) == 0.0);
}

TEST_CASE("avx2 variants agree with scalar references") {
  if (!simd::available(simd::Level::avx2)) {
    return;  // nothing to compare on this machine
  }
  const auto& scalar = simd::ops(simd::Level::scalar);
  const auto& wide = simd::ops(simd::Level::avx2);
  SplitMix64 rng(2024);

  for (const std::size_t len : kLengths) {
    CAPTURE(len);

    // sq_accum over data resembling squared-distance accumulation
    std::vector<double> col = random_vector(rng, len, -5.0, 5.0);
    std::vector<double> acc_s = random_vector(rng, len, 0.0, 10.0);
    std::vector<double> acc_w = acc_s;
    const double q = rng.uniform(-3.0, 3.0);
    const double scale = rng.uniform(0.01, 2.0);
    scalar.sq_accum(col.data(), q, scale, acc_s.data(), len);
    wide.sq_accum(col.data(), q, scale, acc_w.data(), len);
    for (std::size_t i = 0; i < len; ++i) {
      REQUIRE(close_rel(acc_w[i], acc_s[i], 1e-13, 1e-300));
    }
    check_canary(acc_w, len);

    // exp_neg over the accumulated distances
    std::vector<double> out_s(len + 4, kSentinel);
    std::vector<double> out_w(len + 4, kSentinel);
    scalar.exp_neg(acc_s.data(), 0.055, out_s.data(), len);
    wide.exp_neg(acc_s.data(), 0.055, out_w.data(), len);
    for (std::size_t i = 0; i < len; ++i) {
      REQUIRE(close_rel(out_w[i], out_s[i], 1e-12, 1e-300));
    }
    check_canary(out_w, len);

    // mul2 is a pure product: bitwise identical
    std::vector<double> b = random_vector(rng, len, -2.0, 2.0);
    std::vector<double> w_s(len + 4, kSentinel);
    std::vector<double> w_w(len + 4, kSentinel);
    scalar.mul2(out_s.data(), b.data(), w_s.data(), len);
    wide.mul2(out_s.data(), b.data(), w_w.data(), len);
    for (std::size_t i = 0; i < len; ++i) {
      REQUIRE(w_w[i] == w_s[i]);
    }
    check_canary(w_w, len);

    // reductions reassociate, so compare to scalar with a length-aware slack
    const double dot_s = scalar.dot(w_s.data(), col.data(), len);
    const double dot_w = wide.dot(w_s.data(), col.data(), len);
    REQUIRE(close_rel(dot_w, dot_s, 1e-12, 1e-15));
    const double sum_s = scalar.sum(w_s.data(), len);
    const double sum_w = wide.sum(w_s.data(), len);
    REQUIRE(close_rel(sum_w, sum_s, 1e-12, 1e-15));
  }
}

TEST_CASE("avx2 exp_neg tracks std::exp across magnitudes") {
  if (!simd::available(simd::Level::avx2)) {
    return;
  }
  const auto& wide = simd::ops(simd::Level::avx2);
  std::vector<double> acc;
  for (double e = -3.0; e <= 2.5; e += 0.041) {  // arguments from ~1e-3 to ~316
    acc.push_back(std::pow(10.0, e));
  }
  std::vector<double> out(acc.size() + 4, kSentinel);
  wide.exp_neg(acc.data(), 1.0, out.data(), acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const double want = std::exp(-acc[i]);
    CAPTURE(acc[i]);
    if (want < 1e-300) {
      CHECK(std::abs(out[i]) <= 1e-300);
    } else {
      CHECK(close_rel(out[i], want, 2e-12, 1e-300));
    }
  }
  check_canary(out, acc.size());
}

TEST_CASE("each level is deterministic run to run") {
  for (const simd::Level level : {simd::Level::scalar, simd::Level::avx2}) {
    if (!simd::available(level)) {
      continue;
    }
    const auto& ops = simd::ops(level);
    SplitMix64 rng(7);
    std::vector<double> acc = random_vector(rng, 33, 0.0, 20.0);
    std::vector<double> a(33 + 4, kSentinel);
    std::vector<double> b(33 + 4, kSentinel);
    ops.exp_neg(acc.data(), 0.5, a.data(), 33);
    ops.exp_neg(acc.data(), 0.5, b.data(), 33);
    for (std::size_t i = 0; i < 33; ++i) {
      REQUIRE(a[i] == b[i]);
    }
  }
}
