#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "tables.hpp"

namespace socgrad::simd {
namespace {

bool cpu_has_avx2() {
#if defined(SOCGRAD_HAVE_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Level read_env_or_detected() {
  const char* env = std::getenv("SOCGRAD_SIMD");
  if (env == nullptr || *env == '\0') {
    return detected_level();
  }
  const std::string v(env);
  if (v == "scalar") {
    return Level::scalar;
  }
  if (v == "avx2") {
    if (!available(Level::avx2)) {
      throw std::runtime_error("SOCGRAD_SIMD=avx2 but AVX2 is not available");
    }
    return Level::avx2;
  }
  throw std::runtime_error("SOCGRAD_SIMD: unknown level '" + v +
                           "' (expected scalar or avx2)");
}

std::atomic<Level>& active_slot() {
  static std::atomic<Level> slot{read_env_or_detected()};
  return slot;
}

}  // namespace

Level detected_level() {
  static const Level level = cpu_has_avx2() ? Level::avx2 : Level::scalar;
  return level;
}

bool available(Level level) {
  return level == Level::scalar ||
         (level == Level::avx2 && detected_level() == Level::avx2);
}

Level active_level() { return active_slot().load(std::memory_order_relaxed); }

void set_active_level(Level level) {
  if (!available(level)) {
    throw std::invalid_argument("simd level not available on this machine");
  }
  active_slot().store(level, std::memory_order_relaxed);
}

std::string_view level_name(Level level) {
  switch (level) {
    case Level::scalar:
      return "scalar";
    case Level::avx2:
      return "avx2";
  }
  return "unknown";
}

const Ops& ops(Level level) {
  if (!available(level)) {
    throw std::invalid_argument("simd level not available on this machine");
  }
#if defined(SOCGRAD_HAVE_AVX2)
  if (level == Level::avx2) {
    return detail::avx2_ops();
  }
#endif
  return detail::scalar_ops();
}

const Ops& ops() { return ops(active_level()); }

}  // namespace socgrad::simd
