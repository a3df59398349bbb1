#pragma once

#include "socgrad/simd/simd.hpp"

namespace socgrad::simd::detail {

const Ops& scalar_ops();

#if defined(SOCGRAD_HAVE_AVX2)
const Ops& avx2_ops();
#endif

}  // namespace socgrad::simd::detail
