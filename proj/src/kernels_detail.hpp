#pragma once

#include "centilink/kernels.hpp"

namespace centilink::kernels::detail {

// Defined in the per-ISA translation units (compiled only where the flag set
// is available). Each returns nullptr when the running CPU lacks the feature.
#if defined(CENTILINK_HAVE_AVX2)
const KernelSet* avx2_kernels();
#endif
#if defined(CENTILINK_HAVE_NEON)
const KernelSet* neon_kernels();
#endif

}  // namespace centilink::kernels::detail
