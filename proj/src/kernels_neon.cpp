#include "kernels_detail.hpp"

#if defined(CENTILINK_HAVE_NEON) && defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

namespace centilink::kernels::detail {

namespace {

double l1_norm_neon(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vabsq_f64(vld1q_f64(x + i)));
  double sum = vaddvq_f64(acc);
  for (; i < n; ++i) sum += std::fabs(x[i]);
  return sum;
}

double l1_distance_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vaddq_f64(acc, vabdq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
  double sum = vaddvq_f64(acc);
  for (; i < n; ++i) sum += std::fabs(x[i] - y[i]);
  return sum;
}

void scale_neon(double* x, std::size_t n, double a) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(vld1q_f64(x + i), va));
  for (; i < n; ++i) x[i] *= a;
}

void scale_add_neon(double* dst, const double* src, std::size_t n, double a, double b) {
  const float64x2_t va = vdupq_n_f64(a);
  const float64x2_t vb = vdupq_n_f64(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(dst + i, vaddq_f64(vmulq_f64(va, vld1q_f64(src + i)), vb));
  for (; i < n; ++i) dst[i] = a * src[i] + b;
}

constexpr KernelSet kNeon = {
    "neon", l1_norm_neon, l1_distance_neon, scale_neon, scale_add_neon,
};

}  // namespace

// NEON is architectural baseline on aarch64.
const KernelSet* neon_kernels() { return &kNeon; }

}  // namespace centilink::kernels::detail

#endif
