#include "centilink/kernels.hpp"

#include <cmath>

#include "kernels_detail.hpp"

namespace centilink::kernels {

namespace {

double l1_norm_scalar(const double* x, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += std::fabs(x[i]);
  return sum;
}

double l1_distance_scalar(const double* x, const double* y, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += std::fabs(x[i] - y[i]);
  return sum;
}

void scale_scalar(double* x, std::size_t n, double a) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void scale_add_scalar(double* dst, const double* src, std::size_t n, double a, double b) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a * src[i] + b;
}

constexpr KernelSet kScalar = {
    "scalar", l1_norm_scalar, l1_distance_scalar, scale_scalar, scale_add_scalar,
};

std::vector<const KernelSet*> build_registry() {
  std::vector<const KernelSet*> sets;
#if defined(CENTILINK_HAVE_AVX2)
  if (const KernelSet* k = detail::avx2_kernels()) sets.push_back(k);
#endif
#if defined(CENTILINK_HAVE_NEON)
  if (const KernelSet* k = detail::neon_kernels()) sets.push_back(k);
#endif
  sets.push_back(&kScalar);
  return sets;
}

const KernelSet*& active_slot() {
  static const KernelSet* active = build_registry().front();
  return active;
}

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

std::vector<const KernelSet*> available_kernels() { return build_registry(); }

const KernelSet& active_kernels() { return *active_slot(); }

bool select_kernels(std::string_view name) {
  for (const KernelSet* k : build_registry()) {
    if (name == k->name) {
      active_slot() = k;
      return true;
    }
  }
  return false;
}

}  // namespace centilink::kernels
