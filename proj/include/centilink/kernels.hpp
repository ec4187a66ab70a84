#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace centilink::kernels {

// Vector primitives used by the iterative centrality loops. Each has a scalar
// reference implementation plus SIMD variants (AVX2 on x86-64, NEON on
// aarch64) selected at runtime. scale/scale_add are element-wise and
// bit-identical across variants; the two reductions may differ by rounding
// from reassociation.
struct KernelSet {
  const char* name;
  double (*l1_norm)(const double* x, std::size_t n);
  double (*l1_distance)(const double* x, const double* y, std::size_t n);
  void (*scale)(double* x, std::size_t n, double a);              // x *= a
  void (*scale_add)(double* dst, const double* src, std::size_t n,
                    double a, double b);                          // dst = a*src + b
};

const KernelSet& scalar_kernels();

// Variants usable on this machine, best first. Always contains "scalar".
std::vector<const KernelSet*> available_kernels();

// The variant all convenience wrappers dispatch through. Defaults to the best
// available; select_kernels overrides it (returns false for names that are
// unknown or unsupported here).
const KernelSet& active_kernels();
bool select_kernels(std::string_view name);

inline double l1_norm(std::span<const double> x) {
  return active_kernels().l1_norm(x.data(), x.size());
}

inline double l1_distance(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  return active_kernels().l1_distance(x.data(), y.data(), x.size());
}

inline void scale(std::span<double> x, double a) {
  active_kernels().scale(x.data(), x.size(), a);
}

inline void scale_add(std::span<double> dst, std::span<const double> src, double a, double b) {
  assert(dst.size() == src.size());
  active_kernels().scale_add(dst.data(), src.data(), dst.size(), a, b);
}

}  // namespace centilink::kernels
