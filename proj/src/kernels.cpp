#include "scc/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace scc::kernels {

namespace {

double squared_euclidean_scalar(const double* a, const double* b, std::size_t n) {
  double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const double d0 = a[i] - b[i];
    const double d1 = a[i + 1] - b[i + 1];
    const double d2 = a[i + 2] - b[i + 2];
    const double d3 = a[i + 3] - b[i + 3];
    l0 += d0 * d0;
    l1 += d1 * d1;
    l2 += d2 * d2;
    l3 += d3 * d3;
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    tail += d * d;
  }
  return ((l0 + l2) + (l1 + l3)) + tail;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    l0 += a[i] * b[i];
    l1 += a[i + 1] * b[i + 1];
    l2 += a[i + 2] * b[i + 2];
    l3 += a[i + 3] * b[i + 3];
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    tail += a[i] * b[i];
  }
  return ((l0 + l2) + (l1 + l3)) + tail;
}

constexpr Ops kScalarOps{&squared_euclidean_scalar, &dot_scalar};

Isa detect_isa() {
  if (const char* env = std::getenv("SCC_KERNEL_ISA")) {
    const std::string wanted(env);
    if (wanted == "scalar") return Isa::Scalar;
    if (wanted == "avx2") {
      if (!avx2_supported()) {
        throw std::runtime_error("SCC_KERNEL_ISA=avx2 but AVX2 is unavailable");
      }
      return Isa::Avx2;
    }
  }
  return avx2_supported() ? Isa::Avx2 : Isa::Scalar;
}

Isa g_active_isa = detect_isa();

}  // namespace

#if defined(SCC_HAVE_AVX2_KERNELS)
extern const Ops avx2_ops;

bool avx2_supported() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}
#else
bool avx2_supported() { return false; }
#endif

const Ops& ops_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return kScalarOps;
    case Isa::Avx2:
#if defined(SCC_HAVE_AVX2_KERNELS)
      if (avx2_supported()) return avx2_ops;
#endif
      throw std::runtime_error("AVX2 kernels unavailable on this machine");
  }
  throw std::runtime_error("unknown kernel ISA");
}

const Ops& active() { return ops_for(g_active_isa); }

Isa active_isa() { return g_active_isa; }

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

void force_isa(Isa isa) {
  ops_for(isa);  // validates availability
  g_active_isa = isa;
}

}  // namespace scc::kernels
