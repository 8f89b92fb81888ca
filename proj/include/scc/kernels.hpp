#pragma once

#include <cstddef>
#include <string>

namespace scc::kernels {

// Dense f64 inner-loop kernels behind every dissimilarity evaluation.
//
// Every variant of a kernel computes the *same* floating-point operations in
// the *same* order: four independent accumulator lanes over the main loop, a
// scalar tail, and the fixed reduction ((l0+l2)+(l1+l3))+tail. No FMA
// contraction. This makes scalar and SIMD results bit-identical, so the
// dispatch choice never changes program output.

struct Ops {
  // sum over i of (a[i]-b[i])^2
  double (*squared_euclidean)(const double* a, const double* b, std::size_t n);
  // sum over i of a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
};

enum class Isa { Scalar, Avx2 };

// Kernel table for a specific instruction set. Throws std::runtime_error if
// the ISA is not available on this machine.
const Ops& ops_for(Isa isa);

// Kernel table selected at startup: best available ISA, overridable with the
// SCC_KERNEL_ISA environment variable ("scalar" or "avx2").
const Ops& active();
Isa active_isa();
const char* isa_name(Isa isa);

// Replaces the active table (used by tests and the bench tool).
void force_isa(Isa isa);

bool avx2_supported();

}  // namespace scc::kernels
