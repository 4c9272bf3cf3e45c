#pragma once

#include <cstddef>

namespace wh::simd {

enum class Isa { Scalar, Avx2 };

// Instruction set selected at startup: AVX2 when the CPU supports it,
// overridable with WALSH_HARDNESS_SIMD=scalar|avx2.
Isa active_isa();
const char* isa_name(Isa isa);
bool avx2_supported();

// Test hook; throws ArgumentError if the requested ISA is unsupported.
void force_isa(Isa isa);

// In-place Walsh-Hadamard butterfly (unnormalized); len must be a power of two.
void fwht(double* data, std::size_t len);

double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);

namespace detail {
void fwht_scalar(double* data, std::size_t len);
void fwht_avx2(double* data, std::size_t len);
double sum_scalar(const double* x, std::size_t n);
double sum_avx2(const double* x, std::size_t n);
double dot_scalar(const double* x, const double* y, std::size_t n);
double dot_avx2(const double* x, const double* y, std::size_t n);
}  // namespace detail

}  // namespace wh::simd
