#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Prime-field row kernels. Scalar reference implementations plus SIMD
// variants (AVX2 on x86-64, NEON on aarch64) selected at runtime.
// All inputs and outputs are fully reduced: values lie in [0, p).
// Primes must satisfy p < 2^15 so that a*x + y fits comfortably in
// 32 bits before reduction.

namespace agt::fpk {

constexpr uint32_t kMaxPrime = 32749;  // largest prime below 2^15

// y[i] <- (y[i] + a*x[i]) mod p
void axpy(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t a, uint32_t p);

// y[i] <- (a*y[i]) mod p
void scale(uint32_t* y, std::size_t n, uint32_t a, uint32_t p);

// sum_i x[i]*y[i] mod p
uint32_t dot(const uint32_t* x, const uint32_t* y, std::size_t n, uint32_t p);

// Scalar reference kernels, always available (used by equivalence tests).
void axpy_scalar(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t a, uint32_t p);
void scale_scalar(uint32_t* y, std::size_t n, uint32_t a, uint32_t p);
uint32_t dot_scalar(const uint32_t* x, const uint32_t* y, std::size_t n, uint32_t p);

// Active backend: "avx2", "neon" or "scalar".
std::string_view backend();
// Force a backend ("auto", "scalar", "avx2", "neon"). Throws if unavailable.
void set_backend(std::string_view name);

uint32_t inv_mod(uint32_t a, uint32_t p);
uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p);
bool is_prime(uint32_t n);

}  // namespace agt::fpk
