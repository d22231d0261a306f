#include "agt/fp_kernels.hpp"

#include <stdexcept>
#include <string>

namespace agt::fpk {

void axpy_scalar(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t a, uint32_t p) {
  for (std::size_t i = 0; i < n; ++i)
    y[i] = static_cast<uint32_t>((y[i] + static_cast<uint64_t>(a) * x[i]) % p);
}

void scale_scalar(uint32_t* y, std::size_t n, uint32_t a, uint32_t p) {
  for (std::size_t i = 0; i < n; ++i)
    y[i] = static_cast<uint32_t>((static_cast<uint64_t>(a) * y[i]) % p);
}

uint32_t dot_scalar(const uint32_t* x, const uint32_t* y, std::size_t n, uint32_t p) {
  // products are < 2^30, so a 64-bit accumulator is safe for any n we see
  uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += static_cast<uint64_t>(x[i]) * y[i];
  return static_cast<uint32_t>(acc % p);
}

#if defined(AGT_HAVE_AVX2)
namespace detail {
bool avx2_supported();
void axpy_avx2(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t a, uint32_t p);
void scale_avx2(uint32_t* y, std::size_t n, uint32_t a, uint32_t p);
uint32_t dot_avx2(const uint32_t* x, const uint32_t* y, std::size_t n, uint32_t p);
}  // namespace detail
#endif
#if defined(AGT_HAVE_NEON)
namespace detail {
void axpy_neon(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t a, uint32_t p);
void scale_neon(uint32_t* y, std::size_t n, uint32_t a, uint32_t p);
uint32_t dot_neon(const uint32_t* x, const uint32_t* y, std::size_t n, uint32_t p);
}  // namespace detail
#endif

namespace {

enum class Backend { Scalar, Avx2, Neon };

Backend pick_auto() {
#if defined(AGT_HAVE_AVX2)
  if (detail::avx2_supported()) return Backend::Avx2;
#endif
#if defined(AGT_HAVE_NEON)
  return Backend::Neon;
#endif
  return Backend::Scalar;
}

Backend g_backend = pick_auto();

}  // namespace

std::string_view backend() {
  switch (g_backend) {
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
    default: return "scalar";
  }
}

void set_backend(std::string_view name) {
  if (name == "auto") {
    g_backend = pick_auto();
    return;
  }
  if (name == "scalar") {
    g_backend = Backend::Scalar;
    return;
  }
#if defined(AGT_HAVE_AVX2)
  if (name == "avx2" && detail::avx2_supported()) {
    g_backend = Backend::Avx2;
    return;
  }
#endif
#if defined(AGT_HAVE_NEON)
  if (name == "neon") {
    g_backend = Backend::Neon;
    return;
  }
#endif
  throw std::runtime_error("fp kernel backend unavailable: " + std::string(name));
}

void axpy(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t a, uint32_t p) {
  if (a == 0) return;
#if defined(AGT_HAVE_AVX2)
  if (g_backend == Backend::Avx2) {
    detail::axpy_avx2(y, x, n, a, p);
    return;
  }
#endif
#if defined(AGT_HAVE_NEON)
  if (g_backend == Backend::Neon) {
    detail::axpy_neon(y, x, n, a, p);
    return;
  }
#endif
  axpy_scalar(y, x, n, a, p);
}

void scale(uint32_t* y, std::size_t n, uint32_t a, uint32_t p) {
#if defined(AGT_HAVE_AVX2)
  if (g_backend == Backend::Avx2) {
    detail::scale_avx2(y, n, a, p);
    return;
  }
#endif
#if defined(AGT_HAVE_NEON)
  if (g_backend == Backend::Neon) {
    detail::scale_neon(y, n, a, p);
    return;
  }
#endif
  scale_scalar(y, n, a, p);
}

uint32_t dot(const uint32_t* x, const uint32_t* y, std::size_t n, uint32_t p) {
#if defined(AGT_HAVE_AVX2)
  if (g_backend == Backend::Avx2) return detail::dot_avx2(x, y, n, p);
#endif
#if defined(AGT_HAVE_NEON)
  if (g_backend == Backend::Neon) return detail::dot_neon(x, y, n, p);
#endif
  return dot_scalar(x, y, n, p);
}

uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p) {
  uint64_t base = a % p, r = 1;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace agt::fpk
