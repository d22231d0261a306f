// AVX2 variants of the prime-field row kernels. Reduction uses a Barrett
// multiplier M = floor(2^30/p): for t < 2^30 and p < 2^15, q = (t*M)>>30
// satisfies q in {floor(t/p) - 1, floor(t/p)}, so r = t - q*p lies in [0, 2p)
// and one conditional subtract finishes the reduction. M < 2^29, so the
// 32x32->64 unsigned multiplies below are exact.

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

namespace agt::fpk {

void axpy_scalar(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t a, uint32_t p);
void scale_scalar(uint32_t* y, std::size_t n, uint32_t a, uint32_t p);
uint32_t dot_scalar(const uint32_t* x, const uint32_t* y, std::size_t n, uint32_t p);

namespace detail {

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

namespace {

// Reduce eight 32-bit lanes, each < 2^30, modulo p.
inline __m256i reduce30(__m256i t, __m256i vp, __m256i vM) {
  const __m256i lomask = _mm256_set1_epi64x(0xffffffffll);
  __m256i te = _mm256_and_si256(t, lomask);
  __m256i to = _mm256_srli_epi64(t, 32);
  __m256i qe = _mm256_srli_epi64(_mm256_mul_epu32(te, vM), 30);
  __m256i qo = _mm256_srli_epi64(_mm256_mul_epu32(to, vM), 30);
  __m256i re = _mm256_sub_epi64(te, _mm256_mul_epu32(qe, vp));
  __m256i ro = _mm256_sub_epi64(to, _mm256_mul_epu32(qo, vp));
  __m256i r = _mm256_or_si256(_mm256_and_si256(re, lomask), _mm256_slli_epi64(ro, 32));
  // conditional subtract: r in [0, 2p)
  __m256i rs = _mm256_sub_epi32(r, vp);
  return _mm256_min_epu32(r, rs);
}

}  // namespace

void axpy_avx2(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t a, uint32_t p) {
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vM = _mm256_set1_epi64x(static_cast<long long>((1ull << 30) / p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i t = _mm256_add_epi32(vy, _mm256_mullo_epi32(vx, va));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), reduce30(t, vp, vM));
  }
  if (i < n) axpy_scalar(y + i, x + i, n - i, a, p);
}

void scale_avx2(uint32_t* y, std::size_t n, uint32_t a, uint32_t p) {
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vM = _mm256_set1_epi64x(static_cast<long long>((1ull << 30) / p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i t = _mm256_mullo_epi32(vy, va);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), reduce30(t, vp, vM));
  }
  if (i < n) scale_scalar(y + i, n - i, a, p);
}

uint32_t dot_avx2(const uint32_t* x, const uint32_t* y, std::size_t n, uint32_t p) {
  __m256i acc = _mm256_setzero_si256();
  const __m256i lomask = _mm256_set1_epi64x(0xffffffffll);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i pe = _mm256_mul_epu32(_mm256_and_si256(vx, lomask), _mm256_and_si256(vy, lomask));
    __m256i po = _mm256_mul_epu32(_mm256_srli_epi64(vx, 32), _mm256_srli_epi64(vy, 32));
    acc = _mm256_add_epi64(acc, _mm256_add_epi64(pe, po));
  }
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<uint64_t>(x[i]) * y[i];
  return static_cast<uint32_t>(total % p);
}

}  // namespace detail
}  // namespace agt::fpk
