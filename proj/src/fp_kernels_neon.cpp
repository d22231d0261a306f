// NEON variants of the prime-field row kernels (aarch64). Same Barrett
// scheme as the AVX2 path: M = floor(2^30/p) < 2^29, q = (t*M)>>30 with
// t < 2^30 gives r = t - q*p in [0, 2p).

#include <arm_neon.h>

#include <cstddef>
#include <cstdint>

namespace agt::fpk {

void axpy_scalar(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t a, uint32_t p);
void scale_scalar(uint32_t* y, std::size_t n, uint32_t a, uint32_t p);
uint32_t dot_scalar(const uint32_t* x, const uint32_t* y, std::size_t n, uint32_t p);

namespace detail {

namespace {

inline uint32x4_t reduce30(uint32x4_t t, uint32_t p, uint32_t M) {
  const uint32x2_t vM = vdup_n_u32(M);
  const uint32x2_t vp2 = vdup_n_u32(p);
  uint32x2_t tlo = vget_low_u32(t);
  uint32x2_t thi = vget_high_u32(t);
  // q < 2^30 fits in 32 bits, so narrowing before the q*p multiply is exact
  uint32x2_t qlo = vmovn_u64(vshrq_n_u64(vmull_u32(tlo, vM), 30));
  uint32x2_t qhi = vmovn_u64(vshrq_n_u64(vmull_u32(thi, vM), 30));
  uint32x2_t rlo = vsub_u32(tlo, vmovn_u64(vmull_u32(qlo, vp2)));
  uint32x2_t rhi = vsub_u32(thi, vmovn_u64(vmull_u32(qhi, vp2)));
  uint32x4_t r = vcombine_u32(rlo, rhi);
  uint32x4_t vp = vdupq_n_u32(p);
  uint32x4_t mask = vcgeq_u32(r, vp);
  return vsubq_u32(r, vandq_u32(mask, vp));
}

}  // namespace

void axpy_neon(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t a, uint32_t p) {
  const uint32_t M = static_cast<uint32_t>((1ull << 30) / p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t vx = vld1q_u32(x + i);
    uint32x4_t vy = vld1q_u32(y + i);
    uint32x4_t t = vmlaq_n_u32(vy, vx, a);
    vst1q_u32(y + i, reduce30(t, p, M));
  }
  if (i < n) axpy_scalar(y + i, x + i, n - i, a, p);
}

void scale_neon(uint32_t* y, std::size_t n, uint32_t a, uint32_t p) {
  const uint32_t M = static_cast<uint32_t>((1ull << 30) / p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t vy = vld1q_u32(y + i);
    uint32x4_t t = vmulq_n_u32(vy, a);
    vst1q_u32(y + i, reduce30(t, p, M));
  }
  if (i < n) scale_scalar(y + i, n - i, a, p);
}

uint32_t dot_neon(const uint32_t* x, const uint32_t* y, std::size_t n, uint32_t p) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t vx = vld1q_u32(x + i);
    uint32x4_t vy = vld1q_u32(y + i);
    acc = vaddq_u64(acc, vmull_u32(vget_low_u32(vx), vget_low_u32(vy)));
    acc = vaddq_u64(acc, vmull_u32(vget_high_u32(vx), vget_high_u32(vy)));
  }
  uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
  for (; i < n; ++i) total += static_cast<uint64_t>(x[i]) * y[i];
  return static_cast<uint32_t>(total % p);
}

}  // namespace detail
}  // namespace agt::fpk
