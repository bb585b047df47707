// aarch64 only (NEON is baseline there, no runtime probe needed).
#include <arm_neon.h>

#include <array>

#include "grq/gf/kernels.hpp"

namespace grq::gf::kernels {

namespace {

uint8x16_t mul_table(Residue c, unsigned p) {
  std::array<Residue, 16> t{};
  for (unsigned x = 0; x < p; ++x) t[x] = Residue(c * x % p);
  return vld1q_u8(t.data());
}

void axpy_neon(Residue* dst, const Residue* src, Residue c, std::size_t n, unsigned p) {
  const uint8x16_t tab = mul_table(c, p);
  const uint8x16_t vp = vdupq_n_u8(Residue(p));
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t sum = vaddq_u8(vld1q_u8(dst + i), vqtbl1q_u8(tab, vld1q_u8(src + i)));
    sum = vminq_u8(sum, vsubq_u8(sum, vp));
    vst1q_u8(dst + i, sum);
  }
  for (; i < n; ++i) dst[i] = Residue((dst[i] + unsigned(c) * src[i]) % p);
}

void scale_neon(Residue* dst, Residue c, std::size_t n, unsigned p) {
  const uint8x16_t tab = mul_table(c, p);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) vst1q_u8(dst + i, vqtbl1q_u8(tab, vld1q_u8(dst + i)));
  for (; i < n; ++i) dst[i] = Residue((unsigned(c) * dst[i]) % p);
}

const Table kNeon{axpy_neon, scale_neon, "neon"};

}  // namespace

const Table* neon_table() { return &kNeon; }

}  // namespace grq::gf::kernels
