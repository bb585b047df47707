// Compiled with -mavx2; only called after a runtime cpu check.
#include <immintrin.h>

#include <array>

#include "grq/gf/kernels.hpp"

namespace grq::gf::kernels {

namespace {

// residues are < 16, so "multiply by c" is a 16-entry byte shuffle
__m256i mul_table(Residue c, unsigned p) {
  alignas(16) std::array<Residue, 16> t{};
  for (unsigned x = 0; x < p; ++x) t[x] = Residue(c * x % p);
  __m128i lo = _mm_load_si128(reinterpret_cast<const __m128i*>(t.data()));
  return _mm256_broadcastsi128_si256(lo);
}

void axpy_avx2(Residue* dst, const Residue* src, Residue c, std::size_t n, unsigned p) {
  const __m256i tab = mul_table(c, p);
  const __m256i vp = _mm256_set1_epi8(char(p));
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i sum = _mm256_add_epi8(d, _mm256_shuffle_epi8(tab, s));
    // sum < 2p: subtracting p wraps to a large byte exactly when sum < p
    sum = _mm256_min_epu8(sum, _mm256_sub_epi8(sum, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), sum);
  }
  for (; i < n; ++i) dst[i] = Residue((dst[i] + unsigned(c) * src[i]) % p);
}

void scale_avx2(Residue* dst, Residue c, std::size_t n, unsigned p) {
  const __m256i tab = mul_table(c, p);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_shuffle_epi8(tab, d));
  }
  for (; i < n; ++i) dst[i] = Residue((unsigned(c) * dst[i]) % p);
}

const Table kAvx2{axpy_avx2, scale_avx2, "avx2"};

}  // namespace

const Table* avx2_table() {
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &kAvx2 : nullptr;
}

}  // namespace grq::gf::kernels
