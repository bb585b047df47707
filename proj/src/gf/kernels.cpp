#include "grq/gf/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace grq::gf::kernels {

namespace {

void axpy_scalar(Residue* dst, const Residue* src, Residue c, std::size_t n, unsigned p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = Residue((dst[i] + unsigned(c) * src[i]) % p);
}

void scale_scalar(Residue* dst, Residue c, std::size_t n, unsigned p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = Residue((unsigned(c) * dst[i]) % p);
}

const Table kScalar{axpy_scalar, scale_scalar, "scalar"};

std::atomic<const Table*> g_forced{nullptr};

const Table& pick() {
  const char* env = std::getenv("GRQ_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return kScalar;
  if (const Table* t = avx2_table()) return *t;
  if (const Table* t = neon_table()) return *t;
  return kScalar;
}

}  // namespace

const Table& scalar_table() { return kScalar; }

const Table& active() {
  if (const Table* f = g_forced.load(std::memory_order_relaxed)) return *f;
  static const Table& chosen = pick();
  return chosen;
}

void force(const Table* t) { g_forced.store(t, std::memory_order_relaxed); }

#if !defined(GRQ_HAVE_AVX2)
const Table* avx2_table() { return nullptr; }
#endif
#if !defined(GRQ_HAVE_NEON)
const Table* neon_table() { return nullptr; }
#endif

}  // namespace grq::gf::kernels
