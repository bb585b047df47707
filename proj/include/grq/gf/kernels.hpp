#pragma once

#include <cstddef>
#include <string_view>

#include "grq/gf/field.hpp"

// Row kernels used by elimination and products. Scalar versions are the
// reference; vector versions must agree bit for bit.
namespace grq::gf::kernels {

// dst[i] = (dst[i] + c * src[i]) mod p
using AxpyFn = void (*)(Residue* dst, const Residue* src, Residue c, std::size_t n, unsigned p);
// dst[i] = (c * dst[i]) mod p
using ScaleFn = void (*)(Residue* dst, Residue c, std::size_t n, unsigned p);

struct Table {
  AxpyFn axpy;
  ScaleFn scale;
  std::string_view name;
};

const Table& scalar_table();
// nullptr when the variant was not compiled in or the cpu lacks it
const Table* avx2_table();
const Table* neon_table();

// Chosen once on first use: best supported, unless GRQ_SIMD=scalar.
const Table& active();

// test hook; pass nullptr to restore automatic choice
void force(const Table* t);

inline void axpy(Residue* dst, const Residue* src, Residue c, std::size_t n, unsigned p) {
  if (c == 0 || n == 0) return;
  active().axpy(dst, src, c, n, p);
}
inline void scale(Residue* dst, Residue c, std::size_t n, unsigned p) {
  if (c == 1 || n == 0) return;
  active().scale(dst, c, n, p);
}

}  // namespace grq::gf::kernels
