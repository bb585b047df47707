#include "grq/gf/field.hpp"

#include <string>

#include "grq/error.hpp"

namespace grq::gf {

bool is_supported_prime(unsigned p) {
  switch (p) {
    case 3: case 5: case 7: case 11: case 13:
      return true;
    default:
      return false;
  }
}

PrimeField::PrimeField(unsigned p) : p_(p) {
  if (!is_supported_prime(p))
    throw UsageError("p must be an odd prime <= " + std::to_string(kMaxPrime) + ", got " +
                     std::to_string(p));
  for (unsigned x = 1; x < p; ++x)
    for (unsigned y = 1; y < p; ++y)
      if (x * y % p == 1) inv_[x] = Residue(y);
}

Residue PrimeField::inv(Residue x) const {
  if (x == 0 || x >= p_) throw DimensionError("inverse of zero in F_" + std::to_string(p_));
  return inv_[x];
}

Residue PrimeField::pow(Residue x, unsigned e) const {
  Residue r = 1;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

}  // namespace grq::gf
