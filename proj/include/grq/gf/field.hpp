#pragma once

#include <array>
#include <cstdint>

namespace grq::gf {

// p <= 13 so p*p fits a byte; every residue lives in [0, p).
using Residue = std::uint8_t;

inline constexpr unsigned kMaxPrime = 13;

class PrimeField {
 public:
  PrimeField() : PrimeField(3) {}
  explicit PrimeField(unsigned p);

  unsigned p() const { return p_; }

  Residue add(Residue x, Residue y) const {
    unsigned s = unsigned(x) + y;
    return Residue(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue x, Residue y) const { return Residue(x >= y ? x - y : x + p_ - y); }
  Residue neg(Residue x) const { return Residue(x ? p_ - x : 0); }
  Residue mul(Residue x, Residue y) const { return Residue((unsigned(x) * y) % p_); }
  Residue inv(Residue x) const;  // throws on 0
  Residue div(Residue x, Residue y) const { return mul(x, inv(y)); }
  Residue pow(Residue x, unsigned e) const;

  // any integer, including negatives
  Residue reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return Residue(r < 0 ? r + p_ : r);
  }
  // symmetric representative in (-p/2, p/2]
  int lift(Residue x) const { return x > p_ / 2 ? int(x) - int(p_) : int(x); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  unsigned p_;
  std::array<Residue, 16> inv_{};
};

bool is_supported_prime(unsigned p);

}  // namespace grq::gf
