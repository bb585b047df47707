#pragma once

#include <compare>
#include <string>

namespace grq {

// Element of X(T) = Z^2.
struct Weight {
  int a = 0;
  int b = 0;

  int degree() const { return a + b; }
  bool is_polynomial() const { return a >= 0 && b >= 0; }
  Weight swapped() const { return {b, a}; }

  Weight operator+(Weight o) const { return {a + o.a, b + o.b}; }
  Weight operator-(Weight o) const { return {a - o.a, b - o.b}; }
  Weight operator-() const { return {-a, -b}; }
  Weight operator*(int k) const { return {a * k, b * k}; }
  Weight& operator+=(Weight o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  auto operator<=>(const Weight&) const = default;

  std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

inline constexpr Weight kAlpha{1, -1};

}  // namespace grq
