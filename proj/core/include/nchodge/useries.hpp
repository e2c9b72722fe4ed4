// Truncated power series in the formal variable u of cohomological degree 2,
// with coefficients in an exact scalar field: elements of K[u]/(u^{N+1}).
#pragma once

#include "nchodge/scalar.hpp"

#include <vector>

namespace nchodge {

// Default truncation order N (coefficients u^0..u^N are tracked). The CLI
// and tests may override it; NCHODGE_UORDER overrides the CLI default.
inline constexpr int kDefaultUOrder = 6;

struct USeries {
  FieldTag tag;
  int order = kDefaultUOrder; // N
  std::vector<Scalar> c;      // size order+1, c[k] multiplies u^k

  static USeries zero(const FieldTag& tag, int order);
  static USeries of_scalar(const Scalar& s, int order);

  bool is_zero() const;
  const Scalar& coeff(int k) const { return c.at(k); }

  USeries operator+(const USeries& other) const;
  USeries operator-(const USeries& other) const;
  USeries operator*(const USeries& other) const; // truncated product
  USeries operator-() const;
  bool operator==(const USeries& other) const;
  bool operator!=(const USeries& other) const { return !(*this == other); }

  USeries scale(const Scalar& s) const;
  USeries shift(int k) const; // multiply by u^k
  USeries star() const;       // u -> -u
  USeries derive() const;     // d/dt on each coefficient; Q(t) only

  std::string str() const;
};

} // namespace nchodge
