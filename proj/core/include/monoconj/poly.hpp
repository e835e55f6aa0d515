#pragma once

#include <vector>

#include "monoconj/arith.hpp"

namespace monoconj {

// Dense integer polynomial, coefficients from degree 0 upward, no trailing zeros.
struct DensePoly {
  std::vector<BigInt> c;

  DensePoly() = default;
  explicit DensePoly(std::vector<BigInt> coeffs);
  static DensePoly constant(const BigInt& v);

  bool is_zero() const { return c.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c.size()) - 1; }
  const BigInt& leading() const { return c.back(); }
  BigInt at(std::size_t i) const { return i < c.size() ? c[i] : BigInt(0); }
  BigInt eval(const BigInt& x) const;
  void trim();

  friend bool operator==(const DensePoly&, const DensePoly&) = default;
};

}  // namespace monoconj
