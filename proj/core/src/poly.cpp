#include "monoconj/poly.hpp"

namespace monoconj {

DensePoly::DensePoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }

DensePoly DensePoly::constant(const BigInt& v) { return DensePoly(std::vector<BigInt>{v}); }

BigInt DensePoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void DensePoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace monoconj
