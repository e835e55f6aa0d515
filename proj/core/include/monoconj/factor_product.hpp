#pragma once

#include <map>
#include <string>

#include "monoconj/arith.hpp"

namespace monoconj {

// sign * prod (1 - t^a)^{e_a}; zero exponents are never stored.
class FactorProduct {
 public:
  FactorProduct() = default;
  static FactorProduct one_minus(const BigInt& a, const BigInt& e = 1);
  static FactorProduct t_minus_one(const BigInt& a, const BigInt& e = 1);

  const std::map<BigInt, BigInt>& factors() const { return factors_; }
  int sign() const { return sign_; }
  // Exponent of (1 - t^a); 0 if absent.
  BigInt exponent(const BigInt& a) const;

  // Multiplies by (1 - t^a)^e.
  void mul_one_minus(const BigInt& a, const BigInt& e);
  // Multiplies by (t^a - 1)^e.
  void mul_t_minus_one(const BigInt& a, const BigInt& e);
  void negate() { sign_ = -sign_; }

  FactorProduct& operator*=(const FactorProduct& other);
  FactorProduct& operator/=(const FactorProduct& other);
  friend FactorProduct operator*(FactorProduct lhs, const FactorProduct& rhs) { return lhs *= rhs; }
  friend FactorProduct operator/(FactorProduct lhs, const FactorProduct& rhs) { return lhs /= rhs; }
  friend bool operator==(const FactorProduct&, const FactorProduct&) = default;

  FactorProduct inverse() const;
  // Degree as a rational function: sum a * e_a.
  BigInt degree() const;
  // Sign once rewritten as sign' * prod (t^a - 1)^{e_a}.
  int sign_t_minus_one() const;
  bool is_unit() const { return factors_.empty(); }

 private:
  std::map<BigInt, BigInt> factors_;
  int sign_ = 1;
};

// sign * prod Phi_d^{c_d}.
struct CyclotomicVector {
  std::map<BigInt, BigInt> c;
  int sign = 1;

  BigInt at(const BigInt& d) const;
  bool all_nonnegative() const;
  // sum c_d phi(d).
  BigInt degree() const;
  friend bool operator==(const CyclotomicVector&, const CyclotomicVector&) = default;
};

CyclotomicVector to_cyclotomic(const FactorProduct& fp);
// Nonzero cyclotomic exponents: positive entries are zeros, negative entries poles.
std::map<BigInt, BigInt> zeros_and_poles(const FactorProduct& fp);

// "(1-t^2)^2 (1-t^13) / (1-t^6) (1-t^26)"
std::string render_one_minus(const FactorProduct& fp);
// "(t-1) (t^6-1) (t^26-1) / (t^2-1)^2 (t^13-1)"
std::string render_t_minus_one(const FactorProduct& fp);
// {"num": [[a,e],...], "den": [[a,e],...]} (plus "sign" when negative).
std::string factor_product_json(const FactorProduct& fp);
FactorProduct parse_factor_product_json(const std::string& text);

}  // namespace monoconj
