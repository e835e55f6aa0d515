#include "monoconj/factor_product.hpp"

#include <json.hpp>

#include "json_util.hpp"

namespace monoconj {

FactorProduct FactorProduct::one_minus(const BigInt& a, const BigInt& e) {
  FactorProduct fp;
  fp.mul_one_minus(a, e);
  return fp;
}

FactorProduct FactorProduct::t_minus_one(const BigInt& a, const BigInt& e) {
  FactorProduct fp;
  fp.mul_t_minus_one(a, e);
  return fp;
}

BigInt FactorProduct::exponent(const BigInt& a) const {
  auto it = factors_.find(a);
  return it == factors_.end() ? BigInt(0) : it->second;
}

void FactorProduct::mul_one_minus(const BigInt& a, const BigInt& e) {
  if (a < 1) throw Error(ErrorKind::InvalidInput, "factor exponents of t must be positive");
  if (e == 0) return;
  BigInt& slot = factors_[a];
  slot += e;
  if (slot == 0) factors_.erase(a);
}

void FactorProduct::mul_t_minus_one(const BigInt& a, const BigInt& e) {
  mul_one_minus(a, e);
  if (mpz_odd_p(e.get_mpz_t())) negate();
}

FactorProduct& FactorProduct::operator*=(const FactorProduct& other) {
  for (const auto& [a, e] : other.factors_) mul_one_minus(a, e);
  sign_ *= other.sign_;
  return *this;
}

FactorProduct& FactorProduct::operator/=(const FactorProduct& other) {
  for (const auto& [a, e] : other.factors_) mul_one_minus(a, BigInt(-e));
  sign_ *= other.sign_;
  return *this;
}

FactorProduct FactorProduct::inverse() const { return FactorProduct() / *this; }

BigInt FactorProduct::degree() const {
  BigInt deg = 0;
  for (const auto& [a, e] : factors_) deg += a * e;
  return deg;
}

int FactorProduct::sign_t_minus_one() const {
  BigInt total = 0;
  for (const auto& [a, e] : factors_) total += e;
  return mpz_odd_p(total.get_mpz_t()) ? -sign_ : sign_;
}

BigInt CyclotomicVector::at(const BigInt& d) const {
  auto it = c.find(d);
  return it == c.end() ? BigInt(0) : it->second;
}

bool CyclotomicVector::all_nonnegative() const {
  for (const auto& [d, e] : c) {
    if (e < 0) return false;
  }
  return true;
}

BigInt CyclotomicVector::degree() const {
  BigInt deg = 0;
  for (const auto& [d, e] : c) deg += euler_phi(d) * e;
  return deg;
}

CyclotomicVector to_cyclotomic(const FactorProduct& fp) {
  CyclotomicVector cv;
  cv.sign = fp.sign_t_minus_one();
  for (const auto& [a, e] : fp.factors()) {
    for (const auto& d : divisors(a)) {
      BigInt& slot = cv.c[d];
      slot += e;
      if (slot == 0) cv.c.erase(d);
    }
  }
  return cv;
}

std::map<BigInt, BigInt> zeros_and_poles(const FactorProduct& fp) { return to_cyclotomic(fp).c; }

namespace {

std::string render(const FactorProduct& fp, bool t_minus_one) {
  auto factor = [&](const BigInt& a, const BigInt& e) {
    std::string power = a == 1 ? "t" : "t^" + to_string(a);
    std::string s = t_minus_one ? "(" + power + "-1)" : "(1-" + power + ")";
    if (e != 1) s += "^" + to_string(e);
    return s;
  };
  std::string num, den;
  for (const auto& [a, e] : fp.factors()) {
    std::string& side = e > 0 ? num : den;
    if (!side.empty()) side += " ";
    side += factor(a, abs(e));
  }
  const int sign = t_minus_one ? fp.sign_t_minus_one() : fp.sign();
  std::string out = sign < 0 ? "-" : "";
  out += num.empty() ? "1" : num;
  if (!den.empty()) out += " / " + den;
  return out;
}

}  // namespace

std::string render_one_minus(const FactorProduct& fp) { return render(fp, false); }
std::string render_t_minus_one(const FactorProduct& fp) { return render(fp, true); }

std::string factor_product_json(const FactorProduct& fp) { return detail::to_json(fp).dump(); }

FactorProduct parse_factor_product_json(const std::string& text) {
  try {
    return detail::factor_product_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed factor product JSON: ") + e.what());
  }
}

}  // namespace monoconj
