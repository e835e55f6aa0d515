#pragma once

#include <json.hpp>

#include "monoconj/arith.hpp"
#include "monoconj/factor_product.hpp"

namespace monoconj::detail {

// Integers that fit in 64 bits are emitted as numbers, larger ones as decimal strings.
inline nlohmann::json big(const BigInt& x) {
  if (fits_i64(x)) return nlohmann::json(static_cast<std::int64_t>(x.get_si()));
  return nlohmann::json(x.get_str());
}

inline nlohmann::json big_list(const std::vector<BigInt>& xs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back(big(x));
  return out;
}

inline BigInt big_from(const nlohmann::json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()), 10);
  throw Error(ErrorKind::InvalidInput, "expected an integer in JSON");
}

inline std::vector<BigInt> big_list_from(const nlohmann::json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(big_from(x));
  return out;
}

inline nlohmann::json to_json(const FactorProduct& fp) {
  nlohmann::json num = nlohmann::json::array(), den = nlohmann::json::array();
  for (const auto& [a, e] : fp.factors()) {
    if (e > 0) num.push_back({big(a), big(e)});
    else den.push_back({big(a), big(BigInt(-e))});
  }
  nlohmann::json out{{"num", num}, {"den", den}};
  if (fp.sign() < 0) out["sign"] = -1;
  return out;
}

inline FactorProduct factor_product_from_json(const nlohmann::json& j) {
  FactorProduct fp;
  for (const auto& f : j.at("num")) fp.mul_one_minus(big_from(f.at(0)), big_from(f.at(1)));
  for (const auto& f : j.at("den")) fp.mul_one_minus(big_from(f.at(0)), BigInt(-big_from(f.at(1))));
  if (j.contains("sign") && j.at("sign").get<int>() < 0) fp.negate();
  return fp;
}

}  // namespace monoconj::detail
