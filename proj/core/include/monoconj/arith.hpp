#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monoconj/error.hpp"

namespace monoconj {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt gcd_of(const std::vector<BigInt>& xs);
BigInt lcm_of(const std::vector<BigInt>& xs);
BigInt product_of(const std::vector<BigInt>& xs);

// a / b, throwing `kind` unless b | a.
BigInt exact_div(const BigInt& a, const BigInt& b, ErrorKind kind, const std::string& what);
bool divides(const BigInt& d, const BigInt& a);

// Least non-negative residue.
BigInt mod_floor(const BigInt& a, const BigInt& m);
BigInt mod_inverse(const BigInt& a, const BigInt& m);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);
BigInt parse_bigint(std::string_view text);
std::vector<BigInt> parse_gens(std::string_view csv);
std::string join(const std::vector<BigInt>& xs, std::string_view sep = ",");

bool fits_i64(const BigInt& x);
std::int64_t to_i64(const BigInt& x);

// Prime factorization (trial division, Miller-Rabin, Pollard rho).
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);
// Sorted ascending.
std::vector<BigInt> divisors(const BigInt& n);
BigInt euler_phi(const BigInt& n);
int mobius(const BigInt& n);

}  // namespace monoconj
