#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "monoconj/factor_product.hpp"
#include "monoconj/poly.hpp"
#include "monoconj/qspace.hpp"
#include "monoconj/semigroup.hpp"

namespace monoconj {

struct EnumerationBudget {
  std::uint64_t max_group_order = 10;
  std::uint64_t max_exponent = 6;
  std::uint64_t max_rank = 3;  // largest index r of coordinates x_0..x_r
  std::uint64_t max_poly_degree = 5000;
  std::uint64_t max_search_space = 10'000'000;
};

// The constant exp(2 pi i residue / order).
struct RootConstant {
  std::uint64_t order = 1;
  std::uint64_t residue = 0;
};
RootConstant random_constant(std::mt19937_64& rng, std::uint64_t max_order = 12);

enum class CountMode { Total, FixedTail };

// Orbits of the solutions of x_i^{k_i} = c_i under the explicit mu_d action.
std::uint64_t enum_count_solutions(const CyclicQuotientType& t, const std::vector<std::uint64_t>& k,
                                   const std::vector<RootConstant>& c, CountMode mode,
                                   const EnumerationBudget& budget = {});

// Points of X(K/k; K/k_0, ..., K/k_r) over one generic point of X(K/k; K/k_0, K/k_1),
// with b_i^{k_i} = c_i for i >= 2.
std::uint64_t enum_covering_fiber(std::uint64_t K, std::uint64_t k, const std::vector<std::uint64_t>& ks,
                                  const std::vector<RootConstant>& c, const EnumerationBudget& budget = {});

// Exhaustive digit search for s in <beta_0, ..., beta_{i-1}>.
std::vector<BigInt> enum_digits(const BigInt& s, int i, const PlaneSemigroup& sg, const EnumerationBudget& budget = {});

struct Expansion {
  DensePoly poly;
  std::map<BigInt, BigInt> multiplicity;  // d -> exponent of Phi_d, nonzero entries only
};
Expansion expand_and_verify(const FactorProduct& fp, const EnumerationBudget& budget = {});

}  // namespace monoconj
