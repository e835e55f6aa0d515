#pragma once

#include <cstdint>
#include <vector>

#include "monoconj/arith.hpp"

namespace monoconj {

// Minimal generators of a plane-branch semigroup with derived invariants.
struct PlaneSemigroup {
  std::vector<BigInt> gens;  // beta_0 < ... < beta_g
  std::vector<BigInt> e;     // e_i = gcd(beta_0..beta_i)
  std::vector<BigInt> n;     // n_0 = b_{10}, n_i = e_{i-1}/e_i
  // b[i] holds (b_{i0}, ..., b_{i,i-1}) for i = 1..g; b[0] is empty.
  std::vector<std::vector<BigInt>> b;

  int g() const { return static_cast<int>(gens.size()) - 1; }
  const BigInt& beta(int i) const { return gens.at(static_cast<std::size_t>(i)); }
  // n_0 n_1 ... n_g, which equals n_0 beta_0 = n_1 beta_1.
  BigInt total_n() const;
  // lcm(n_from, ..., n_g); 1 for an empty range.
  BigInt lcm_n(int from) const;
  // L_k = lcm(n_k, ..., n_g), with L_{g+1} = 1.
  BigInt L(int k) const { return lcm_n(k); }
  // N_k = lcm(beta_k/e_k, n_k, ..., n_g) for k = 1..g.
  BigInt N(int k) const;
  // M_k = lcm(beta_k/e_k, n_{k+1}, ..., n_g) for k >= 1; M_0 = lcm(n_1, ..., n_g).
  BigInt M(int k) const;

  friend bool operator==(const PlaneSemigroup&, const PlaneSemigroup&) = default;
};

PlaneSemigroup build_semigroup(const std::vector<BigInt>& gens);

// Digits (b_0, ..., b_{i-1}) with s = sum b_j beta_j, 0 <= b_j < n_j for j >= 1.
std::vector<BigInt> decompose(const PlaneSemigroup& sg, const BigInt& s, int i);

class BRecursionTable {
 public:
  BRecursionTable() = default;
  explicit BRecursionTable(int g);

  int g() const { return g_; }
  // Entry b_i^(k), 0 <= k < i <= g.
  const BigInt& at(int i, int k) const;
  BigInt& at(int i, int k);

 private:
  int g_ = 0;
  std::vector<std::vector<BigInt>> rows_;
};

BRecursionTable b_table(const PlaneSemigroup& sg);

PlaneSemigroup random_semigroup(std::uint64_t seed, int g, std::uint64_t max_size);

}  // namespace monoconj
