#pragma once

#include <set>
#include <vector>

#include "monoconj/arith.hpp"

namespace monoconj {

// Quotient of affine space by mu_{d_1} x ... x mu_{d_r}; row j of A gives the weights of mu_{d_j}.
class CyclicQuotientType {
 public:
  CyclicQuotientType(std::vector<BigInt> d, std::vector<std::vector<BigInt>> A);
  // One-row type X(d; a_0, ..., a_n).
  static CyclicQuotientType cyclic(const BigInt& d, std::vector<BigInt> a);

  const std::vector<BigInt>& d() const { return d_; }
  const std::vector<std::vector<BigInt>>& A() const { return A_; }
  std::size_t rows() const { return d_.size(); }
  std::size_t dim() const { return A_.front().size(); }
  bool is_cyclic() const { return d_.size() == 1; }
  // Order and weights of a one-row type.
  const BigInt& order() const;
  const std::vector<BigInt>& weights() const;

  friend bool operator==(const CyclicQuotientType&, const CyclicQuotientType&) = default;

 private:
  std::vector<BigInt> d_;
  std::vector<std::vector<BigInt>> A_;
};

CyclicQuotientType normalize_cyclic(const CyclicQuotientType& t);
bool is_normalized(const CyclicQuotientType& t);
BigInt stabilizer_order(const CyclicQuotientType& t, const std::set<std::size_t>& zero_set);
BigInt l_factor(const CyclicQuotientType& t, std::size_t i);
BigInt divisor_multiplicity(const BigInt& m, const CyclicQuotientType& t, std::size_t i);

// Solutions of x_i^{k_i} = c_i (c_i != 0) counted in X(d; a).
BigInt count_solutions_total(const CyclicQuotientType& t, const std::vector<BigInt>& k);
// Solutions [(x_0, b_1, ..., b_r)] with the class of the tail fixed.
BigInt count_solutions_fixed_tail(const CyclicQuotientType& t, const BigInt& k0);

// Index range on which a_i p_j = a_j p_i is declared.
enum class Commutation { FromTwo, FromOne };

// Chained system x_0^{m_0} + x_1^{m_1} + x_2^{m_2} = 0, x_i^{m_i} + x_{i+1}^{m_{i+1}} = 0 (i >= 2)
// in P^r_w / mu_d.  The action is kept unreduced so the commutation relation is exact.
struct WeightedCurveSpec {
  std::vector<BigInt> p;  // weights p_0..p_r
  BigInt d;
  std::vector<BigInt> a;  // raw action weights a_0..a_r
  std::vector<BigInt> m;  // exponents m_0..m_r
  Commutation commutation = Commutation::FromTwo;

  int r() const { return static_cast<int>(p.size()) - 1; }
};

// Checks every structural invariant and the declared commutation range.
void validate(const WeightedCurveSpec& spec);

BigInt curve_component_count(const WeightedCurveSpec& spec);

struct AxisIntersections {
  BigInt per_component;
  BigInt total;
};
AxisIntersections curve_axis_intersections(const WeightedCurveSpec& spec, int axis);

BigInt plane_curve_open_euler(const std::vector<BigInt>& p, const BigInt& d, const std::vector<BigInt>& a,
                              const BigInt& K);
// Euler characteristic of the curve minus all coordinate hyperplanes.
BigInt curve_open_euler(const WeightedCurveSpec& spec);

BigInt covering_degree(const BigInt& K, const BigInt& k, const std::vector<BigInt>& ks, const BigInt& N);

}  // namespace monoconj
