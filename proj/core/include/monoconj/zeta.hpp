#pragma once

#include <cstdint>

#include "monoconj/factor_product.hpp"
#include "monoconj/poly.hpp"
#include "monoconj/semigroup.hpp"

namespace monoconj {

// prod_{k=0..g} (1-t^{M_k})^{beta_k/M_k} / prod_{k=1..g} (1-t^{N_k})^{n_k beta_k/N_k}
FactorProduct zeta_closed_form(const PlaneSemigroup& sg);

// (t-1) prod (t^{N_k}-1)^{n_k beta_k/N_k} / prod (t^{M_k}-1)^{beta_k/M_k}
FactorProduct characteristic_polynomial(const PlaneSemigroup& sg);

BigInt milnor_number(const PlaneSemigroup& sg);

inline constexpr std::uint64_t kDefaultDenseCap = 1'000'000;

// Dense coefficients of a factor product that is a polynomial.  Numerator binomials are
// multiplied in while pending denominator binomials are divided out as soon as they divide.
DensePoly expand_dense(const FactorProduct& fp, std::uint64_t max_degree = kDefaultDenseCap);

// Multiplies by t^a - 1.
void mul_binomial(DensePoly& p, std::size_t a);
// True when t^a - 1 divides p; O(deg p).
bool binomial_divides(const DensePoly& p, std::size_t a);
// Divides by t^a - 1, which must divide p.
void div_binomial(DensePoly& p, std::size_t a);

}  // namespace monoconj
