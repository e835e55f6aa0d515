#pragma once

#include <string>
#include <vector>

#include "monoconj/factor_product.hpp"
#include "monoconj/semigroup.hpp"

namespace monoconj {

// [g, nu_1/N_1, ..., nu_g/N_g], reduced.
std::vector<Rational> candidate_poles(const PlaneSemigroup& sg);

// P_1, ..., P_g with prod P_k = Delta, each a polynomial.
std::vector<FactorProduct> pk_factorization(const PlaneSemigroup& sg);

enum class ProofCase { Trivial, I, II, III, IV };
std::string to_string(ProofCase c);

struct PoleEntry {
  int k = 0;  // 0 for the pole g
  Rational value;
  BigInt nu;  // value * N_k (k >= 1)
  BigInt N;
  bool is_integer = false;
  BigInt order;  // denominator of value
  BigInt L, M;
  ProofCase proof_case = ProofCase::Trivial;
  BigInt delta_multiplicity;  // exponent of Phi_order in Delta
  BigInt pk_multiplicity;     // exponent of Phi_order in P_k
  FactorProduct pk;
  bool verdict = false;
};

struct ConjectureReport {
  std::vector<BigInt> gens;
  std::vector<PoleEntry> poles;
  // Violated side conditions; each one also fails the report.
  std::vector<std::string> issues;
  bool pass = false;
};

ConjectureReport verify_conjecture(const PlaneSemigroup& sg);
std::string report_json(const ConjectureReport& report);

}  // namespace monoconj
