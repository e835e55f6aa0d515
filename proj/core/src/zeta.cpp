#include "monoconj/zeta.hpp"

#include <string>

namespace monoconj {

FactorProduct zeta_closed_form(const PlaneSemigroup& sg) {
  FactorProduct z;
  for (int k = 0; k <= sg.g(); ++k) {
    const BigInt M = sg.M(k);
    z.mul_one_minus(M, exact_div(sg.beta(k), M, ErrorKind::InternalInconsistency, "beta_k / M_k"));
  }
  for (int k = 1; k <= sg.g(); ++k) {
    const BigInt N = sg.N(k);
    const BigInt nb = sg.n[static_cast<std::size_t>(k)] * sg.beta(k);
    z.mul_one_minus(N, BigInt(-exact_div(nb, N, ErrorKind::InternalInconsistency, "n_k beta_k / N_k")));
  }
  return z;
}

FactorProduct characteristic_polynomial(const PlaneSemigroup& sg) {
  FactorProduct delta = FactorProduct::t_minus_one(1);
  for (int k = 1; k <= sg.g(); ++k) {
    const BigInt N = sg.N(k);
    const BigInt nb = sg.n[static_cast<std::size_t>(k)] * sg.beta(k);
    delta.mul_t_minus_one(N, exact_div(nb, N, ErrorKind::InternalInconsistency, "n_k beta_k / N_k"));
  }
  for (int k = 0; k <= sg.g(); ++k) {
    const BigInt M = sg.M(k);
    delta.mul_t_minus_one(M, BigInt(-exact_div(sg.beta(k), M, ErrorKind::InternalInconsistency, "beta_k / M_k")));
  }
  const CyclotomicVector cv = to_cyclotomic(delta);
  if (!cv.all_nonnegative()) throw Error(ErrorKind::NotPolynomial, "characteristic polynomial has a pole");
  ensure(cv.sign == 1, "characteristic polynomial must be monic");
  ensure(delta.degree() == milnor_number(sg), "degree of the characteristic polynomial must be mu");
  return delta;
}

BigInt milnor_number(const PlaneSemigroup& sg) {
  BigInt mu = 1 - sg.beta(0);
  for (int k = 1; k <= sg.g(); ++k) mu += (sg.n[static_cast<std::size_t>(k)] - 1) * sg.beta(k);
  ensure(mu > 0, "Milnor number must be positive");
  return mu;
}

void mul_binomial(DensePoly& p, std::size_t a) {
  if (p.is_zero()) return;
  const std::size_t old = p.c.size();
  p.c.resize(old + a);
  // p * t^a - p, computed from the top so unread entries are untouched.
  for (std::size_t i = old + a; i-- > 0;) {
    BigInt v = i >= a ? BigInt(p.c[i - a]) : BigInt(0);
    if (i < old) v -= p.c[i];
    p.c[i] = v;
  }
  p.trim();
}

bool binomial_divides(const DensePoly& p, std::size_t a) {
  std::vector<BigInt> sums(a);
  for (std::size_t i = 0; i < p.c.size(); ++i) sums[i % a] += p.c[i];
  for (const auto& s : sums) {
    if (s != 0) return false;
  }
  return true;
}

void div_binomial(DensePoly& p, std::size_t a) {
  if (p.is_zero()) return;
  const long D = p.degree();
  const long A = static_cast<long>(a);
  if (D < A) throw Error(ErrorKind::NotPolynomial, "binomial does not divide");
  std::vector<BigInt> q(static_cast<std::size_t>(D - A + 1));
  for (long i = D; i >= A; --i) {
    BigInt v = p.c[static_cast<std::size_t>(i)];
    if (i <= D - A) v += q[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - A)] = v;
  }
  for (long i = 0; i < A; ++i) {
    BigInt rem = p.c[static_cast<std::size_t>(i)];
    if (i <= D - A) rem += q[static_cast<std::size_t>(i)];
    if (rem != 0) throw Error(ErrorKind::NotPolynomial, "binomial does not divide");
  }
  p.c = std::move(q);
  p.trim();
}

DensePoly expand_dense(const FactorProduct& fp, std::uint64_t max_degree) {
  const BigInt deg = fp.degree();
  if (deg < 0) throw Error(ErrorKind::NotPolynomial, "negative degree");
  if (deg > BigInt(static_cast<unsigned long>(max_degree))) {
    throw Error(ErrorKind::BudgetExceeded, "dense expansion of degree " + to_string(deg) + " exceeds the cap");
  }
  std::vector<std::pair<std::size_t, unsigned long>> num, den;
  for (const auto& [a, e] : fp.factors()) {
    if (!a.fits_ulong_p() || !BigInt(abs(e)).fits_ulong_p()) {
      throw Error(ErrorKind::BudgetExceeded, "factor too large for dense expansion");
    }
    (e > 0 ? num : den).emplace_back(a.get_ui(), BigInt(abs(e)).get_ui());
  }
  DensePoly p = DensePoly::constant(fp.sign_t_minus_one());
  auto drain = [&] {
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto& [b, count] : den) {
        while (count > 0 && binomial_divides(p, b)) {
          div_binomial(p, b);
          --count;
          progress = true;
        }
      }
    }
  };
  for (auto& [a, count] : num) {
    for (; count > 0; --count) {
      mul_binomial(p, a);
      drain();
    }
  }
  drain();
  for (const auto& [b, count] : den) {
    if (count > 0) throw Error(ErrorKind::NotPolynomial, "t^" + std::to_string(b) + "-1 does not divide");
  }
  return p;
}

}  // namespace monoconj
