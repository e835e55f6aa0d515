#include "monoconj/conjecture.hpp"

#include <json.hpp>

#include "json_util.hpp"
#include "monoconj/zeta.hpp"

namespace monoconj {

std::vector<Rational> candidate_poles(const PlaneSemigroup& sg) {
  const int g = sg.g();
  std::vector<Rational> out{Rational(g)};
  auto nb = [&](int l) { return BigInt(sg.n[static_cast<std::size_t>(l)] * sg.beta(l)); };
  for (int k = 1; k <= g; ++k) {
    BigInt num = 0;
    for (int l = 0; l <= k; ++l) num += sg.beta(l);
    for (int l = 1; l < k; ++l) num -= nb(l);
    Rational v(num, nb(k));
    v += k - 1;
    for (int l = k + 1; l <= g; ++l) v += Rational(1, sg.n[static_cast<std::size_t>(l)]);
    v.canonicalize();

    // Same quantity grouped as beta_k + beta_0 + sum_{1 <= l < k} (beta_l - n_l beta_l).
    BigInt alt_num = sg.beta(k) + sg.beta(0);
    for (int l = 1; l < k; ++l) alt_num += sg.beta(l) - nb(l);
    Rational alt = Rational(alt_num, nb(k)) + Rational(k - 1);
    for (int l = g; l > k; --l) alt += Rational(1, sg.n[static_cast<std::size_t>(l)]);
    alt.canonicalize();
    ensure(alt == v, "pole value depends on grouping");
    out.push_back(v);
  }
  return out;
}

std::vector<FactorProduct> pk_factorization(const PlaneSemigroup& sg) {
  const int g = sg.g();
  constexpr auto kInc = ErrorKind::InternalInconsistency;
  std::vector<FactorProduct> out;
  FactorProduct product;
  for (int k = 1; k <= g; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const BigInt N = sg.N(k), M = sg.M(k), L = sg.L(k), L1 = sg.L(k + 1);
    FactorProduct p;
    p.mul_t_minus_one(N, exact_div(BigInt(sg.n[uk] * sg.beta(k)), N, kInc, "P_k"));
    p.mul_t_minus_one(L1, exact_div(sg.e[uk], L1, kInc, "P_k"));
    p.mul_t_minus_one(M, BigInt(-exact_div(sg.beta(k), M, kInc, "P_k")));
    p.mul_t_minus_one(L, BigInt(-exact_div(sg.e[uk - 1], L, kInc, "P_k")));
    ensure(to_cyclotomic(p).all_nonnegative(), "P_" + std::to_string(k) + " is not a polynomial");
    product *= p;
    out.push_back(p);
  }
  ensure(product == characteristic_polynomial(sg), "product of the P_k differs from Delta");
  return out;
}

std::string to_string(ProofCase c) {
  switch (c) {
    case ProofCase::Trivial: return "trivial";
    case ProofCase::I: return "i";
    case ProofCase::II: return "ii";
    case ProofCase::III: return "iii";
    case ProofCase::IV: return "iv";
  }
  return "";
}

ConjectureReport verify_conjecture(const PlaneSemigroup& sg) {
  ConjectureReport rep;
  rep.gens = sg.gens;
  const int g = sg.g();
  const auto poles = candidate_poles(sg);
  const auto pks = pk_factorization(sg);
  const FactorProduct delta = characteristic_polynomial(sg);
  const CyclotomicVector delta_cv = to_cyclotomic(delta);
  const auto zp = zeros_and_poles(zeta_closed_form(sg));

  PoleEntry top;
  top.k = 0;
  top.value = poles[0];
  top.is_integer = true;
  top.order = 1;
  top.delta_multiplicity = delta_cv.at(1);
  top.verdict = true;
  rep.poles.push_back(top);

  for (int k = 1; k <= g; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    PoleEntry pe;
    pe.k = k;
    pe.value = poles[uk];
    pe.N = sg.N(k);
    pe.M = sg.M(k);
    pe.L = sg.L(k);
    pe.pk = pks[uk - 1];
    pe.order = pe.value.get_den();
    pe.is_integer = pe.order == 1;
    const Rational nu = pe.value * Rational(pe.N);
    if (nu.get_den() != 1) rep.issues.push_back("nu_" + std::to_string(k) + " is not an integer");
    pe.nu = nu.get_num();
    pe.delta_multiplicity = delta_cv.at(pe.order);
    pe.pk_multiplicity = to_cyclotomic(pe.pk).at(pe.order);
    if (pe.is_integer) {
      pe.proof_case = ProofCase::Trivial;
      pe.verdict = true;
    } else {
      const bool inM = divides(pe.order, pe.M), inL = divides(pe.order, pe.L);
      pe.proof_case = inM ? (inL ? ProofCase::IV : ProofCase::II) : (inL ? ProofCase::III : ProofCase::I);
      pe.verdict = pe.pk_multiplicity >= 1 && pe.delta_multiplicity >= 1;

      // A nontrivial eigenvalue is a zero of Delta exactly when it is a pole of Z.
      auto it = zp.find(pe.order);
      const bool pole_of_z = it != zp.end() && it->second < 0;
      if (pole_of_z != (pe.delta_multiplicity >= 1)) {
        rep.issues.push_back("zeta and Delta disagree on the eigenvalue of order " + to_string(pe.order));
      }
      if (pe.proof_case == ProofCase::II) {
        const BigInt nb = sg.n[uk] * sg.beta(k);
        if (!(pe.N == pe.M && nb / pe.N > sg.beta(k) / pe.M)) {
          rep.issues.push_back("case (ii) side condition fails at k=" + std::to_string(k));
        }
      }
    }
    rep.poles.push_back(pe);
  }
  rep.pass = rep.issues.empty();
  for (const auto& pe : rep.poles) rep.pass = rep.pass && pe.verdict;
  return rep;
}

std::string report_json(const ConjectureReport& rep) {
  using nlohmann::json;
  json poles = json::array();
  for (const auto& pe : rep.poles) {
    json entry{{"k", pe.k},
               {"value", to_string(pe.value)},
               {"integer", pe.is_integer},
               {"order", detail::big(pe.order)},
               {"case", to_string(pe.proof_case)},
               {"delta_mult", detail::big(pe.delta_multiplicity)},
               {"verdict", pe.verdict}};
    if (pe.k >= 1) {
      entry["nu"] = detail::big(pe.nu);
      entry["N"] = detail::big(pe.N);
      entry["M"] = detail::big(pe.M);
      entry["L"] = detail::big(pe.L);
      entry["pk_mult"] = detail::big(pe.pk_multiplicity);
      entry["pk"] = detail::to_json(pe.pk);
    }
    poles.push_back(entry);
  }
  json doc{{"gens", detail::big_list(rep.gens)}, {"poles", poles}, {"pass", rep.pass}};
  if (!rep.issues.empty()) doc["issues"] = rep.issues;
  return doc.dump(2);
}

}  // namespace monoconj
