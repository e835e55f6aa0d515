#include "monoconj/oracle.hpp"

#include <numeric>
#include <optional>
#include <set>
#include <string>

namespace monoconj {

RootConstant random_constant(std::mt19937_64& rng, std::uint64_t max_order) {
  RootConstant c;
  c.order = std::uniform_int_distribution<std::uint64_t>(1, max_order)(rng);
  c.residue = std::uniform_int_distribution<std::uint64_t>(0, c.order - 1)(rng);
  return c;
}

namespace {

using u64 = std::uint64_t;

void over_budget(bool cond, const std::string& what) {
  if (cond) throw Error(ErrorKind::BudgetExceeded, what);
}

u64 small(const BigInt& x, const std::string& what) {
  if (x < 0 || !x.fits_ulong_p()) throw Error(ErrorKind::BudgetExceeded, what + " out of range");
  return x.get_ui();
}

// Points are tuples of exponents u_i with x_i = zeta_W^{u_i}, up to the common constant factors.
struct Torus {
  u64 W = 1;
  std::vector<u64> base;  // exponent of one root of c_i
  std::vector<u64> step;  // W / k_i
};

Torus make_torus(u64 d, const std::vector<u64>& k, const std::vector<RootConstant>& c) {
  Torus T;
  T.W = d;
  for (std::size_t i = 0; i < k.size(); ++i) T.W = std::lcm(T.W, c[i].order * k[i]);
  for (std::size_t i = 0; i < k.size(); ++i) {
    // k_i * base = residue * W / order (mod W)
    T.base.push_back(c[i].residue * (T.W / (c[i].order * k[i])));
    T.step.push_back(T.W / k[i]);
  }
  return T;
}

// Index of root exponent u among the k_i roots, verifying u is one of them.
u64 root_index(const Torus& T, std::size_t i, u64 u) {
  const u64 off = (u + T.W - T.base[i]) % T.W;
  ensure(off % T.step[i] == 0, "action does not preserve the solution set");
  return off / T.step[i];
}

struct MixedRadix {
  std::vector<u64> radix;
  u64 size() const {
    u64 s = 1;
    for (auto r : radix) s *= r;
    return s;
  }
  std::vector<u64> digits(u64 idx) const {
    std::vector<u64> out(radix.size());
    for (std::size_t i = 0; i < radix.size(); ++i) {
      out[i] = idx % radix[i];
      idx /= radix[i];
    }
    return out;
  }
  u64 index(const std::vector<u64>& ds) const {
    u64 idx = 0;
    for (std::size_t i = radix.size(); i-- > 0;) idx = idx * radix[i] + ds[i];
    return idx;
  }
};

}  // namespace

std::uint64_t enum_count_solutions(const CyclicQuotientType& t, const std::vector<std::uint64_t>& k,
                                   const std::vector<RootConstant>& c, CountMode mode,
                                   const EnumerationBudget& budget) {
  const u64 d = small(t.order(), "group order");
  std::vector<u64> a;
  for (const auto& x : t.weights()) a.push_back(small(x, "weight"));
  over_budget(d > budget.max_group_order, "group order over budget");
  over_budget(a.size() > budget.max_rank + 1, "rank over budget");
  if (k.size() != a.size() || c.size() != a.size()) throw Error(ErrorKind::IllFormed, "length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    over_budget(k[i] > budget.max_exponent, "exponent over budget");
    if (k[i] == 0 || (a[i] * k[i]) % d != 0) throw Error(ErrorKind::IllFormed, "system not defined on the quotient");
    if (c[i].order == 0 || c[i].residue >= c[i].order) throw Error(ErrorKind::IllFormed, "bad constant");
  }
  if (mode == CountMode::FixedTail && a.size() < 2) throw Error(ErrorKind::IllFormed, "tail needs two coordinates");

  const Torus T = make_torus(d, k, c);
  const MixedRadix R{k};
  const u64 total = R.size();
  // Action of the generator of mu_d on the root indices of each coordinate.
  std::vector<std::vector<u64>> gen(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (u64 j = 0; j < k[i]; ++j) {
      const u64 u = (T.base[i] + j * T.step[i]) % T.W;
      gen[i].push_back(root_index(T, i, (u + a[i] * (T.W / d)) % T.W));
    }
  }
  auto apply_gen = [&](u64 idx) {
    u64 out = 0, mult = 1;
    for (std::size_t i = 0; i < k.size(); ++i) {
      out += gen[i][idx % k[i]] * mult;
      idx /= k[i];
      mult *= k[i];
    }
    return out;
  };

  // Marks the orbit of idx in `mark`; returns false if it was already marked.
  auto sweep = [&](u64 idx, std::vector<bool>& mark) {
    if (mark[idx]) return false;
    for (u64 s = 0; s < d; ++s, idx = apply_gen(idx)) mark[idx] = true;
    return true;
  };

  if (mode == CountMode::Total) {
    std::vector<bool> seen(total, false);
    u64 classes = 0;
    for (u64 idx = 0; idx < total; ++idx) classes += sweep(idx, seen) ? 1 : 0;
    return classes;
  }

  // Classes whose tail lies in one fixed tail class; must not depend on which tail is fixed.
  const u64 tails = total / k[0];
  std::vector<bool> tail_seen(tails, false), seen(total, false);
  std::optional<u64> answer;
  for (u64 tail = 0; tail < tails; ++tail) {
    if (tail_seen[tail]) continue;
    std::vector<u64> members;
    u64 idx = tail * k[0];
    for (u64 s = 0; s < d; ++s, idx = apply_gen(idx)) {
      const u64 tt = idx / k[0];
      if (!tail_seen[tt]) {
        tail_seen[tt] = true;
        members.push_back(tt);
      }
    }
    u64 classes = 0;
    for (auto tt : members) {
      for (u64 x0 = 0; x0 < k[0]; ++x0) classes += sweep(tt * k[0] + x0, seen) ? 1 : 0;
    }
    if (answer) ensure(*answer == classes, "fixed-tail count depends on the chosen tail");
    answer = classes;
  }
  return *answer;
}

std::uint64_t enum_covering_fiber(std::uint64_t K, std::uint64_t k, const std::vector<std::uint64_t>& ks,
                                  const std::vector<RootConstant>& c, const EnumerationBudget& budget) {
  if (ks.size() < 3 || c.size() != ks.size()) throw Error(ErrorKind::IllFormed, "fiber needs r >= 2");
  if (k == 0 || K % k != 0) throw Error(ErrorKind::IllFormed, "k must divide K");
  for (auto ki : ks) {
    if (ki == 0 || K % ki != 0) throw Error(ErrorKind::IllFormed, "k_i must divide K");
  }
  const u64 D = K / k;
  std::vector<u64> w;
  for (auto ki : ks) w.push_back((K / ki) % D);
  over_budget(D > budget.max_group_order * budget.max_exponent, "group order over budget");
  over_budget(ks.size() > budget.max_rank + 2, "rank over budget");

  // Coordinates x_0, x_1 carry the alpha_i times powers of zeta_D; b_i are roots of c_i.
  u64 W = D;
  for (std::size_t i = 2; i < ks.size(); ++i) {
    over_budget(ks[i] > budget.max_exponent * budget.max_exponent, "exponent over budget");
    W = std::lcm(W, c[i].order * ks[i]);
  }
  std::vector<u64> base(ks.size(), 0), stepw(ks.size(), 0);
  for (std::size_t i = 2; i < ks.size(); ++i) {
    base[i] = c[i].residue * (W / (c[i].order * ks[i]));
    stepw[i] = W / ks[i];
  }
  using Point = std::vector<u64>;
  std::set<Point> points;
  std::vector<u64> radix;
  for (std::size_t i = 2; i < ks.size(); ++i) radix.push_back(ks[i]);
  const MixedRadix R{radix};
  for (u64 s = 0; s < D; ++s) {
    for (u64 idx = 0; idx < R.size(); ++idx) {
      const auto js = R.digits(idx);
      Point p(ks.size());
      p[0] = (s * w[0] % D) * (W / D) % W;
      p[1] = (s * w[1] % D) * (W / D) % W;
      for (std::size_t i = 2; i < ks.size(); ++i) p[i] = (base[i] + js[i - 2] * stepw[i]) % W;
      points.insert(p);
    }
  }
  std::set<Point> seen;
  u64 classes = 0;
  for (const auto& p : points) {
    if (seen.count(p)) continue;
    ++classes;
    for (u64 t = 0; t < D; ++t) {
      Point q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[i] = (p[i] + (t * w[i] % D) * (W / D)) % W;
      ensure(points.count(q) == 1, "group action leaves the fiber");
      seen.insert(q);
    }
  }
  return classes;
}

std::vector<BigInt> enum_digits(const BigInt& s, int i, const PlaneSemigroup& sg, const EnumerationBudget& budget) {
  if (i < 1 || i > sg.g()) throw Error(ErrorKind::InvalidInput, "digit index out of range");
  if (s < 0) throw Error(ErrorKind::NotRepresentable, "negative element");
  BigInt space = 1;
  for (int j = 1; j < i; ++j) space *= sg.n[static_cast<std::size_t>(j)];
  over_budget(space > BigInt(static_cast<unsigned long>(budget.max_search_space)), "digit search space over budget");

  const std::size_t len = static_cast<std::size_t>(i);
  std::vector<u64> digit(len, 0), radix(len, 1);
  for (std::size_t j = 1; j < len; ++j) radix[j] = sg.n[j].get_ui();
  std::vector<BigInt> hit;
  unsigned hits = 0;
  BigInt rem = s;  // s - sum_{j >= 1} digit_j beta_j
  while (true) {
    if (rem >= 0 && divides(sg.gens[0], rem)) {
      ++hits;
      hit.assign(len, BigInt(0));
      hit[0] = rem / sg.gens[0];
      for (std::size_t j = 1; j < len; ++j) hit[j] = static_cast<unsigned long>(digit[j]);
    }
    // Odometer step over digits 1..i-1.
    std::size_t j = 1;
    while (j < len && digit[j] + 1 == radix[j]) {
      rem += sg.gens[j] * static_cast<unsigned long>(digit[j]);
      digit[j] = 0;
      ++j;
    }
    if (j >= len) break;
    ++digit[j];
    rem -= sg.gens[j];
  }
  if (hits == 0) throw Error(ErrorKind::NotRepresentable, to_string(s) + " has no digit expansion");
  ensure(hits == 1, "digit expansion of " + to_string(s) + " is not unique");
  return hit;
}

namespace {

// p * q, skipping zero coefficients of q.
DensePoly multiply(const DensePoly& p, const DensePoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigInt> out(p.c.size() + q.c.size() - 1);
  for (std::size_t j = 0; j < q.c.size(); ++j) {
    if (q.c[j] == 0) continue;
    for (std::size_t i = 0; i < p.c.size(); ++i) mpz_addmul(out[i + j].get_mpz_t(), p.c[i].get_mpz_t(), q.c[j].get_mpz_t());
  }
  return DensePoly(std::move(out));
}

// Long division by a monic q; returns false (leaving p untouched) on a nonzero remainder.
bool divide_exact(DensePoly& p, const DensePoly& q) {
  ensure(!q.is_zero() && q.leading() == 1, "divisor must be monic");
  if (p.is_zero()) return true;
  const long dp = p.degree(), dq = q.degree();
  if (dp < dq) return false;
  std::vector<std::pair<std::size_t, BigInt>> nz;
  for (std::size_t j = 0; j + 1 < q.c.size(); ++j) {
    if (q.c[j] != 0) nz.emplace_back(j, q.c[j]);
  }
  std::vector<BigInt> rem = p.c;
  std::vector<BigInt> quot(static_cast<std::size_t>(dp - dq + 1));
  for (long i = dp; i >= dq; --i) {
    const BigInt coef = rem[static_cast<std::size_t>(i)];
    if (coef == 0) continue;
    const auto shift = static_cast<std::size_t>(i - dq);
    quot[shift] = coef;
    for (const auto& [j, qj] : nz) mpz_submul(rem[shift + j].get_mpz_t(), coef.get_mpz_t(), qj.get_mpz_t());
    rem[static_cast<std::size_t>(i)] = 0;
  }
  for (long i = 0; i < dq; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  }
  p = DensePoly(std::move(quot));
  return true;
}

DensePoly t_power_minus_one(u64 a) {
  std::vector<BigInt> c(a + 1);
  c[0] = -1;
  c[a] = 1;
  return DensePoly(std::move(c));
}

// Phi_d as prod_{e | d} (t^e - 1)^{mu(d/e)}.
DensePoly cyclotomic(u64 d) {
  DensePoly num = DensePoly::constant(1);
  std::vector<u64> den;
  for (u64 e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = mobius(BigInt(static_cast<unsigned long>(d / e)));
    if (mu == 1) num = multiply(num, t_power_minus_one(e));
    if (mu == -1) den.push_back(e);
  }
  for (auto e : den) ensure(divide_exact(num, t_power_minus_one(e)), "cyclotomic construction");
  return num;
}

}  // namespace

Expansion expand_and_verify(const FactorProduct& fp, const EnumerationBudget& budget) {
  BigInt num_degree = 0;
  for (const auto& [a, e] : fp.factors()) {
    if (e > 0) num_degree += a * e;
  }
  const BigInt cap = BigInt(static_cast<unsigned long>(budget.max_poly_degree));
  over_budget(fp.degree() > cap, "result degree over budget");
  over_budget(num_degree > 8 * cap, "numerator degree over budget");

  DensePoly p = DensePoly::constant(fp.sign_t_minus_one());
  std::set<u64> candidates;
  for (const auto& [a, e] : fp.factors()) {
    const u64 av = small(a, "factor");
    if (e > 0) {
      for (BigInt i = 0; i < e; ++i) p = multiply(p, t_power_minus_one(av));
    }
    for (const auto& dv : divisors(a)) candidates.insert(dv.get_ui());
  }
  for (const auto& [a, e] : fp.factors()) {
    if (e >= 0) continue;
    const DensePoly q = t_power_minus_one(a.get_ui());
    for (BigInt i = 0; i < -e; ++i) {
      if (!divide_exact(p, q)) throw Error(ErrorKind::NotPolynomial, "t^" + to_string(a) + "-1 leaves a remainder");
    }
  }

  Expansion out;
  out.poly = p;
  DensePoly rest = p;
  for (u64 d : candidates) {
    if (rest.degree() < 1) break;
    const DensePoly phi = cyclotomic(d);
    unsigned long mult = 0;
    while (rest.degree() >= phi.degree() && divide_exact(rest, phi)) ++mult;
    if (mult) out.multiplicity[BigInt(d)] = mult;
  }
  ensure(rest.degree() == 0 && abs(rest.c[0]) == 1, "cofactor after cyclotomic extraction is not a unit");
  return out;
}

}  // namespace monoconj
