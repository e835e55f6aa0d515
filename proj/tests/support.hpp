#pragma once

// Naive reference computations on machine integers, independent of the library code paths.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "monoconj/arith.hpp"

namespace ref {

using i64 = long;  // 64-bit on the supported platforms; GMP has no long long overloads
using Poly = std::vector<i64>;  // coefficients from degree 0

inline i64 gcd_list(const std::vector<i64>& xs) {
  i64 g = 0;
  for (auto x : xs) g = std::gcd(g, x);
  return g;
}

inline i64 lcm_list(const std::vector<i64>& xs) {
  i64 l = 1;
  for (auto x : xs) l = std::lcm(l, x);
  return l;
}

inline std::vector<monoconj::BigInt> big(const std::vector<i64>& xs) {
  std::vector<monoconj::BigInt> out;
  for (auto x : xs) out.emplace_back(static_cast<long>(x));
  return out;
}

inline std::vector<i64> small(const std::vector<monoconj::BigInt>& xs) {
  std::vector<i64> out;
  for (const auto& x : xs) out.push_back(x.get_si());
  return out;
}

struct Invariants {
  std::vector<i64> e, n;
};

// e_i by running gcds, n_i as quotients, n_0 by brute-force search for n_1 beta_1 = n_0 beta_0.
inline Invariants invariants(const std::vector<i64>& gens) {
  Invariants inv;
  i64 e = 0;
  for (auto b : gens) {
    e = std::gcd(e, b);
    inv.e.push_back(e);
  }
  inv.n.push_back(0);
  for (std::size_t i = 1; i < gens.size(); ++i) inv.n.push_back(inv.e[i - 1] / inv.e[i]);
  for (i64 n0 = 1;; ++n0) {
    if (n0 * gens[0] == inv.n[1] * gens[1]) {
      inv.n[0] = n0;
      break;
    }
    if (n0 * gens[0] > inv.n[1] * gens[1]) throw std::logic_error("no n0");
  }
  return inv;
}

// All digit vectors (b_0, ..., b_{i-1}) with s = sum b_j beta_j, b_j < n_j for j >= 1, by nested search.
inline std::vector<std::vector<i64>> digit_hits(const std::vector<i64>& gens, const std::vector<i64>& n, i64 s, int i) {
  std::vector<std::vector<i64>> hits;
  std::vector<i64> cur(static_cast<std::size_t>(i), 0);
  auto rec = [&](auto&& self, int j, i64 rest) -> void {
    if (j == 0) {
      for (i64 b0 = 0; b0 * gens[0] <= rest; ++b0) {
        if (b0 * gens[0] == rest) {
          cur[0] = b0;
          hits.push_back(cur);
        }
      }
      return;
    }
    for (i64 b = 0; b < n[static_cast<std::size_t>(j)] && b * gens[static_cast<std::size_t>(j)] <= rest; ++b) {
      cur[static_cast<std::size_t>(j)] = b;
      self(self, j - 1, rest - b * gens[static_cast<std::size_t>(j)]);
    }
    cur[static_cast<std::size_t>(j)] = 0;
  };
  rec(rec, i - 1, s);
  return hits;
}

struct Mults {
  std::vector<i64> N, M, L;  // N[0] unused; L has g+2 entries
};

inline Mults mults(const std::vector<i64>& gens) {
  const auto inv = invariants(gens);
  const std::size_t g = gens.size() - 1;
  Mults m;
  m.N.assign(g + 1, 0);
  m.M.assign(g + 1, 0);
  m.L.assign(g + 2, 1);
  for (std::size_t k = 1; k <= g + 1; ++k) {
    i64 l = 1;
    for (std::size_t j = k; j <= g; ++j) l = std::lcm(l, inv.n[j]);
    m.L[k] = l;
  }
  m.M[0] = m.L[1];
  for (std::size_t k = 1; k <= g; ++k) {
    const i64 q = gens[k] / inv.e[k];
    m.N[k] = std::lcm(q, m.L[k]);
    m.M[k] = std::lcm(q, m.L[k + 1]);
  }
  return m;
}

// Exponent map a -> e of prod (1-t^a)^e for the monodromy zeta function, from the definitions.
inline std::map<i64, i64> zeta_exponents(const std::vector<i64>& gens) {
  const auto inv = invariants(gens);
  const auto m = mults(gens);
  std::map<i64, i64> out;
  for (std::size_t k = 0; k < gens.size(); ++k) out[m.M[k]] += gens[k] / m.M[k];
  for (std::size_t k = 1; k < gens.size(); ++k) out[m.N[k]] -= inv.n[k] * gens[k] / m.N[k];
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(out);
}

// Quotient of exact division by a monic polynomial; throws on a remainder.
inline Poly div_exact(const Poly& a, const Poly& b) {
  Poly r = trim(a);
  const long nb = static_cast<long>(b.size());
  if (static_cast<long>(r.size()) < nb) throw std::domain_error("remainder");
  Poly q(r.size() - b.size() + 1, 0);
  for (long s = static_cast<long>(q.size()) - 1; s >= 0; --s) {
    const i64 c = r[static_cast<std::size_t>(s + nb - 1)];
    q[static_cast<std::size_t>(s)] = c;
    for (long j = 0; j < nb; ++j) r[static_cast<std::size_t>(s + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  for (auto x : r)
    if (x != 0) throw std::domain_error("remainder");
  return trim(q);
}

inline Poly tm1(i64 a) {
  Poly p(static_cast<std::size_t>(a) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(a)] = 1;
  return p;
}

// Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e.
inline Poly cyclotomic(i64 d) {
  Poly p = tm1(d);
  for (i64 e = 1; e < d; ++e)
    if (d % e == 0) p = div_exact(p, cyclotomic(e));
  return p;
}

// Multiplicity of Phi_d in p (p nonzero).
inline int multiplicity(Poly p, i64 d) {
  const Poly phi = cyclotomic(d);
  int m = 0;
  while (true) {
    try {
      p = div_exact(p, phi);
      ++m;
    } catch (const std::domain_error&) {
      return m;
    }
  }
}

struct Frac {
  i64 num, den;  // reduced, den > 0
};

inline Frac reduce(i64 num, i64 den) {
  const i64 g = std::gcd(num, den);
  return {num / g, den / g};
}

// Pole candidates nu_k/N_k for k = 1..g (index 0 holds g itself), reduced.
inline std::vector<Frac> poles(const std::vector<i64>& gens) {
  const auto inv = invariants(gens);
  const std::size_t g = gens.size() - 1;
  std::vector<Frac> out{{static_cast<i64>(g), 1}};
  for (std::size_t k = 1; k <= g; ++k) {
    // Running sum as a fraction num/den.
    i64 num = 0;
    for (std::size_t l = 0; l <= k; ++l) num += gens[l];
    for (std::size_t l = 1; l < k; ++l) num -= inv.n[l] * gens[l];
    i64 den = inv.n[k] * gens[k];
    Frac f = reduce(num, den);
    f = reduce(f.num + static_cast<i64>(k - 1) * f.den, f.den);
    for (std::size_t l = k + 1; l <= g; ++l) f = reduce(f.num * inv.n[l] + f.den, f.den * inv.n[l]);
    out.push_back(f);
  }
  return out;
}

// Orbits of mu_d acting by weights a on {x : x_i^{k_i} = 1}, by explicit orbit marking.
// A solution is a tuple of exponents j_i mod k_i; the generator shifts j_i by a_i k_i / d.
inline i64 orbit_count(i64 d, const std::vector<i64>& a, const std::vector<i64>& k) {
  std::vector<i64> shift;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] * k[i]) % d != 0) throw std::logic_error("action does not preserve the solutions");
    shift.push_back(((a[i] * k[i] / d) % k[i] + k[i]) % k[i]);
  }
  i64 total = 1;
  for (auto x : k) total *= x;
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  auto encode = [&](const std::vector<i64>& j) {
    i64 code = 0;
    for (std::size_t i = 0; i < j.size(); ++i) code = code * k[i] + j[i];
    return code;
  };
  i64 orbits = 0;
  std::vector<i64> j(k.size(), 0);
  for (i64 code = 0; code < total; ++code) {
    i64 rest = code;
    for (std::size_t i = k.size(); i-- > 0;) {
      j[i] = rest % k[i];
      rest /= k[i];
    }
    if (seen[static_cast<std::size_t>(code)]) continue;
    ++orbits;
    std::vector<i64> cur = j;
    while (!seen[static_cast<std::size_t>(encode(cur))]) {
      seen[static_cast<std::size_t>(encode(cur))] = true;
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = (cur[i] + shift[i]) % k[i];
    }
  }
  return orbits;
}

}  // namespace ref
