#include "monoconj/qspace.hpp"

#include <string>

namespace monoconj {

CyclicQuotientType::CyclicQuotientType(std::vector<BigInt> d, std::vector<std::vector<BigInt>> A)
    : d_(std::move(d)), A_(std::move(A)) {
  if (d_.empty() || d_.size() != A_.size()) throw Error(ErrorKind::IllFormed, "type needs one row per group order");
  const std::size_t n = A_.front().size();
  if (n == 0) throw Error(ErrorKind::IllFormed, "type needs at least one coordinate");
  for (std::size_t j = 0; j < d_.size(); ++j) {
    if (d_[j] < 1) throw Error(ErrorKind::IllFormed, "group orders must be positive");
    if (A_[j].size() != n) throw Error(ErrorKind::IllFormed, "ragged action matrix");
    for (auto& a : A_[j]) a = mod_floor(a, d_[j]);
  }
}

CyclicQuotientType CyclicQuotientType::cyclic(const BigInt& d, std::vector<BigInt> a) {
  return CyclicQuotientType({d}, {std::move(a)});
}

const BigInt& CyclicQuotientType::order() const {
  if (!is_cyclic()) throw Error(ErrorKind::IllFormed, "one-row type expected");
  return d_.front();
}

const std::vector<BigInt>& CyclicQuotientType::weights() const {
  if (!is_cyclic()) throw Error(ErrorKind::IllFormed, "one-row type expected");
  return A_.front();
}

namespace {

BigInt gcd_except(const BigInt& d, const std::vector<BigInt>& a, std::size_t skip) {
  BigInt g = d;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j != skip) g = gcd(g, a[j]);
  }
  return g;
}

}  // namespace

CyclicQuotientType normalize_cyclic(const CyclicQuotientType& t) {
  BigInt d = t.order();
  std::vector<BigInt> a = t.weights();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const BigInt k = gcd_except(d, a, i);
      if (k > 1) {
        d /= k;
        for (std::size_t j = 0; j < a.size(); ++j) {
          if (j != i) a[j] /= k;
        }
        for (auto& x : a) x = mod_floor(x, d);
        changed = true;
      }
    }
  }
  return CyclicQuotientType::cyclic(d, a);
}

bool is_normalized(const CyclicQuotientType& t) {
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (stabilizer_order(t, {i}) != 1) return false;
  }
  return true;
}

BigInt stabilizer_order(const CyclicQuotientType& t, const std::set<std::size_t>& zero_set) {
  BigInt g = t.order();
  const auto& a = t.weights();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!zero_set.count(i)) g = gcd(g, a[i]);
  }
  return g;
}

BigInt l_factor(const CyclicQuotientType& t, std::size_t i) {
  if (i >= t.dim()) throw Error(ErrorKind::InvalidInput, "coordinate index out of range");
  BigInt l = 1;
  for (std::size_t j = 0; j < t.rows(); ++j) {
    l = lcm(l, BigInt(t.d()[j] / gcd(t.d()[j], t.A()[j][i])));
  }
  return l;
}

BigInt divisor_multiplicity(const BigInt& m, const CyclicQuotientType& t, std::size_t i) {
  return exact_div(m, l_factor(t, i), ErrorKind::NotDivisible, "divisor multiplicity");
}

namespace {

void check_well_defined(const BigInt& d, const BigInt& a, const BigInt& k) {
  if (k < 1) throw Error(ErrorKind::IllFormed, "exponents must be positive");
  if (!divides(d, BigInt(a * k))) {
    throw Error(ErrorKind::IllFormed,
                "x^" + to_string(k) + " is not invariant under weight " + to_string(a) + " mod " + to_string(d));
  }
}

}  // namespace

BigInt count_solutions_total(const CyclicQuotientType& t, const std::vector<BigInt>& k) {
  const BigInt& d = t.order();
  const auto& a = t.weights();
  if (k.size() != a.size()) throw Error(ErrorKind::IllFormed, "one exponent per coordinate expected");
  for (std::size_t i = 0; i < a.size(); ++i) check_well_defined(d, a[i], k[i]);
  std::vector<BigInt> all = a;
  all.push_back(d);
  return exact_div(BigInt(product_of(k) * gcd_of(all)), d, ErrorKind::InternalInconsistency, "solution count");
}

BigInt count_solutions_fixed_tail(const CyclicQuotientType& t, const BigInt& k0) {
  const BigInt& d = t.order();
  const auto& a = t.weights();
  if (a.size() < 2) throw Error(ErrorKind::IllFormed, "a tail needs at least two coordinates");
  check_well_defined(d, a[0], k0);
  std::vector<BigInt> all = a;
  all.push_back(d);
  const BigInt tail = gcd_except(d, a, 0);
  return exact_div(BigInt(k0 * gcd_of(all)), tail, ErrorKind::InternalInconsistency, "fixed-tail count");
}

namespace {

BigInt gcd_range(const std::vector<BigInt>& v, std::size_t from) {
  BigInt g = 0;
  for (std::size_t i = from; i < v.size(); ++i) g = gcd(g, v[i]);
  return g;
}

BigInt product_range(const std::vector<BigInt>& v, std::size_t from, std::size_t skip = SIZE_MAX) {
  BigInt p = 1;
  for (std::size_t i = from; i < v.size(); ++i) {
    if (i != skip) p *= v[i];
  }
  return p;
}

// Q = a_i prod_{j >= from, j != i} p_j, which the commutation relation makes independent of i.
BigInt common_q(const WeightedCurveSpec& s, std::size_t from) {
  const BigInt q = s.a[from] * product_range(s.p, from, from);
  for (std::size_t i = from + 1; i < s.p.size(); ++i) {
    ensure(s.a[i] * product_range(s.p, from, i) == q, "Q depends on the chosen index");
  }
  return q;
}

}  // namespace

void validate(const WeightedCurveSpec& s) {
  const std::size_t len = s.p.size();
  if (len < 3 || s.a.size() != len || s.m.size() != len) {
    throw Error(ErrorKind::IllFormed, "curve spec needs r >= 2 and matching vector lengths");
  }
  if (s.d < 1) throw Error(ErrorKind::IllFormed, "group order must be positive");
  for (std::size_t i = 0; i < len; ++i) {
    if (s.p[i] < 1) throw Error(ErrorKind::IllFormed, "weights must be positive");
    check_well_defined(s.d, s.a[i], s.m[i]);
    if (s.p[i] * s.m[i] != s.p[0] * s.m[0]) throw Error(ErrorKind::IllFormed, "system is not weighted homogeneous");
  }
  const std::size_t from = s.commutation == Commutation::FromOne ? 1 : 2;
  for (std::size_t i = from; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      if (s.a[i] * s.p[j] != s.a[j] * s.p[i]) {
        throw Error(ErrorKind::HypothesisViolated,
                    "a_i p_j != a_j p_i for i=" + std::to_string(i) + ", j=" + std::to_string(j));
      }
    }
  }
}

BigInt curve_component_count(const WeightedCurveSpec& s) {
  validate(s);
  std::vector<BigInt> tail(s.m.begin() + 2, s.m.end());
  const BigInt count = exact_div(product_of(tail), lcm_of(tail), ErrorKind::InternalInconsistency, "components");
  const BigInt gp = gcd_range(s.p, 2);
  for (std::size_t j = 2; j < s.p.size(); ++j) {
    const BigInt chart = exact_div(BigInt(product_range(s.m, 2, j) * gp), s.p[j], ErrorKind::InternalInconsistency,
                                   "chart component count");
    ensure(chart == count, "component count depends on the chart");
  }
  return count;
}

AxisIntersections curve_axis_intersections(const WeightedCurveSpec& s, int axis) {
  if (axis != 0 && axis != 1) throw Error(ErrorKind::InvalidInput, "axis must be 0 or 1");
  const BigInt components = curve_component_count(s);
  // The m_1 formula counts points on {x_0 = 0}, the m_0 formula points on {x_1 = 0}.
  const std::size_t other = axis == 0 ? 1 : 0;
  std::vector<BigInt> pg{s.p[other]};
  pg.insert(pg.end(), s.p.begin() + 2, s.p.end());
  const BigInt g_other = gcd_of(pg);
  const BigInt g2 = gcd_range(s.p, 2);

  const BigInt P = product_range(s.p, 2);
  const BigInt Q = common_q(s, 2);
  const BigInt den = s.d * P * g2;
  const BigInt num = s.m[other] * gcd(BigInt(s.d * P * g_other), BigInt((s.a[other] * P - s.p[other] * Q) * g2));
  const BigInt per = exact_div(num, den, ErrorKind::InternalInconsistency, "axis intersections");

  for (std::size_t j = 2; j < s.p.size(); ++j) {
    const BigInt cden = s.d * s.p[j] * g2;
    const BigInt cnum = s.m[other] * gcd(BigInt(s.d * s.p[j] * g_other),
                                         BigInt((s.a[other] * s.p[j] - s.a[j] * s.p[other]) * g2));
    ensure(exact_div(cnum, cden, ErrorKind::InternalInconsistency, "chart axis intersections") == per,
           "axis intersections depend on the chart");
  }
  return {per, per * components};
}

BigInt plane_curve_open_euler(const std::vector<BigInt>& p, const BigInt& d, const std::vector<BigInt>& a,
                              const BigInt& K) {
  if (p.size() != 3 || a.size() != 3) throw Error(ErrorKind::IllFormed, "plane curve needs three weights");
  if (d < 1 || K < 1) throw Error(ErrorKind::IllFormed, "order and degree must be positive");
  for (std::size_t i = 0; i < 3; ++i) {
    if (p[i] < 1 || !divides(p[i], K)) throw Error(ErrorKind::IllFormed, "weights must divide K");
    check_well_defined(d, a[i], BigInt(K / p[i]));
  }
  const BigInt m0 = p[1] * a[2] - p[2] * a[1];
  const BigInt m1 = p[0] * a[2] - p[2] * a[0];
  const BigInt m2 = p[0] * a[1] - p[1] * a[0];
  const BigInt g = gcd_of({BigInt(d * gcd_of(p)), m0, m1, m2});
  return -exact_div(BigInt(K * K * g), BigInt(d * p[0] * p[1] * p[2]), ErrorKind::IllFormed, "plane Euler characteristic");
}

BigInt curve_open_euler(const WeightedCurveSpec& s) {
  if (s.commutation != Commutation::FromOne) {
    throw Error(ErrorKind::HypothesisViolated, "Euler characteristic needs commutation on indices 1..r");
  }
  validate(s);
  const BigInt P = product_range(s.p, 1);
  const BigInt Q = common_q(s, 1);
  const BigInt g_all = gcd_range(s.p, 0);
  const BigInt g1 = gcd_range(s.p, 1);
  const BigInt mprod = product_range(s.m, 1);
  const BigInt chi = -exact_div(BigInt(mprod * gcd(BigInt(s.d * P * g_all), BigInt((s.p[0] * Q - s.a[0] * P) * g1))),
                                BigInt(s.d * s.p[0] * P), ErrorKind::IllFormed, "open Euler characteristic");

  const BigInt chart = -exact_div(
      BigInt(mprod * gcd(BigInt(s.d * s.p[2] * g_all), BigInt((s.a[2] * s.p[0] - s.a[0] * s.p[2]) * g1))),
      BigInt(s.d * s.p[0] * s.p[2]), ErrorKind::IllFormed, "chart Euler characteristic");
  ensure(chart == chi, "Euler characteristic depends on the chart");
  if (s.r() == 2) {
    ensure(plane_curve_open_euler(s.p, s.d, s.a, BigInt(s.p[0] * s.m[0])) == chi,
           "plane-curve reduction disagrees");
  }
  return chi;
}

BigInt covering_degree(const BigInt& K, const BigInt& k, const std::vector<BigInt>& ks, const BigInt& N) {
  if (ks.size() < 3) throw Error(ErrorKind::IllFormed, "covering degree needs r >= 2");
  if (K < 1 || k < 1 || !divides(k, K)) throw Error(ErrorKind::IllFormed, "k must divide K");
  std::vector<BigInt> q;
  for (const auto& ki : ks) {
    if (ki < 1 || !divides(ki, K)) throw Error(ErrorKind::IllFormed, "every k_i must divide K");
    q.push_back(K / ki);
  }
  const BigInt Kk = K / k;
  std::vector<BigInt> all{Kk};
  all.insert(all.end(), q.begin(), q.end());
  std::vector<BigInt> tail{Kk};
  tail.insert(tail.end(), q.begin() + 2, q.end());
  const BigInt den = k * gcd_of({Kk, q[0], q[1]}) * gcd_of(tail);
  return exact_div(BigInt(K * N * gcd_of(all)), den, ErrorKind::IllFormed, "covering degree");
}

}  // namespace monoconj
