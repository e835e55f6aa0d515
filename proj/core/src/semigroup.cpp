#include "monoconj/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace monoconj {

BigInt PlaneSemigroup::total_n() const { return product_of(n); }

BigInt PlaneSemigroup::lcm_n(int from) const {
  BigInt l = 1;
  for (int j = std::max(from, 0); j <= g(); ++j) l = lcm(l, n[static_cast<std::size_t>(j)]);
  return l;
}

BigInt PlaneSemigroup::N(int k) const {
  if (k < 1 || k > g()) throw Error(ErrorKind::InvalidInput, "N_k needs 1 <= k <= g");
  const auto uk = static_cast<std::size_t>(k);
  return lcm(BigInt(gens[uk] / e[uk]), lcm_n(k));
}

BigInt PlaneSemigroup::M(int k) const {
  if (k < 0 || k > g()) throw Error(ErrorKind::InvalidInput, "M_k needs 0 <= k <= g");
  if (k == 0) return lcm_n(1);
  const auto uk = static_cast<std::size_t>(k);
  return lcm(BigInt(gens[uk] / e[uk]), lcm_n(k + 1));
}

namespace {

std::string tuple_str(const std::vector<BigInt>& gens) { return "(" + join(gens) + ")"; }

// Top-down modular digit extraction; needs gens, e and n_1..n_{i-1}.
std::vector<BigInt> digits(const std::vector<BigInt>& gens, const std::vector<BigInt>& e,
                           const std::vector<BigInt>& n, const BigInt& s_in, int i) {
  if (s_in < 0) throw Error(ErrorKind::NotRepresentable, "negative element " + to_string(s_in));
  std::vector<BigInt> out(static_cast<std::size_t>(i));
  BigInt s = s_in;
  for (int j = i - 1; j >= 1; --j) {
    const auto uj = static_cast<std::size_t>(j);
    if (!divides(e[uj], s)) {
      throw Error(ErrorKind::NotRepresentable,
                  to_string(s_in) + " is not divisible by e_" + std::to_string(j));
    }
    const BigInt unit = gens[uj] / e[uj];
    const BigInt inv = mod_inverse(unit, n[uj]);
    const BigInt bj = mod_floor(BigInt(s / e[uj] * inv), n[uj]);
    out[uj] = bj;
    s -= bj * gens[uj];
    if (s < 0) throw Error(ErrorKind::NotRepresentable, to_string(s_in) + " leaves a negative remainder");
  }
  if (!divides(gens[0], s)) {
    throw Error(ErrorKind::NotRepresentable, to_string(s_in) + " leaves a remainder off beta_0");
  }
  out[0] = s / gens[0];
  return out;
}

}  // namespace

PlaneSemigroup build_semigroup(const std::vector<BigInt>& gens) {
  if (gens.size() < 3) throw Error(ErrorKind::InvalidInput, "at least three generators are required");
  for (const auto& x : gens) {
    if (x <= 0) throw Error(ErrorKind::InvalidInput, "generators must be positive");
  }
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (gens[i] <= gens[i - 1]) {
      throw Error(ErrorKind::NotPlane, "generators are not strictly increasing: " + tuple_str(gens));
    }
  }
  if (gcd_of(gens) != 1) throw Error(ErrorKind::NotCoprime, "gcd of " + tuple_str(gens) + " is not 1");

  PlaneSemigroup sg;
  sg.gens = gens;
  const int g = sg.g();
  const auto ug = static_cast<std::size_t>(g);
  sg.e.resize(ug + 1);
  sg.n.resize(ug + 1);
  sg.b.resize(ug + 1);
  sg.e[0] = gens[0];
  for (std::size_t i = 1; i <= ug; ++i) {
    sg.e[i] = gcd(sg.e[i - 1], gens[i]);
    sg.n[i] = sg.e[i - 1] / sg.e[i];
    if (sg.n[i] == 1) {
      throw Error(ErrorKind::NotPlane, "n_" + std::to_string(i) + " = 1 for " + tuple_str(gens));
    }
  }
  for (std::size_t i = 1; i <= ug; ++i) {
    const BigInt s = sg.n[i] * gens[i];
    try {
      sg.b[i] = digits(gens, sg.e, sg.n, s, static_cast<int>(i));
    } catch (const Error& err) {
      throw Error(ErrorKind::NotPlane, "n_" + std::to_string(i) + " beta_" + std::to_string(i) +
                                           " is not representable: " + err.detail());
    }
    if (i < ug && s >= gens[i + 1]) {
      throw Error(ErrorKind::NotPlane, "n_" + std::to_string(i) + " beta_" + std::to_string(i) + " = " +
                                           to_string(s) + " is not below beta_" + std::to_string(i + 1));
    }
  }
  sg.n[0] = sg.b[1][0];

  ensure(sg.e[ug] == 1, "e_g must be 1");
  ensure(gcd(sg.n[0], sg.n[1]) == 1, "gcd(n_0, n_1) must be 1");
  for (std::size_t i = 0; i <= ug; ++i) {
    BigInt tail = 1;
    for (std::size_t j = i + 1; j <= ug; ++j) {
      tail *= sg.n[j];
      ensure(divides(sg.n[j], gens[i]), "n_j must divide beta_i for j > i");
    }
    ensure(tail == sg.e[i], "e_i must equal n_{i+1} ... n_g");
    if (i >= 1) {
      ensure(gcd(BigInt(gens[i] / sg.e[i]), sg.n[i]) == 1, "gcd(beta_i/e_i, n_i) must be 1");
      BigInt eval = 0;
      for (std::size_t j = 0; j < i; ++j) {
        eval += sg.b[i][j] * gens[j];
        if (j >= 1) ensure(sg.b[i][j] >= 0 && sg.b[i][j] < sg.n[j], "digit out of range");
      }
      ensure(eval == sg.n[i] * gens[i], "digit row does not evaluate to n_i beta_i");
    }
  }
  ensure(sg.n[0] * gens[0] == sg.total_n() && sg.n[1] * gens[1] == sg.total_n(),
         "n_0 beta_0 = n_1 beta_1 = n_0 ... n_g must hold");
  return sg;
}

std::vector<BigInt> decompose(const PlaneSemigroup& sg, const BigInt& s, int i) {
  if (i < 1 || i > sg.g()) throw Error(ErrorKind::InvalidInput, "decompose index out of range");
  return digits(sg.gens, sg.e, sg.n, s, i);
}

BRecursionTable::BRecursionTable(int g) : g_(g), rows_(static_cast<std::size_t>(g) + 1) {
  for (int i = 0; i <= g; ++i) rows_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i));
}

const BigInt& BRecursionTable::at(int i, int k) const {
  if (k < 0 || k >= i || i > g_) throw Error(ErrorKind::InvalidInput, "b-table index out of range");
  return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
}

BigInt& BRecursionTable::at(int i, int k) {
  if (k < 0 || k >= i || i > g_) throw Error(ErrorKind::InvalidInput, "b-table index out of range");
  return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
}

BRecursionTable b_table(const PlaneSemigroup& sg) {
  const int g = sg.g();
  BRecursionTable t(g);
  const BigInt n_all = sg.total_n();
  auto nb = [&](int j) { return BigInt(sg.n[static_cast<std::size_t>(j)] * sg.beta(j)); };
  auto bij = [&](int i, int j) -> const BigInt& {
    return sg.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };

  for (int i = 1; i <= g; ++i) t.at(i, 0) = bij(i, 0) * n_all / sg.n[0];
  for (int k = 1; k < g; ++k) {
    for (int i = k + 1; i <= g; ++i) {
      Rational factor = -1;
      for (int j = k; j < i; ++j) factor += Rational(bij(i, j), sg.n[static_cast<std::size_t>(j)]);
      Rational value = Rational(t.at(i, k - 1)) + factor * Rational(t.at(k, k - 1));
      value.canonicalize();
      ensure(value.get_den() == 1, "b-recursion produced a non-integer");
      t.at(i, k) = value.get_num();

      Rational closed = Rational(nb(i) - nb(k));
      for (int j = k + 1; j < i; ++j) {
        closed -= Rational(bij(i, j), sg.n[static_cast<std::size_t>(j)]) * Rational(nb(j) - nb(k));
      }
      closed.canonicalize();
      ensure(closed == value, "b-recursion disagrees with its closed form at (" + std::to_string(i) + "," +
                                  std::to_string(k) + ")");
      ensure(t.at(i, k) > 1, "b-table entry with k >= 1 must exceed 1");
    }
  }
  ensure(t.at(1, 0) == n_all, "b_1^(0) must equal n_0 ... n_g");
  return t;
}

PlaneSemigroup random_semigroup(std::uint64_t seed, int g, std::uint64_t max_size) {
  if (g < 2) throw Error(ErrorKind::InvalidInput, "random_semigroup needs g >= 2");
  if (max_size > (std::uint64_t{1} << 62)) throw Error(ErrorKind::InvalidInput, "max_size too large");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  // Largest n_i that keeps (n_1 ... n_g)^2 roughly within max_size.
  std::uint64_t cap = 2;
  {
    BigInt root;
    mpz_root(root.get_mpz_t(), BigInt(std::max<std::uint64_t>(max_size, 1)).get_mpz_t(),
             static_cast<unsigned long>(2 * g));
    if (root > 2) cap = root.get_ui();
  }
  const auto ug = static_cast<std::size_t>(g);
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::uint64_t> n(ug + 1), e(ug + 1);
    for (std::size_t i = 1; i <= ug; ++i) n[i] = uniform(2, cap);
    e[ug] = 1;
    bool ok = true;
    for (std::size_t k = ug; k-- > 0;) {
      if (e[k + 1] > max_size / n[k + 1]) {
        ok = false;
        break;
      }
      e[k] = e[k + 1] * n[k + 1];
    }
    if (!ok || e[0] > max_size) continue;

    // Headroom: beta_k * n_k * ... * n_{g-1} must stay below max_size.
    auto upper = [&](std::size_t k) {
      std::uint64_t u = max_size;
      for (std::size_t l = k; l < ug; ++l) u /= n[l];
      return u;
    };
    // Uniform coprime draw from (lo, hi], by rejection.
    auto draw_coprime = [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t modulus) -> std::uint64_t {
      if (hi <= lo) return 0;
      for (int tries = 0; tries < 64; ++tries) {
        const std::uint64_t c = uniform(lo + 1, hi);
        if (std::gcd(c, modulus) == 1) return c;
      }
      return 0;
    };

    std::vector<std::uint64_t> beta(ug + 1);
    beta[0] = e[0];
    const std::uint64_t n0 = draw_coprime(n[1], upper(1) / e[1], n[1]);
    if (n0 == 0) continue;
    beta[1] = n0 * e[1];
    for (std::size_t k = 2; k <= ug && ok; ++k) {
      const std::uint64_t lo = n[k - 1] * beta[k - 1] / e[k];
      const std::uint64_t c = draw_coprime(lo, upper(k) / e[k], n[k]);
      if (c == 0) ok = false;
      else beta[k] = c * e[k];
    }
    if (!ok) continue;

    std::vector<BigInt> gens;
    for (auto v : beta) gens.emplace_back(static_cast<unsigned long>(v));
    try {
      return build_semigroup(gens);
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorKind::BudgetExceeded, "no plane semigroup with g = " + std::to_string(g) +
                                             " and generators <= " + std::to_string(max_size) + " found");
}

}  // namespace monoconj
