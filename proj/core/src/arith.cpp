#include "monoconj/arith.hpp"

#include <algorithm>
#include <map>

namespace monoconj {

BigInt gcd_of(const std::vector<BigInt>& xs) {
  BigInt g = 0;
  for (const auto& x : xs) g = gcd(g, x);
  return g;
}

BigInt lcm_of(const std::vector<BigInt>& xs) {
  BigInt l = 1;
  for (const auto& x : xs) l = lcm(l, x);
  return l;
}

BigInt product_of(const std::vector<BigInt>& xs) {
  BigInt p = 1;
  for (const auto& x : xs) p *= x;
  return p;
}

bool divides(const BigInt& d, const BigInt& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

BigInt exact_div(const BigInt& a, const BigInt& b, ErrorKind kind, const std::string& what) {
  if (b == 0 || !divides(b, a)) {
    throw Error(kind, what + ": " + to_string(b) + " does not divide " + to_string(a));
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  if (m == 1) return 0;
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorKind::InternalInconsistency,
                "no inverse of " + to_string(a) + " modulo " + to_string(m));
  }
  return inv;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw Error(ErrorKind::InvalidInput, "empty integer");
  s = s.substr(first, last - first + 1);
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorKind::InvalidInput, "not a decimal integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

std::vector<BigInt> parse_gens(std::string_view csv) {
  std::vector<BigInt> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto next = csv.find(',', pos);
    if (next == std::string_view::npos) next = csv.size();
    out.push_back(parse_bigint(csv.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

std::string join(const std::vector<BigInt>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i].get_str();
  }
  return out;
}

bool fits_i64(const BigInt& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

std::int64_t to_i64(const BigInt& x) {
  if (!fits_i64(x)) throw Error(ErrorKind::InvalidInput, "integer out of 64-bit range: " + to_string(x));
  return x.get_si();
}

namespace {

bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant; n odd composite.
BigInt pollard_rho(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const BigInt& v) {
      BigInt w = v * v + c;
      return BigInt(w % n);
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          BigInt diff = abs(x - y);
          q = (q * diff) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(BigInt(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_rho(n);
  factor_into(d, out);
  factor_into(BigInt(n / d), out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n_in) {
  if (n_in <= 0) throw Error(ErrorKind::InvalidInput, "factorize expects a positive integer");
  std::map<BigInt, unsigned> acc;
  BigInt n = n_in;
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++acc[BigInt(p)];
      n /= p;
    }
  }
  if (n > 1) {
    if (n < BigInt(10000) * 10000) {
      ++acc[n];
    } else {
      factor_into(n, acc);
    }
  }
  return {acc.begin(), acc.end()};
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> ds{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = ds.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

BigInt euler_phi(const BigInt& n) {
  BigInt phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int mobius(const BigInt& n) {
  int mu = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

}  // namespace monoconj
