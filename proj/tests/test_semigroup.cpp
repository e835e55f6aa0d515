#include <gtest/gtest.h>

#include <random>

#include "monoconj/semigroup.hpp"
#include "support.hpp"

using namespace monoconj;
using ref::big;
using ref::small;

namespace {

ErrorKind kind_of(const std::vector<ref::i64>& gens) {
  try {
    build_semigroup(big(gens));
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(Arith, FactorizeMatchesTrialDivision) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    ref::i64 x = static_cast<ref::i64>(rng() % 2'000'000) + 1;
    std::vector<std::pair<BigInt, unsigned>> expected;
    ref::i64 y = x;
    for (ref::i64 p = 2; p * p <= y; ++p) {
      unsigned e = 0;
      while (y % p == 0) {
        y /= p;
        ++e;
      }
      if (e) expected.emplace_back(BigInt(static_cast<long>(p)), e);
    }
    if (y > 1) expected.emplace_back(BigInt(static_cast<long>(y)), 1u);
    EXPECT_EQ(factorize(BigInt(static_cast<long>(x))), expected) << x;
  }
}

TEST(Arith, FactorizeLargeSemiprime) {
  const BigInt p("1000000007"), q("998244353");
  const auto f = factorize(p * q);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].first, q);
  EXPECT_EQ(f[1].first, p);
}

TEST(Arith, PhiMobiusDivisorsAgreeWithCounting) {
  for (ref::i64 n = 1; n <= 300; ++n) {
    ref::i64 phi = 0;
    std::vector<BigInt> divs;
    for (ref::i64 k = 1; k <= n; ++k) {
      if (std::gcd(k, n) == 1) ++phi;
      if (n % k == 0) divs.emplace_back(static_cast<long>(k));
    }
    EXPECT_EQ(euler_phi(BigInt(static_cast<long>(n))), phi);
    EXPECT_EQ(divisors(BigInt(static_cast<long>(n))), divs);
    // mobius from squarefree test
    int mu = 1;
    ref::i64 y = n;
    for (ref::i64 p = 2; p <= y; ++p) {
      if (y % p) continue;
      y /= p;
      if (y % p == 0) {
        mu = 0;
        break;
      }
      mu = -mu;
    }
    EXPECT_EQ(mobius(BigInt(static_cast<long>(n))), mu) << n;
  }
}

TEST(Arith, ParseAndFormat) {
  EXPECT_EQ(parse_gens("4, 6,13"), big({4, 6, 13}));
  EXPECT_THROW(parse_gens("4,x"), Error);
  EXPECT_THROW(parse_gens(""), Error);
  EXPECT_EQ(to_string(Rational(8, 6)), "4/3");
  EXPECT_EQ(to_string(Rational(2)), "2");
}

TEST(Semigroup, FirstExampleInvariants) {
  const auto sg = build_semigroup(big({4, 6, 13}));
  EXPECT_EQ(small(sg.e), (std::vector<ref::i64>{4, 2, 1}));
  EXPECT_EQ(small(sg.n), (std::vector<ref::i64>{3, 2, 2}));
  EXPECT_EQ(small(sg.b[1]), (std::vector<ref::i64>{3}));
  EXPECT_EQ(small(sg.b[2]), (std::vector<ref::i64>{5, 1}));
}

TEST(Semigroup, SecondExampleRows) {
  const auto sg = build_semigroup(big({8, 12, 26, 53}));
  EXPECT_EQ(small(sg.e), (std::vector<ref::i64>{8, 4, 2, 1}));
  EXPECT_EQ(small(sg.n), (std::vector<ref::i64>{3, 2, 2, 2}));
  EXPECT_EQ(small(sg.b[2]), (std::vector<ref::i64>{5, 1}));
  EXPECT_EQ(small(sg.b[3]), (std::vector<ref::i64>{10, 0, 1}));
}

TEST(Semigroup, RejectsInvalidInput) {
  EXPECT_EQ(kind_of({2, 3, 5}), ErrorKind::NotPlane);
  EXPECT_EQ(kind_of({4, 6}), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of({0, 6, 13}), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of({6, 4, 13}), ErrorKind::NotPlane);
  EXPECT_EQ(kind_of({4, 6, 14}), ErrorKind::NotCoprime);
  EXPECT_EQ(kind_of({4, 6, 11}), ErrorKind::NotPlane);   // 11 < n_1 beta_1 = 12
  EXPECT_EQ(kind_of({4, 8, 13, 27}), ErrorKind::NotPlane);  // n_2 = 1
}

TEST(Semigroup, DecomposeExamples) {
  const auto sg = build_semigroup(big({4, 6, 13}));
  EXPECT_EQ(small(decompose(sg, 12, 1)), (std::vector<ref::i64>{3}));
  EXPECT_EQ(small(decompose(sg, 26, 2)), (std::vector<ref::i64>{5, 1}));
  EXPECT_THROW(decompose(sg, 7, 2), Error);
}

TEST(Semigroup, BTableClosedForms) {
  const auto t1 = b_table(build_semigroup(big({4, 6, 13})));
  EXPECT_EQ(t1.at(2, 1), 14);
  const auto t2 = b_table(build_semigroup(big({8, 12, 26, 53})));
  EXPECT_EQ(t2.at(3, 2), 54);
}

TEST(Semigroup, RandomIsDeterministic) {
  EXPECT_EQ(random_semigroup(42, 3, 100000), random_semigroup(42, 3, 100000));
  EXPECT_THROW(random_semigroup(1, 5, 10), Error);
}

// Every generated semigroup: gcd chain, quotients, digits and strictness recomputed naively.
TEST(SemigroupProperty, InvariantsRecomputeNaively) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 400; ++it) {
    const int g = 2 + static_cast<int>(rng() % 3);
    const auto sg = random_semigroup(rng(), g, 20000);
    const auto gens = small(sg.gens);
    const auto inv = ref::invariants(gens);
    ASSERT_EQ(small(sg.e), inv.e);
    ASSERT_EQ(small(sg.n), inv.n);
    ASSERT_EQ(inv.e.back(), 1);
    for (int i = 1; i <= g; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      ASSERT_GE(inv.n[ui], 2);
      if (i < g) {
        ASSERT_LT(inv.n[ui] * gens[ui], gens[ui + 1]);
      }
      const auto hits = ref::digit_hits(gens, inv.n, inv.n[ui] * gens[ui], i);
      ASSERT_EQ(hits.size(), 1u) << "digits of n_i beta_i must be unique";
      ASSERT_EQ(small(sg.b[ui]), hits.front());
    }
    ASSERT_EQ(std::gcd(inv.n[0], inv.n[1]), 1);
  }
}

// Semigroup values below n_i beta_i decompose uniquely and decompose() finds the naive digits.
TEST(SemigroupProperty, DecomposeMatchesExhaustiveSearch) {
  const auto sg = build_semigroup(big({8, 12, 26, 53}));
  const auto gens = small(sg.gens);
  const auto inv = ref::invariants(gens);
  for (int i = 1; i <= 3; ++i) {
    for (ref::i64 s = 0; s <= 150; ++s) {
      if (s % inv.e[static_cast<std::size_t>(i - 1)] != 0) continue;
      const auto hits = ref::digit_hits(gens, inv.n, s, i);
      if (hits.empty()) {
        EXPECT_THROW(decompose(sg, s, i), Error) << s;
      } else {
        ASSERT_EQ(hits.size(), 1u);
        EXPECT_EQ(small(decompose(sg, s, i)), hits.front()) << s << " " << i;
      }
    }
  }
}

// Rebuilding from the generators of a valid semigroup is the identity and all b-table entries exceed 1.
TEST(SemigroupProperty, RebuildAndPositiveRecursion) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    const auto sg = random_semigroup(rng(), 2 + static_cast<int>(rng() % 4), 1'000'000);
    ASSERT_EQ(build_semigroup(sg.gens), sg);
    const auto t = b_table(sg);
    for (int i = 1; i <= sg.g(); ++i)
      for (int k = 0; k < i; ++k) ASSERT_GT(t.at(i, k), 1);
  }
}
