#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "monoconj/resolution.hpp"
#include "monoconj/zeta.hpp"
#include "support.hpp"

using namespace monoconj;
using ref::big;

namespace {

std::size_t count_substr(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++c;
  return c;
}

// Union-find over exceptional components and the strict transform: acyclic and connected.
bool exceptional_tree(const ResolutionGraph& G) {
  std::map<std::string, std::string> parent;
  for (const auto& n : G.nodes)
    if (n.kind != NodeKind::Boundary) parent[n.id()] = n.id();
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t merges = 0;
  for (const auto& e : G.edges) {
    if (!parent.count(e.u) || !parent.count(e.v)) continue;
    const auto a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
    ++merges;
  }
  return merges + 1 == parent.size();
}

std::size_t degree_to(const ResolutionGraph& G, const std::string& id, const std::string& prefix) {
  std::size_t c = 0;
  for (const auto& e : G.edges) {
    if (e.u == id && e.v.rfind(prefix, 0) == 0) ++c;
    if (e.v == id && e.u.rfind(prefix, 0) == 0) ++c;
  }
  return c;
}

}  // namespace

TEST(Resolution, FirstExample) {
  const auto sg = build_semigroup(big({4, 6, 13}));
  const auto G = build_resolution(sg);
  ASSERT_EQ(G.g(), 2);
  EXPECT_EQ(G.level(1).r, 1);
  EXPECT_EQ(G.level(2).r, 1);
  EXPECT_EQ(G.level(1).N, 6);
  EXPECT_EQ(G.level(2).N, 26);
  EXPECT_EQ(G.stratum(StratumKind::Q0, 0).multiplicity.value(), 2);
  EXPECT_EQ(G.level(1).M, 6);
  EXPECT_EQ(G.level(2).M, 13);
  EXPECT_EQ(G.stratum(StratumKind::Q0, 0).count, 2);
  EXPECT_EQ(G.stratum(StratumKind::Qk, 1).count, 1);
  EXPECT_EQ(G.level(1).chi_open, -2);
  EXPECT_EQ(ref::small(G.level(1).weights), (std::vector<ref::i64>{4, 6, 6}));
  EXPECT_EQ(ref::small(G.level(2).weights), (std::vector<ref::i64>{1, 7}));
  // Path H0,H1 - E1 - E2 - {H2, strict transform}.
  EXPECT_EQ(G.edges.size(), 5u);
  EXPECT_TRUE(exceptional_tree(G));
}

TEST(Resolution, SecondExample) {
  const auto G = build_resolution(build_semigroup(big({8, 12, 26, 53})));
  EXPECT_EQ(G.level(1).r, 2);
  EXPECT_EQ(G.level(2).r, 1);
  EXPECT_EQ(G.level(3).r, 1);
  EXPECT_EQ(G.level(1).N, 6);
  EXPECT_EQ(G.level(2).N, 26);
  EXPECT_EQ(G.level(3).N, 106);
  EXPECT_EQ(G.stratum(StratumKind::Q0, 0).count, 4);
  EXPECT_EQ(G.level(1).chi_open, -4);
  EXPECT_EQ(degree_to(G, "E_2_1", "E_1_"), 2u);
  EXPECT_TRUE(exceptional_tree(G));
}

TEST(Resolution, LocalTypes) {
  const auto G = build_resolution(build_semigroup(big({4, 6, 13})));
  const auto* q0 = G.local_type("Q0");
  ASSERT_NE(q0, nullptr);
  EXPECT_EQ(q0->type, CyclicQuotientType::cyclic(6, big({4, -1})));
  // Multiplicity of E_0 at Q_0 read off the chart type.
  EXPECT_EQ(divisor_multiplicity(12, q0->type, 1), 2);
  EXPECT_EQ(G.local_type("nowhere"), nullptr);
}

TEST(Resolution, DotExport) {
  const auto G = build_resolution(build_semigroup(big({4, 6, 13})));
  const auto dot = export_graph(G, GraphFormat::Dot);
  EXPECT_EQ(dot.rfind("graph resolution {", 0), 0u);
  EXPECT_EQ(count_substr(dot, "shape=ellipse"), 2u);
  EXPECT_EQ(count_substr(dot, "\"Yhat\" [label="), 1u);
  EXPECT_NE(dot.find("E_{1,1} [6]"), std::string::npos);
  EXPECT_EQ(dot, export_graph(G, GraphFormat::Dot));
}

TEST(Resolution, JsonRejectsGarbage) {
  EXPECT_THROW(parse_graph_json("{"), Error);
  EXPECT_THROW(parse_graph_json("{\"gens\": [4,6,13]}"), Error);
}

TEST(Resolution, ValidateCatchesTampering) {
  auto G = build_resolution(build_semigroup(big({8, 12, 26, 53})));
  auto bad = G;
  bad.levels[0].N += 1;
  EXPECT_THROW(validate_graph(bad), Error);
  bad = G;
  bad.edges.push_back({"E_1_1", "E_3_1"});
  EXPECT_THROW(validate_graph(bad), Error);
  bad = G;
  bad.edges.push_back({"E_2_1", "H_0"});
  EXPECT_THROW(validate_graph(bad), Error);
  bad = G;
  bad.edges.erase(std::find(bad.edges.begin(), bad.edges.end(), Edge{"E_2_1", "E_3_1"}));
  EXPECT_THROW(validate_graph(bad), Error);
}

// Levels, strata, adjacency and the zeta function against naive recomputation.
TEST(ResolutionProperty, FuzzedGraphsMatchNaiveInvariants) {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 150; ++it) {
    const int g = 2 + static_cast<int>(rng() % 4);
    const auto sg = random_semigroup(rng(), g, 200'000);
    const auto gens = ref::small(sg.gens);
    const auto inv = ref::invariants(gens);
    const auto m = ref::mults(gens);
    const auto G = build_resolution(sg);
    ASSERT_NO_THROW(validate_graph(G));
    ASSERT_TRUE(exceptional_tree(G));
    std::vector<ref::i64> r(static_cast<std::size_t>(g) + 1, 0);
    for (int k = 1; k <= g; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      r[uk] = inv.e[uk] / m.L[uk + 1];
      const auto& lv = G.level(k);
      ASSERT_EQ(lv.r, r[uk]);
      ASSERT_EQ(lv.N, m.N[uk]);
      ASSERT_EQ(lv.M, m.M[uk]);
      ASSERT_EQ(lv.chi_open, -inv.n[uk] * gens[uk] / m.N[uk]);
      ASSERT_EQ(G.stratum(StratumKind::Qk, k).count, gens[uk] / m.M[uk]);
      ASSERT_EQ((gens[uk] / m.M[uk]) % r[uk], 0);
      if (k >= 2) {
        ASSERT_EQ(r[uk - 1] % r[uk], 0);
      }
    }
    ASSERT_EQ(r[static_cast<std::size_t>(g)], 1);
    ASSERT_EQ(r[static_cast<std::size_t>(g - 1)], 1);
    ASSERT_EQ(G.stratum(StratumKind::Q0, 0).count, gens[0] / m.M[0]);
    // Equal distribution: every E_k component meets r_{k-1}/r_k components of E_{k-1}.
    for (const auto& n : G.nodes) {
      if (n.kind != NodeKind::Exceptional || n.k < 2) continue;
      const auto uk = static_cast<std::size_t>(n.k);
      ASSERT_EQ(static_cast<ref::i64>(degree_to(G, n.id(), "E_" + std::to_string(n.k - 1) + "_")), r[uk - 1] / r[uk]);
    }
    FactorProduct expected;
    for (const auto& [a, e] : ref::zeta_exponents(gens)) expected.mul_one_minus(static_cast<long>(a), static_cast<long>(e));
    ASSERT_EQ(zeta_from_graph(G), expected);
    ASSERT_EQ(zeta_from_graph(G), zeta_closed_form(sg));
    ASSERT_NO_THROW(cross_validate_with_curves(sg, G));
  }
}

TEST(ResolutionProperty, JsonRoundTripAndDeterminism) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 60; ++it) {
    const auto sg = random_semigroup(rng(), 2 + static_cast<int>(rng() % 4), 100'000);
    const auto G = build_resolution(sg);
    const auto text = export_graph(G, GraphFormat::Json);
    ASSERT_EQ(parse_graph_json(text), G);
    ASSERT_EQ(export_graph(build_resolution(sg), GraphFormat::Json), text);
  }
}

TEST(ResolutionProperty, GenusTwoGivesPath) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 50; ++it) {
    const auto G = build_resolution(random_semigroup(rng(), 2, 100'000));
    EXPECT_EQ(G.level(1).r, 1);
    EXPECT_EQ(G.level(2).r, 1);
    EXPECT_EQ(G.edges.size(), 5u);
  }
}
