#include "monoconj/campaign.hpp"

#include <cmath>
#include <random>

#include "monoconj/conjecture.hpp"
#include "monoconj/qspace.hpp"
#include "monoconj/resolution.hpp"
#include "monoconj/zeta.hpp"

namespace monoconj {

namespace {

template <class F>
void run_check(std::vector<CheckFailure>& out, const PlaneSemigroup& sg, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& ex) {
    out.push_back({sg.gens, name, ex.what()});
  }
}

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::InternalInconsistency, what);
}

}  // namespace

std::vector<CheckFailure> cross_check(const PlaneSemigroup& sg, const FuzzOptions& opts, CrossCheckStats* stats) {
  std::vector<CheckFailure> out;
  CrossCheckStats local;

  run_check(out, sg, "semigroup", [&] {
    const PlaneSemigroup again = build_semigroup(sg.gens);
    require(again == sg, "rebuilding the semigroup changes its invariants");
    b_table(sg);
    for (int i = 1; i <= sg.g(); ++i) {
      const BigInt s = sg.n[static_cast<std::size_t>(i)] * sg.beta(i);
      const auto fast = decompose(sg, s, i);
      try {
        require(enum_digits(s, i, sg, opts.budget) == fast, "exhaustive digits differ at i=" + std::to_string(i));
        ++local.digit_checks;
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::BudgetExceeded) throw;
      }
    }
  });

  FactorProduct z_closed = zeta_closed_form(sg);
  run_check(out, sg, "graph", [&] {
    const ResolutionGraph graph = build_resolution(sg);
    validate_graph(graph);
    require(parse_graph_json(export_graph(graph, GraphFormat::Json)) == graph, "JSON round trip changes the graph");
    require(zeta_from_graph(graph) == z_closed, "zeta from the graph differs from the closed form");
  });

  run_check(out, sg, "delta", [&] {
    const FactorProduct delta = characteristic_polynomial(sg);
    const CyclotomicVector cv = to_cyclotomic(delta);
    require(cv.all_nonnegative(), "Delta has a negative cyclotomic exponent");
    const BigInt mu = milnor_number(sg);
    require(delta.degree() == mu && cv.degree() == mu, "divisor-sum degree of Delta differs from mu");
    const CyclotomicVector zc = to_cyclotomic(z_closed);
    for (const auto& [d, c] : cv.c) {
      if (d > 1) require(zc.at(d) == -c, "Delta and Z disagree at d=" + to_string(d));
    }
    for (const auto& [d, c] : zc.c) {
      if (d > 1) require(cv.at(d) == -c, "Z and Delta disagree at d=" + to_string(d));
    }
    if (mu <= BigInt(static_cast<unsigned long>(opts.dense_mu_limit))) {
      const DensePoly dense = expand_dense(delta);
      require(dense.degree() == mu.get_si(), "dense Delta has the wrong degree");
      require(dense.leading() == 1 && abs(dense.c[0]) == 1, "dense Delta is not monic with unit constant term");
      EnumerationBudget b = opts.budget;
      b.max_poly_degree = std::max<std::uint64_t>(b.max_poly_degree, opts.dense_mu_limit);
      const Expansion ex = expand_and_verify(delta, b);
      require(ex.poly == dense, "oracle expansion differs from the dense expansion");
      require(ex.multiplicity == cv.c, "oracle cyclotomic multiplicities differ from the divisor sums");
      local.dense = true;
    }
  });

  run_check(out, sg, "conjecture", [&] {
    const auto pks = pk_factorization(sg);
    FactorProduct prod;
    for (const auto& p : pks) {
      require(to_cyclotomic(p).all_nonnegative(), "some P_k is not a polynomial");
      prod *= p;
    }
    require(prod == characteristic_polynomial(sg), "product of the P_k differs from Delta");
    const ConjectureReport rep = verify_conjecture(sg);
    std::string why;
    for (const auto& issue : rep.issues) why += issue + "; ";
    for (const auto& pe : rep.poles) {
      if (!pe.verdict) why += "false verdict at k=" + std::to_string(pe.k) + "; ";
    }
    require(rep.pass, "conjecture check failed: " + why);
  });

  if (stats) *stats = local;
  return out;
}

PlaneSemigroup fuzz_instance(const FuzzOptions& opts, std::uint64_t index) {
  if (opts.max_g < 2) throw Error(ErrorKind::InvalidInput, "fuzzing needs max_g >= 2");
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int g = std::uniform_int_distribution<int>(2, opts.max_g)(rng);
    // Log-uniform size bound so that small Milnor numbers are well represented.
    const double lo = std::log(static_cast<double>(std::uint64_t{1} << (2 * g + 2)));
    const double hi = std::log(static_cast<double>(opts.max_gen));
    if (hi < lo) continue;
    const double x = std::uniform_real_distribution<double>(lo, hi)(rng);
    const auto size = std::min<std::uint64_t>(opts.max_gen, static_cast<std::uint64_t>(std::exp(x)));
    try {
      return random_semigroup(rng(), g, size);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::BudgetExceeded) throw;
    }
  }
  throw Error(ErrorKind::BudgetExceeded, "could not sample a fuzz instance");
}

FuzzSummary run_fuzz(const FuzzOptions& opts, const std::function<void(std::uint64_t, const PlaneSemigroup&)>& on_instance) {
  FuzzSummary sum;
  for (std::uint64_t i = 0; i < opts.count; ++i) {
    const PlaneSemigroup sg = fuzz_instance(opts, i);
    if (on_instance) on_instance(i, sg);
    CrossCheckStats stats;
    auto failures = cross_check(sg, opts, &stats);
    ++sum.instances;
    sum.dense_checked += stats.dense ? 1 : 0;
    sum.digit_checks += stats.digit_checks;
    sum.failures.insert(sum.failures.end(), failures.begin(), failures.end());
  }
  return sum;
}

namespace {

struct Pair {
  std::uint64_t a, k;
};

void for_each_tuple(const std::vector<Pair>& pairs, std::size_t len, const std::function<void(const std::vector<Pair>&)>& f) {
  std::vector<Pair> cur(len, pairs.front());
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    for (std::size_t i = 0; i < len; ++i) cur[i] = pairs[idx[i]];
    f(cur);
    std::size_t i = 0;
    while (i < len && idx[i] + 1 == pairs.size()) idx[i++] = 0;
    if (i == len) return;
    ++idx[i];
  }
}

}  // namespace

OracleSummary run_oracle_grid(const OracleGridOptions& opts) {
  OracleSummary sum;
  std::mt19937_64 rng(opts.seed);
  const auto& B = opts.budget;
  auto note = [&](const std::string& what) { sum.discrepancies.push_back(what); };

  for (std::uint64_t d = 1; d <= B.max_group_order; ++d) {
    std::vector<Pair> pairs;
    for (std::uint64_t a = 0; a < d; ++a) {
      for (std::uint64_t k = 1; k <= B.max_exponent; ++k) {
        if ((a * k) % d == 0) pairs.push_back({a, k});
      }
    }
    for (std::size_t len = 1; len <= B.max_rank + 1; ++len) {
      for_each_tuple(pairs, len, [&](const std::vector<Pair>& tuple) {
        std::vector<BigInt> a, kb;
        std::vector<std::uint64_t> k;
        for (const auto& p : tuple) {
          a.emplace_back(static_cast<unsigned long>(p.a));
          kb.emplace_back(static_cast<unsigned long>(p.k));
          k.push_back(p.k);
        }
        const auto t = CyclicQuotientType::cyclic(BigInt(static_cast<unsigned long>(d)), a);
        ++sum.types;
        const std::string label = "X(" + std::to_string(d) + "; " + join(a) + "), k=(" + join(kb) + ")";
        const BigInt total = count_solutions_total(t, kb);
        const BigInt tail = len >= 2 ? count_solutions_fixed_tail(t, kb[0]) : BigInt(0);
        for (std::uint64_t draw = 0; draw < opts.draws; ++draw) {
          std::vector<RootConstant> c;
          for (std::size_t i = 0; i < len; ++i) c.push_back(random_constant(rng));
          ++sum.comparisons;
          if (BigInt(static_cast<unsigned long>(enum_count_solutions(t, k, c, CountMode::Total, B))) != total) {
            note("total count mismatch at " + label);
          }
          if (len >= 2) {
            ++sum.comparisons;
            if (BigInt(static_cast<unsigned long>(enum_count_solutions(t, k, c, CountMode::FixedTail, B))) != tail) {
              note("fixed-tail count mismatch at " + label);
            }
          }
        }
        if (!is_normalized(normalize_cyclic(t))) note("normal form is not normalized at " + label);
      });
    }
  }

  if (opts.covering) {
    for (std::uint64_t K = 1; K <= opts.covering_max_K; ++K) {
      std::vector<std::uint64_t> divs;
      for (std::uint64_t x = 1; x <= K; ++x) {
        if (K % x == 0) divs.push_back(x);
      }
      std::vector<Pair> dp;
      for (auto x : divs) dp.push_back({0, x});
      for (auto k : divs) {
        for (std::size_t len = 3; len <= 4; ++len) {
          for_each_tuple(dp, len, [&](const std::vector<Pair>& tuple) {
            std::vector<std::uint64_t> ks;
            std::vector<BigInt> kb;
            for (const auto& p : tuple) {
              ks.push_back(p.k);
              kb.emplace_back(static_cast<unsigned long>(p.k));
            }
            const BigInt D = BigInt(static_cast<unsigned long>(K / k));
            std::vector<BigInt> tw, tk;
            for (std::size_t i = 2; i < ks.size(); ++i) {
              tw.emplace_back(static_cast<unsigned long>(K / ks[i]));
              tk.push_back(kb[i]);
            }
            const BigInt N = count_solutions_total(CyclicQuotientType::cyclic(D, tw), tk);
            const BigInt deg = covering_degree(BigInt(static_cast<unsigned long>(K)), BigInt(static_cast<unsigned long>(k)), kb, N);
            std::vector<RootConstant> c;
            for (std::size_t i = 0; i < ks.size(); ++i) c.push_back(random_constant(rng));
            ++sum.covering_cases;
            if (BigInt(static_cast<unsigned long>(enum_covering_fiber(K, k, ks, c, B))) != deg) {
              note("covering degree mismatch at K=" + std::to_string(K) + ", k=" + std::to_string(k) + ", k_i=(" +
                   join(kb) + ")");
            }
          });
        }
      }
    }
  }
  return sum;
}

}  // namespace monoconj
