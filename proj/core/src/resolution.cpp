#include "monoconj/resolution.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "json_util.hpp"
#include "monoconj/zeta.hpp"

namespace monoconj {

std::string Node::id() const {
  switch (kind) {
    case NodeKind::Exceptional: return "E_" + std::to_string(k) + "_" + std::to_string(j);
    case NodeKind::Boundary: return "H_" + std::to_string(k);
    case NodeKind::Strict: return "Yhat";
  }
  return "";
}

std::string Node::label(const BigInt& N) const {
  switch (kind) {
    case NodeKind::Exceptional:
      return "E_{" + std::to_string(k) + "," + std::to_string(j) + "} [" + to_string(N) + "]";
    case NodeKind::Boundary: return "H_" + std::to_string(k);
    case NodeKind::Strict: return "Ŷ";
  }
  return "";
}

const Stratum& ResolutionGraph::stratum(StratumKind kind, int k) const {
  for (const auto& s : strata) {
    if (s.kind == kind && s.k == k) return s;
  }
  throw Error(ErrorKind::InternalInconsistency, "missing stratum");
}

const LocalType* ResolutionGraph::local_type(const std::string& at) const {
  for (const auto& lt : local_types) {
    if (lt.at == at) return &lt;
  }
  return nullptr;
}

namespace {

constexpr auto kInc = ErrorKind::InternalInconsistency;

std::size_t as_size(const BigInt& x) {
  ensure(x >= 0 && x <= BigInt(static_cast<unsigned long>(kMaxGraphComponents)), "component count out of range");
  return static_cast<std::size_t>(x.get_ui());
}

std::string qk_name(int k) { return "Q" + std::to_string(k); }
std::string meet_name(int k) { return "Q" + std::to_string(k) + "_" + std::to_string(k + 1); }
std::string generic_name(int k) { return "E" + std::to_string(k); }

CyclicQuotientType one_row(const BigInt& d, std::vector<BigInt> a) {
  return CyclicQuotientType::cyclic(d, std::move(a));
}

}  // namespace

ResolutionGraph build_resolution(const PlaneSemigroup& sg) {
  const int g = sg.g();
  const BRecursionTable bt = b_table(sg);
  const BigInt n_all = sg.total_n();
  auto nk = [&](int k) -> const BigInt& { return sg.n[static_cast<std::size_t>(k)]; };
  auto ek = [&](int k) -> const BigInt& { return sg.e[static_cast<std::size_t>(k)]; };
  auto nb = [&](int k) { return BigInt(nk(k) * sg.beta(k)); };

  ResolutionGraph G;
  G.gens = sg.gens;

  for (int k = 1; k <= g; ++k) {
    Level lv;
    lv.k = k;
    lv.r = exact_div(ek(k), sg.lcm_n(k + 1), kInc, "r_k");
    lv.N = sg.N(k);
    lv.M = sg.M(k);
    ensure(divides(lv.M, lv.N) && divides(sg.L(k), lv.N), "M_k and L_k must divide N_k");
    if (k == 1) {
      for (int i = 0; i <= g; ++i) lv.weights.push_back(n_all / nk(i));
    } else {
      const BigInt b = bt.at(k, k - 1);
      lv.weights.push_back(1);
      for (int i = k; i <= g; ++i) lv.weights.push_back(exact_div(b, nk(i), kInc, "weight"));
    }
    lv.chi_open = -exact_div(nb(k), lv.N, kInc, "Euler characteristic");
    lv.chi_open_per_component = exact_div(lv.chi_open, lv.r, kInc, "Euler characteristic per component");
    G.levels.push_back(lv);
  }
  ensure(G.level(g).r == 1 && (g < 2 || G.level(g - 1).r == 1), "last two levels must be irreducible");
  for (int k = 2; k <= g; ++k) ensure(divides(G.level(k).r, G.level(k - 1).r), "r_k must divide r_{k-1}");

  // Nodes.
  for (int k = 1; k <= g; ++k) {
    const std::size_t r = as_size(G.level(k).r);
    for (std::size_t j = 1; j <= r; ++j) G.nodes.push_back({NodeKind::Exceptional, k, j});
  }
  for (int i = 0; i <= g; ++i) G.nodes.push_back({NodeKind::Boundary, i, 0});
  G.nodes.push_back({NodeKind::Strict, 0, 0});

  // Edges: E_{k+1} components meet contiguous blocks of E_k components.
  auto eid = [](int k, std::size_t j) { return Node{NodeKind::Exceptional, k, j}.id(); };
  for (int k = 1; k <= g; ++k) {
    const std::size_t r = as_size(G.level(k).r);
    for (std::size_t j = 1; j <= r; ++j) {
      if (k == 1) {
        G.edges.push_back({eid(1, j), "H_0"});
        G.edges.push_back({eid(1, j), "H_1"});
      } else {
        G.edges.push_back({eid(k, j), "H_" + std::to_string(k)});
      }
      if (k < g) {
        const std::size_t block = as_size(G.level(k).r / G.level(k + 1).r);
        G.edges.push_back({eid(k, j), eid(k + 1, (j - 1) / block + 1)});
      }
    }
  }
  G.edges.push_back({eid(g, 1), "Yhat"});

  // Strata.
  G.strata.push_back({StratumKind::Q0, 0, exact_div(sg.beta(0), sg.M(0), kInc, "beta_0/M_0"), sg.M(0)});
  for (int k = 1; k <= g; ++k) {
    G.strata.push_back({StratumKind::Qk, k, exact_div(sg.beta(k), sg.M(k), kInc, "beta_k/M_k"), sg.M(k)});
  }
  for (int k = 1; k < g; ++k) G.strata.push_back({StratumKind::Qkk1, k, G.level(k).r, std::nullopt});
  G.strata.push_back({StratumKind::StrictMeet, g, 1, std::nullopt});

  // Local types.
  {
    std::vector<BigInt> quotients;
    for (int i = 1; i <= g; ++i) quotients.push_back(n_all / nk(i));
    auto t = one_row(gcd_of(quotients), {n_all / nk(0), -1});
    G.local_types.push_back({"Q0", t, normalize_cyclic(t)});
  }
  for (int k = 1; k <= g; ++k) {
    const BigInt s = nb(k);
    std::vector<BigInt> generic{ek(k - 1)}, special{ek(k - 1)};
    for (int i = k; i <= g; ++i) generic.push_back(exact_div(s, nk(i), kInc, "n_k beta_k / n_i"));
    for (int i = k + 1; i <= g; ++i) special.push_back(s / nk(i));
    std::vector<BigInt> a(static_cast<std::size_t>(g - k + 2), BigInt(0));
    a[0] = -1;
    auto tg = one_row(gcd_of(generic), a);
    G.local_types.push_back({generic_name(k), tg, normalize_cyclic(tg)});
    auto tq = one_row(gcd_of(special), {-1, sg.beta(k)});
    G.local_types.push_back({qk_name(k), tq, normalize_cyclic(tq)});
  }
  for (int k = 2; k <= g; ++k) {
    const BigInt b = nb(k) - nb(k - 1);
    ensure(b == bt.at(k, k - 1), "meeting-point order must match the b-table");
    CyclicQuotientType t({exact_div(b, sg.L(k), kInc, "order at E_{k-1} meet E_k"), BigInt(b * ek(k))},
                         {{1, -1}, {-sg.beta(k), exact_div(nb(k - 1), nk(k), kInc, "action at E_{k-1} meet E_k")}});
    G.local_types.push_back({meet_name(k - 1), t, std::nullopt});
  }

  validate_graph(G);
  cross_validate_with_curves(sg, G);
  return G;
}

void validate_graph(const ResolutionGraph& G) {
  const PlaneSemigroup sg = build_semigroup(G.gens);
  const int g = sg.g();
  ensure(G.g() == g, "one level per exceptional divisor");
  for (int k = 1; k <= g; ++k) {
    const Level& lv = G.level(k);
    ensure(lv.k == k, "level index");
    ensure(lv.r == sg.e[static_cast<std::size_t>(k)] / sg.lcm_n(k + 1), "r_k formula");
    ensure(lv.N == sg.N(k) && lv.M == sg.M(k), "N_k / M_k formula");
    ensure(lv.chi_open * lv.N == -sg.n[static_cast<std::size_t>(k)] * sg.beta(k), "Euler characteristic formula");
    ensure(lv.chi_open_per_component * lv.r == lv.chi_open, "Euler characteristic per component");
    if (k >= 2) ensure(divides(lv.r, G.level(k - 1).r), "r_k | r_{k-1}");
  }

  // Per-component shares of the point strata.
  const Stratum& q0 = G.stratum(StratumKind::Q0, 0);
  ensure(q0.count * sg.M(0) == sg.beta(0) && q0.multiplicity == sg.M(0), "Q0 stratum");
  ensure(divides(G.level(1).r, q0.count), "Q0 points must split evenly over E_1");
  for (int k = 1; k <= g; ++k) {
    const Stratum& q = G.stratum(StratumKind::Qk, k);
    ensure(q.count * sg.M(k) == sg.beta(k) && q.multiplicity == sg.M(k), "Qk stratum");
    ensure(divides(G.level(k).r, q.count), "Qk points must split evenly over E_k");
  }
  for (int k = 1; k < g; ++k) ensure(G.stratum(StratumKind::Qkk1, k).count == G.level(k).r, "Qkk1 stratum");

  // Adjacency.
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < G.nodes.size(); ++i) {
    ensure(index.emplace(G.nodes[i].id(), i).second, "duplicate node id");
  }
  std::vector<std::vector<std::size_t>> adj(G.nodes.size());
  for (const auto& e : G.edges) {
    auto u = index.find(e.u), v = index.find(e.v);
    ensure(u != index.end() && v != index.end(), "edge endpoint is not a node");
    adj[u->second].push_back(v->second);
    adj[v->second].push_back(u->second);
  }
  auto count_neighbors = [&](std::size_t i, NodeKind kind, int k) {
    std::size_t c = 0;
    for (auto v : adj[i]) {
      if (G.nodes[v].kind == kind && G.nodes[v].k == k) ++c;
    }
    return c;
  };
  std::size_t exceptional = 0, tree_edges = 0;
  for (std::size_t i = 0; i < G.nodes.size(); ++i) {
    const Node& nd = G.nodes[i];
    if (nd.kind != NodeKind::Exceptional) continue;
    ++exceptional;
    const int k = nd.k;
    if (k >= 2) {
      ensure(BigInt(static_cast<unsigned long>(count_neighbors(i, NodeKind::Exceptional, k - 1))) ==
                 G.level(k - 1).r / G.level(k).r,
             "each E_k component meets r_{k-1}/r_k components of E_{k-1}");
    }
    if (k < g) {
      ensure(count_neighbors(i, NodeKind::Exceptional, k + 1) == 1, "each E_k component meets one E_{k+1} component");
    }
    ensure(count_neighbors(i, NodeKind::Boundary, k) == 1, "each E_k component meets H_k");
    if (k == 1) ensure(count_neighbors(i, NodeKind::Boundary, 0) == 1, "each E_1 component meets H_0");
    if (k == g) {
      ensure(count_neighbors(i, NodeKind::Strict, 0) == 1, "E_g meets the strict transform");
    }
  }
  for (const auto& e : G.edges) {
    const Node& a = G.nodes[index.at(e.u)];
    const Node& b = G.nodes[index.at(e.v)];
    if (a.kind != NodeKind::Boundary && b.kind != NodeKind::Boundary) {
      ++tree_edges;
      continue;
    }
    const Node& h = a.kind == NodeKind::Boundary ? a : b;
    const Node& other = a.kind == NodeKind::Boundary ? b : a;
    ensure(other.kind == NodeKind::Exceptional && other.k == std::max(h.k, 1), "H_i only meets E_i (H_0 meets E_1)");
  }
  // Exceptional components plus the strict transform form a tree.
  ensure(tree_edges == exceptional, "edge count must be node count - 1 on the exceptional tree");
  std::vector<bool> seen(G.nodes.size(), false);
  std::queue<std::size_t> todo;
  const std::size_t root = index.at("Yhat");
  todo.push(root);
  seen[root] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const std::size_t u = todo.front();
    todo.pop();
    for (auto v : adj[u]) {
      if (!seen[v] && G.nodes[v].kind == NodeKind::Exceptional) {
        seen[v] = true;
        ++reached;
        todo.push(v);
      }
    }
  }
  ensure(reached == exceptional + 1, "exceptional tree must be connected");
}

void cross_validate_with_curves(const PlaneSemigroup& sg, const ResolutionGraph& G) {
  const int g = sg.g();
  const BRecursionTable bt = b_table(sg);
  const BigInt n_all = sg.total_n();
  auto nk = [&](int k) -> const BigInt& { return sg.n[static_cast<std::size_t>(k)]; };

  for (int k = 1; k < g; ++k) {
    WeightedCurveSpec spec;
    spec.commutation = Commutation::FromOne;
    if (k == 1) {
      spec.d = 1;
      for (int i = 0; i <= g; ++i) {
        spec.p.push_back(n_all / nk(i));
        spec.m.push_back(nk(i));
        spec.a.push_back(0);
      }
    } else {
      const BigInt b = bt.at(k, k - 1);
      const BigInt prev = nk(k - 1) * sg.beta(k - 1);
      spec.d = sg.e[static_cast<std::size_t>(k - 1)];
      spec.p.push_back(1);
      spec.m.push_back(b);
      spec.a.push_back(-1);
      for (int i = k; i <= g; ++i) {
        spec.p.push_back(b / nk(i));
        spec.m.push_back(nk(i));
        spec.a.push_back(exact_div(prev, nk(i), kInc, "action weight"));
      }
    }
    const Level& lv = G.level(k);
    ensure(curve_component_count(spec) == lv.r, "component count of E_" + std::to_string(k));
    const BigInt axis0 = k == 1 ? G.stratum(StratumKind::Q0, 0).count : G.level(k - 1).r;
    ensure(curve_axis_intersections(spec, 0).total == axis0, "points on the previous divisor, level " + std::to_string(k));
    ensure(curve_axis_intersections(spec, 1).total == G.stratum(StratumKind::Qk, k).count,
           "points on H_" + std::to_string(k));
    ensure(curve_open_euler(spec) == lv.chi_open, "Euler characteristic of E_" + std::to_string(k));
  }
  // E_g is a rational curve meeting H_g, E_{g-1} and the strict transform once each.
  ensure(G.level(g).chi_open == -1 && G.stratum(StratumKind::Qk, g).count == 1, "last divisor is P^1 minus 3 points");

  for (int k = 1; k <= g; ++k) {
    const BigInt s = nk(k) * sg.beta(k);
    ensure(divisor_multiplicity(s, G.local_type(generic_name(k))->type, 0) == G.level(k).N,
           "chart multiplicity of E_" + std::to_string(k));
    ensure(divisor_multiplicity(s, G.local_type(qk_name(k))->type, 0) == G.level(k).M,
           "chart multiplicity at Q_" + std::to_string(k));
  }
  ensure(divisor_multiplicity(n_all, G.local_type("Q0")->type, 1) == sg.M(0), "chart multiplicity at Q_0");
  for (const auto& lt : G.local_types) {
    if (lt.normalized) ensure(is_normalized(*lt.normalized), "normal form at " + lt.at);
  }
}

FactorProduct zeta_from_graph(const ResolutionGraph& G) {
  FactorProduct z;
  for (const auto& s : G.strata) {
    if (s.kind == StratumKind::Q0 || s.kind == StratumKind::Qk) z.mul_one_minus(*s.multiplicity, s.count);
  }
  for (const auto& lv : G.levels) z.mul_one_minus(lv.N, lv.chi_open);
  ensure(z == zeta_closed_form(build_semigroup(G.gens)), "zeta function from the graph disagrees with the closed form");
  return z;
}

namespace {

std::string stratum_kind_name(StratumKind kind) {
  switch (kind) {
    case StratumKind::Q0: return "Q0";
    case StratumKind::Qk: return "Qk";
    case StratumKind::Qkk1: return "Qkk1";
    case StratumKind::StrictMeet: return "Yhat";
  }
  return "";
}

nlohmann::json type_json(const CyclicQuotientType& t) {
  nlohmann::json A = nlohmann::json::array();
  for (const auto& row : t.A()) A.push_back(detail::big_list(row));
  return {{"d", detail::big_list(t.d())}, {"A", A}};
}

CyclicQuotientType type_from_json(const nlohmann::json& j) {
  std::vector<std::vector<BigInt>> A;
  for (const auto& row : j.at("A")) A.push_back(detail::big_list_from(row));
  return CyclicQuotientType(detail::big_list_from(j.at("d")), A);
}

std::string dot_export(const ResolutionGraph& G) {
  std::map<std::string, std::string> annotation;
  const Stratum& q0 = G.stratum(StratumKind::Q0, 0);
  auto points = [](const BigInt& count, const BigInt& r, const BigInt& m) {
    return to_string(BigInt(count / r)) + " pts, m=" + to_string(m);
  };
  annotation["H_0"] = points(q0.count, G.level(1).r, *q0.multiplicity);
  for (int k = 1; k <= G.g(); ++k) {
    const Stratum& q = G.stratum(StratumKind::Qk, k);
    annotation["H_" + std::to_string(k)] = points(q.count, G.level(k).r, *q.multiplicity);
  }

  std::ostringstream out;
  out << "graph resolution {\n";
  out << "  label=\"(" << join(G.gens) << ")\";\n";
  for (const auto& nd : G.nodes) {
    out << "  \"" << nd.id() << "\" [label=\"";
    if (nd.kind == NodeKind::Exceptional) {
      out << nd.label(G.level(nd.k).N) << "\", shape=ellipse";
    } else if (nd.kind == NodeKind::Boundary) {
      out << nd.label(0) << "\", shape=box";
    } else {
      out << nd.label(0) << "\", shape=plaintext";
    }
    out << "];\n";
  }
  for (const auto& e : G.edges) {
    out << "  \"" << e.u << "\" -- \"" << e.v << "\"";
    auto it = annotation.find(e.v);
    if (it != annotation.end()) out << " [label=\"" << it->second << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_graph(const ResolutionGraph& G, GraphFormat format) {
  if (format == GraphFormat::Dot) return dot_export(G);
  using nlohmann::json;
  json levels = json::array();
  for (const auto& lv : G.levels) {
    levels.push_back({{"k", lv.k},
                      {"r", detail::big(lv.r)},
                      {"N", detail::big(lv.N)},
                      {"M", detail::big(lv.M)},
                      {"weights", detail::big_list(lv.weights)},
                      {"chi_open", detail::big(lv.chi_open)},
                      {"chi_open_per_component", detail::big(lv.chi_open_per_component)}});
  }
  json nodes = json::array();
  for (const auto& nd : G.nodes) nodes.push_back(nd.id());
  json edges = json::array();
  for (const auto& e : G.edges) edges.push_back({e.u, e.v});
  json strata = json::array();
  for (const auto& s : G.strata) {
    // The strict-transform meeting point is implied by the schema and not listed.
    if (s.kind == StratumKind::StrictMeet) continue;
    json entry{{"kind", stratum_kind_name(s.kind)}, {"k", s.k}, {"count", detail::big(s.count)}};
    entry["multiplicity"] = s.multiplicity ? detail::big(*s.multiplicity) : json(nullptr);
    strata.push_back(entry);
  }
  json types = json::array();
  for (const auto& lt : G.local_types) {
    json entry = type_json(lt.type);
    entry["at"] = lt.at;
    if (lt.normalized) entry["normalized"] = type_json(*lt.normalized);
    types.push_back(entry);
  }
  json doc{{"gens", detail::big_list(G.gens)}, {"levels", levels}, {"nodes", nodes},
           {"edges", edges}, {"strata", strata}, {"local_types", types}};
  return doc.dump(2);
}

namespace {

ResolutionGraph parse_graph_doc(const nlohmann::json& doc) {
  using nlohmann::json;
  ResolutionGraph G;
  G.gens = detail::big_list_from(doc.at("gens"));
  for (const auto& j : doc.at("levels")) {
    Level lv;
    lv.k = j.at("k").get<int>();
    lv.r = detail::big_from(j.at("r"));
    lv.N = detail::big_from(j.at("N"));
    lv.M = detail::big_from(j.at("M"));
    lv.weights = detail::big_list_from(j.at("weights"));
    lv.chi_open = detail::big_from(j.at("chi_open"));
    lv.chi_open_per_component =
        j.contains("chi_open_per_component") ? detail::big_from(j.at("chi_open_per_component")) : lv.chi_open / lv.r;
    G.levels.push_back(lv);
  }
  for (int k = 1; k <= G.g(); ++k) {
    const std::size_t r = as_size(G.level(k).r);
    for (std::size_t j = 1; j <= r; ++j) G.nodes.push_back({NodeKind::Exceptional, k, j});
  }
  for (int i = 0; i <= G.g(); ++i) G.nodes.push_back({NodeKind::Boundary, i, 0});
  G.nodes.push_back({NodeKind::Strict, 0, 0});
  for (const auto& e : doc.at("edges")) G.edges.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
  for (const auto& j : doc.at("strata")) {
    Stratum s;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "Q0") s.kind = StratumKind::Q0;
    else if (kind == "Qk") s.kind = StratumKind::Qk;
    else if (kind == "Qkk1") s.kind = StratumKind::Qkk1;
    else throw Error(ErrorKind::InvalidInput, "unknown stratum kind " + kind);
    s.k = j.at("k").get<int>();
    s.count = detail::big_from(j.at("count"));
    if (!j.at("multiplicity").is_null()) s.multiplicity = detail::big_from(j.at("multiplicity"));
    G.strata.push_back(s);
  }
  G.strata.push_back({StratumKind::StrictMeet, G.g(), 1, std::nullopt});
  for (const auto& j : doc.at("local_types")) {
    LocalType lt{j.at("at").get<std::string>(), type_from_json(j), std::nullopt};
    if (j.contains("normalized")) lt.normalized = type_from_json(j.at("normalized"));
    G.local_types.push_back(lt);
  }
  return G;
}

}  // namespace

ResolutionGraph parse_graph_json(const std::string& text) {
  try {
    return parse_graph_doc(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace monoconj
