#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "monoconj/campaign.hpp"
#include "monoconj/conjecture.hpp"
#include "monoconj/resolution.hpp"
#include "monoconj/semigroup.hpp"
#include "monoconj/zeta.hpp"

namespace monoconj::cli {

namespace {

using nlohmann::json;

json big(const BigInt& x) {
  if (fits_i64(x)) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

json big_list(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(big(x));
  return out;
}

std::string pole_fraction(const PoleEntry& pe) {
  if (pe.k == 0) return to_string(pe.value);
  return to_string(pe.nu) + "/" + to_string(pe.N);
}

std::string poles_line(const ConjectureReport& rep) {
  std::string out;
  for (const auto& pe : rep.poles) {
    if (!out.empty()) out += ", ";
    out += pole_fraction(pe);
  }
  return out;
}

std::string conjecture_text(const ConjectureReport& rep) {
  std::ostringstream out;
  for (const auto& pe : rep.poles) {
    out << "pole k=" << pe.k << " value=" << pole_fraction(pe) << " (" << to_string(pe.value) << ")"
        << " order=" << pe.order << " case=" << to_string(pe.proof_case) << " delta_mult=" << pe.delta_multiplicity;
    if (pe.k >= 1) out << " pk_mult=" << pe.pk_multiplicity;
    out << " verdict=" << (pe.verdict ? "pass" : "FAIL") << "\n";
  }
  for (const auto& issue : rep.issues) out << "issue: " << issue << "\n";
  out << "conjecture: " << (rep.pass ? "pass" : "FAIL") << "\n";
  return out.str();
}

json zeta_levels(const PlaneSemigroup& sg) {
  json levels = json::array();
  for (int k = 0; k <= sg.g(); ++k) {
    json entry{{"k", k}, {"M", big(sg.M(k))}, {"M_exp", big(BigInt(sg.beta(k) / sg.M(k)))}};
    if (k >= 1) {
      entry["N"] = big(sg.N(k));
      entry["N_exp"] = big(BigInt(sg.n[static_cast<std::size_t>(k)] * sg.beta(k) / sg.N(k)));
    }
    levels.push_back(entry);
  }
  return levels;
}

bool want(const CliConfig& c, const std::string& fallback, const std::string& fmt) {
  return (c.format.empty() ? fallback : c.format) == fmt;
}

void check_format(const CliConfig& c, std::initializer_list<const char*> allowed) {
  if (c.format.empty()) return;
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  throw Error(ErrorKind::InvalidInput, "format '" + c.format + "' is not available for this command");
}

RunResult analyze(const CliConfig& c, const PlaneSemigroup& sg) {
  check_format(c, {"json", "text"});
  const ResolutionGraph graph = build_resolution(sg);
  const FactorProduct z = zeta_from_graph(graph);
  const FactorProduct delta = characteristic_polynomial(sg);
  const BigInt mu = milnor_number(sg);
  const ConjectureReport rep = verify_conjecture(sg);
  const BRecursionTable bt = b_table(sg);
  RunResult res;
  res.status = rep.pass ? kOk : kVerificationFailed;

  if (want(c, "json", "text")) {
    std::ostringstream out;
    out << "gens: " << join(sg.gens) << "\n";
    out << "g: " << sg.g() << "\n";
    out << "e: " << join(sg.e) << "\n";
    out << "n: " << join(sg.n) << "\n";
    for (int i = 1; i <= sg.g(); ++i) {
      out << "b_" << i << ": " << join(sg.b[static_cast<std::size_t>(i)]) << "\n";
    }
    for (const auto& lv : graph.levels) {
      out << "E_" << lv.k << ": r=" << lv.r << " N=" << lv.N << " M=" << lv.M << " weights=(" << join(lv.weights)
          << ") chi_open=" << lv.chi_open << "\n";
    }
    out << "Z = " << render_one_minus(z) << "\n";
    out << "Delta = " << render_t_minus_one(delta) << "\n";
    out << "mu = " << mu << "\n";
    out << "poles: " << poles_line(rep) << "\n";
    out << conjecture_text(rep);
    res.document = out.str();
    return res;
  }

  json b_rows = json::array();
  for (int i = 1; i <= sg.g(); ++i) b_rows.push_back(big_list(sg.b[static_cast<std::size_t>(i)]));
  json table = json::array();
  for (int i = 1; i <= sg.g(); ++i) {
    for (int k = 0; k < i; ++k) table.push_back({{"i", i}, {"k", k}, {"value", big(bt.at(i, k))}});
  }
  json poles = json::array();
  for (const auto& pe : rep.poles) {
    poles.push_back({{"k", pe.k}, {"value", to_string(pe.value)}, {"nu_over_N", pole_fraction(pe)}});
  }
  json doc{{"gens", big_list(sg.gens)},
           {"semigroup", {{"g", sg.g()}, {"e", big_list(sg.e)}, {"n", big_list(sg.n)}, {"b", b_rows}, {"b_table", table}}},
           {"resolution", json::parse(export_graph(graph, GraphFormat::Json))},
           {"zeta",
            {{"factors", json::parse(factor_product_json(z))}, {"text", render_one_minus(z)}, {"levels", zeta_levels(sg)}}},
           {"delta", {{"factors", json::parse(factor_product_json(delta))}, {"text", render_t_minus_one(delta)}}},
           {"milnor", big(mu)},
           {"poles", poles},
           {"conjecture", json::parse(report_json(rep))}};
  res.document = doc.dump(2) + "\n";
  return res;
}

RunResult zeta(const CliConfig& c, const PlaneSemigroup& sg) {
  check_format(c, {"json", "text"});
  const FactorProduct z = zeta_closed_form(sg);
  const FactorProduct delta = characteristic_polynomial(sg);
  RunResult res;
  if (want(c, "text", "text")) {
    res.document = "Z = " + render_one_minus(z) + "\nDelta = " + render_t_minus_one(delta) + "\n";
  } else {
    json doc{{"gens", big_list(sg.gens)},
             {"zeta", json::parse(factor_product_json(z))},
             {"zeta_text", render_one_minus(z)},
             {"levels", zeta_levels(sg)},
             {"delta", json::parse(factor_product_json(delta))},
             {"delta_text", render_t_minus_one(delta)}};
    res.document = doc.dump(2) + "\n";
  }
  return res;
}

RunResult graph(const CliConfig& c, const PlaneSemigroup& sg) {
  check_format(c, {"dot", "json"});
  const ResolutionGraph g = build_resolution(sg);
  RunResult res;
  res.document = export_graph(g, want(c, "dot", "json") ? GraphFormat::Json : GraphFormat::Dot);
  if (res.document.back() != '\n') res.document += "\n";
  return res;
}

RunResult conjecture(const CliConfig& c, const PlaneSemigroup& sg) {
  check_format(c, {"json", "text"});
  const ConjectureReport rep = verify_conjecture(sg);
  RunResult res;
  res.status = rep.pass ? kOk : kVerificationFailed;
  res.document = want(c, "json", "text") ? conjecture_text(rep) : report_json(rep) + "\n";
  return res;
}

RunResult fuzz(const CliConfig& c) {
  check_format(c, {"json", "text"});
  FuzzOptions opts;
  opts.seed = c.seed;
  opts.count = c.count;
  opts.max_g = c.max_g;
  opts.max_gen = c.max_gen;
  opts.dense_mu_limit = c.dense_mu_limit;
  opts.budget = c.budget;
  const FuzzSummary sum = run_fuzz(opts);
  RunResult res;
  res.status = sum.failures.empty() ? kOk : kVerificationFailed;
  if (want(c, "text", "json")) {
    json fails = json::array();
    for (const auto& f : sum.failures) fails.push_back({{"gens", big_list(f.gens)}, {"check", f.check}, {"message", f.message}});
    json doc{{"seed", c.seed},         {"instances", sum.instances}, {"dense_checked", sum.dense_checked},
             {"digit_checks", sum.digit_checks}, {"failures", fails}, {"pass", sum.failures.empty()}};
    res.document = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    for (const auto& f : sum.failures) out << "FAIL " << f.check << " gens=" << join(f.gens) << ": " << f.message << "\n";
    out << "fuzz: seed=" << c.seed << " instances=" << sum.instances << " dense_checked=" << sum.dense_checked
        << " digit_checks=" << sum.digit_checks << " failures=" << sum.failures.size() << "\n";
    res.document = out.str();
  }
  return res;
}

RunResult oracle(const CliConfig& c) {
  check_format(c, {"json", "text"});
  OracleGridOptions opts;
  opts.budget = c.budget;
  opts.draws = c.draws;
  opts.seed = c.seed;
  const OracleSummary sum = run_oracle_grid(opts);
  RunResult res;
  res.status = sum.discrepancies.empty() ? kOk : kVerificationFailed;
  if (want(c, "text", "json")) {
    json doc{{"types", sum.types},
             {"comparisons", sum.comparisons},
             {"covering_cases", sum.covering_cases},
             {"discrepancies", sum.discrepancies},
             {"pass", sum.discrepancies.empty()}};
    res.document = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    for (const auto& d : sum.discrepancies) out << "DISCREPANCY " << d << "\n";
    out << "oracle: types=" << sum.types << " comparisons=" << sum.comparisons
        << " covering_cases=" << sum.covering_cases << " discrepancies=" << sum.discrepancies.size() << "\n";
    res.document = out.str();
  }
  return res;
}

}  // namespace

RunResult run(const CliConfig& c) {
  try {
    switch (c.command) {
      case Command::Fuzz: return fuzz(c);
      case Command::Oracle: return oracle(c);
      default: break;
    }
    if (c.gens.empty()) throw Error(ErrorKind::InvalidInput, "generators are required");
    const PlaneSemigroup sg = build_semigroup(c.gens);
    switch (c.command) {
      case Command::Analyze: return analyze(c, sg);
      case Command::Zeta: return zeta(c, sg);
      case Command::Graph: return graph(c, sg);
      case Command::Conjecture: return conjecture(c, sg);
      default: break;
    }
    throw Error(ErrorKind::InvalidInput, "unknown command");
  } catch (const Error& err) {
    switch (err.kind()) {
      case ErrorKind::InvalidInput:
      case ErrorKind::NotCoprime:
      case ErrorKind::NotPlane:
      case ErrorKind::BudgetExceeded:
        return {kInvalidInput, "", err.what()};
      default:
        return {kVerificationFailed, "", err.what()};
    }
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monodromy zeta functions and pole verification for space monomial curves"};
  app.require_subcommand(1);
  CliConfig config;
  std::string gens_opt, gens_pos;

  auto add_gens = [&](CLI::App* sub) {
    sub->add_option("generators", gens_pos, "Comma-separated generators, e.g. 4,6,13");
    sub->add_option("--gens", gens_opt, "Comma-separated generators");
  };
  auto add_common = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("--format", config.format, "Output format (" + formats + ")");
    sub->add_option("-o,--output", config.output, "Write the document to this file");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-group-order", config.budget.max_group_order, "Largest group order enumerated");
    sub->add_option("--max-exponent", config.budget.max_exponent, "Largest exponent enumerated");
    sub->add_option("--max-rank", config.budget.max_rank, "Largest coordinate index enumerated");
    sub->add_option("--max-poly-degree", config.budget.max_poly_degree, "Largest dense polynomial degree");
    sub->add_option("--max-search", config.budget.max_search_space, "Largest exhaustive digit search");
  };

  struct Sub {
    const char* name;
    const char* help;
    Command cmd;
    const char* formats;
  };
  const Sub subs[] = {
      {"analyze", "Full report: invariants, resolution, Z, Delta, mu, poles, verdicts", Command::Analyze, "json|text"},
      {"zeta", "Monodromy zeta function and characteristic polynomial", Command::Zeta, "text|json"},
      {"graph", "Dual graph of the resolution", Command::Graph, "dot|json"},
      {"conjecture", "Pole verification report", Command::Conjecture, "json|text"},
      {"fuzz", "Cross-check random semigroups", Command::Fuzz, "text|json"},
      {"oracle", "Compare closed-form counts with enumeration", Command::Oracle, "text|json"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, s.formats);
    if (s.cmd == Command::Fuzz) {
      sub->add_option("--seed", config.seed, "Campaign seed");
      sub->add_option("--count", config.count, "Number of semigroups");
      sub->add_option("--max-g", config.max_g, "Largest genus g");
      sub->add_option("--max-gen", config.max_gen, "Largest generator");
      sub->add_option("--dense-mu-limit", config.dense_mu_limit, "Expand Delta densely up to this Milnor number");
      add_budget(sub);
    } else if (s.cmd == Command::Oracle) {
      sub->add_option("--seed", config.seed, "Seed for the random constants");
      sub->add_option("--draws", config.draws, "Constant draws per type");
      add_budget(sub);
    } else {
      add_gens(sub);
    }
    sub->callback([&config, cmd = s.cmd] { config.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    const std::string& text = !gens_opt.empty() ? gens_opt : gens_pos;
    if (!text.empty()) config.gens = parse_gens(text);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  const RunResult res = run(config);
  if (!res.error.empty()) err << "error: " << res.error << "\n";
  if (!res.document.empty()) {
    if (config.output.empty()) {
      out << res.document;
    } else {
      std::ofstream file(config.output, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << config.output << "\n";
        return kInvalidInput;
      }
      file << res.document;
    }
  }
  return res.status;
}

}  // namespace monoconj::cli
