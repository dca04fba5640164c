// The `ckr` command line: checking, translation, model enumeration,
// entailment, conjunctive and aggregate queries, and weighted measures.
#include "ckr/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ckr/depgraph.hpp"
#include "ckr/measures.hpp"
#include "ckr/parser.hpp"
#include "ckr/query.hpp"
#include "ckr/translate.hpp"

namespace ckr {

namespace {

using nlohmann::json;

struct Common {
  std::string input;
  std::string relation_priority;
  bool emit_json = false;
  std::uint64_t max_guesses = std::uint64_t(1) << 20;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("input", c.input, "input .ckr file")->required();
  cmd->add_option("--relation-priority", c.relation_priority,
                  "comma-separated relation names, highest priority first");
  cmd->add_flag("--json", c.emit_json, "machine-readable JSON output");
  cmd->add_option("--max-guesses", c.max_guesses,
                  "cap on the overriding guess space");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CkrError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Sckr load(const Common& c) {
  Sckr k = parse_sckr(read_file(c.input));
  if (!c.relation_priority.empty()) {
    std::vector<Relation> reordered;
    std::string cur;
    std::vector<std::string> names;
    std::stringstream ss(c.relation_priority);
    while (std::getline(ss, cur, ',')) names.push_back(cur);
    for (const auto& n : names) {
      bool found = false;
      for (const auto& r : k.structure.relations)
        if (r.name == n) {
          reordered.push_back(r);
          found = true;
        }
      if (!found) throw CkrError("unknown relation '" + n + "'");
    }
    if (reordered.size() != k.structure.relations.size())
      throw CkrError("--relation-priority must list every relation");
    k.structure.relations = std::move(reordered);
  }
  auto diags = validate_normal_form(k);
  if (!diags.empty()) {
    std::string msg;
    for (const auto& d : diags)
      msg += d.context + ": " + d.message + "\n";
    throw CkrError("knowledge base is not in normal form:\n" + msg);
  }
  return k;
}

SolveResult solve(const Sckr& k, const Common& c) {
  SolveOptions opts;
  opts.max_guesses = c.max_guesses;
  return solve_ckr(k, opts);
}

int finish(const Common& c, const std::string& query, const json& result,
           size_t preferred, size_t justified, bool truth) {
  if (c.emit_json) {
    json out;
    out["query"] = query;
    out["result"] = result;
    out["preferred_models"] = preferred;
    out["justified_models"] = justified;
    std::cout << out.dump(2) << "\n";
  }
  return truth ? 0 : 1;
}

json binding_json(const Binding& b) {
  json out = json::object();
  for (const auto& [v, t] : b) out[v] = t;
  return out;
}

std::string clash_summary(const JustifiedModel& m) {
  std::string out;
  for (const auto& [rel, per_ctx] : m.clash_maps)
    for (const auto& [ctx, set] : per_ctx)
      for (const auto& ca : set) {
        if (!out.empty()) out += ", ";
        out += ca.to_string() + "@" + ctx;
      }
  return out.empty() ? "(none)" : out;
}

int run_check(const Common& c, bool eval_disconnected) {
  Sckr k = parse_sckr(read_file(c.input));
  auto diags = validate_normal_form(k);
  if (!diags.empty()) {
    for (const auto& d : diags)
      std::cerr << d.context << ": " << d.message << "\n";
    return 1;
  }
  compute_closures(k.structure);
  if (eval_disconnected) {
    DisconnectVerdict v = is_eval_disconnected(k);
    if (!c.emit_json) std::cout << (v.disconnected ? "DISCONNECTED" : "CONNECTED") << "\n";
    json res = v.disconnected ? "DISCONNECTED" : "CONNECTED";
    return finish(c, "check --eval-disconnected", res, 0, 0, v.disconnected);
  }
  if (!c.emit_json) std::cout << "OK\n";
  return finish(c, "check", "OK", 0, 0, true);
}

int run_translate(const Common& c, const std::string& output) {
  Sckr k = load(c);
  std::string text = emit_asp_text(k);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw CkrError("cannot write '" + output + "'");
    out << text;
  }
  return 0;
}

int run_models(const Common& c, bool all, bool justified_only) {
  Sckr k = load(c);
  SolveResult r = solve(k, c);
  OrderClosures cl = compute_closures(k.structure);
  std::vector<JustifiedModel> preferred =
      preferred_filter(r.models, k, cl);
  const std::vector<JustifiedModel>& shown =
      (all || justified_only) ? r.models : preferred;
  if (!c.emit_json) {
    std::cout << "justified models: " << r.models.size() << "\n";
    std::cout << "preferred models: " << preferred.size() << "\n";
    for (size_t i = 0; i < shown.size(); ++i)
      std::cout << "model " << (i + 1) << ": overrides " << clash_summary(shown[i])
                << "\n";
  }
  json res = json::array();
  for (const auto& m : shown) res.push_back(clash_summary(m));
  return finish(c, "models", res, preferred.size(), r.models.size(),
                !r.models.empty());
}

int run_entails(const Common& c, const std::string& query_text) {
  Sckr k = load(c);
  ConjunctiveQuery q = parse_query(query_text);
  if (q.atoms.size() != 1 || is_query_var(q.atoms[0].context))
    throw CkrError("entails expects a single ground contextualized assertion");
  for (const auto& t : q.atoms[0].args)
    if (is_query_var(t))
      throw CkrError("entails expects a ground assertion");
  const QueryAtom& a = q.atoms[0];
  NormalAxiom ax =
      a.args.size() == 1
          ? NormalAxiom{AxiomKind::ClassAssertion, {a.pred, a.args[0]}}
          : NormalAxiom{AxiomKind::RoleAssertion,
                        {a.pred, a.args[0], a.args[1]}};
  SolveResult r = solve(k, c);
  OrderClosures cl = compute_closures(k.structure);
  std::vector<JustifiedModel> preferred = preferred_filter(r.models, k, cl);
  bool truth = c_entails(preferred, a.context, ax);
  if (!c.emit_json) std::cout << (truth ? "true" : "false") << "\n";
  return finish(c, query_text, truth, preferred.size(), r.models.size(),
                truth);
}

int run_query(const Common& c, const std::string& query_text, bool brave) {
  Sckr k = load(c);
  ConjunctiveQuery q = parse_query(query_text);
  SolveResult r = solve(k, c);
  OrderClosures cl = compute_closures(k.structure);
  std::vector<JustifiedModel> preferred = preferred_filter(r.models, k, cl);
  bool has_vars = false;
  for (const auto& a : q.atoms) {
    if (is_query_var(a.context)) has_vars = true;
    for (const auto& t : a.args)
      if (is_query_var(t)) has_vars = true;
  }
  if (!has_vars) {
    bool truth = bcq_entails(preferred, q);
    if (!c.emit_json) std::cout << (truth ? "true" : "false") << "\n";
    return finish(c, query_text, truth, preferred.size(), r.models.size(),
                  truth);
  }
  std::set<Binding> answers = consequences(preferred, q, brave);
  json res = json::array();
  for (const auto& b : answers) {
    if (!c.emit_json) {
      std::string line;
      for (const auto& [v, t] : b) line += (line.empty() ? "" : ", ") + v + "=" + t;
      std::cout << line << "\n";
    }
    res.push_back(binding_json(b));
  }
  return finish(c, query_text, res, preferred.size(), r.models.size(),
                !answers.empty());
}

int run_aggregate(const Common& c, const std::string& query_text) {
  Sckr k = load(c);
  AggregateQuery q = parse_aggregate_query(query_text);
  SolveResult r = solve(k, c);
  OrderClosures cl = compute_closures(k.structure);
  std::vector<JustifiedModel> preferred = preferred_filter(r.models, k, cl);
  std::vector<AggregateRow> rows = epistemic_aggregate(preferred, q);
  json res = json::array();
  for (const auto& row : rows) {
    std::string line;
    for (const auto& g : row.group) line += g + ", ";
    line += row.value;
    if (!c.emit_json) std::cout << line << "\n";
    json jr;
    jr["group"] = row.group;
    jr["value"] = row.value;
    res.push_back(jr);
  }
  return finish(c, query_text, res, preferred.size(), r.models.size(),
                !rows.empty());
}

int run_weight(const Common& c, const std::string& semiring_name,
               const std::string& formula_text, const std::string& builtin) {
  Sckr k = load(c);
  SolveResult r = solve(k, c);
  OrderClosures cl = compute_closures(k.structure);
  std::vector<JustifiedModel> preferred = preferred_filter(r.models, k, cl);
  std::vector<std::set<std::string>> interps;
  for (const auto& m : r.models) {
    std::set<std::string> names;
    for (int a : m.answer_set)
      names.insert(r.ground.program.atoms.name(a));
    interps.push_back(std::move(names));
  }
  std::string rendered;
  std::string query = "weight";
  if (!builtin.empty()) {
    query = "weight --builtin " + builtin;
    if (builtin == "mu_opt") {
      MuOpt m = build_mu_opt(k, r.ground);
      rendered = overall_weight(interps, m.formula, m.semiring).to_string();
    } else if (builtin == "mu_one") {
      std::vector<std::string> var_order;
      for (int a = 0; a < r.ground.program.atoms.size(); ++a)
        var_order.push_back(r.ground.program.atoms.name(a));
      std::sort(var_order.begin(), var_order.end());
      SemiringDef s = make_r_one(k, r.ground, cl, var_order);
      WeightedFormula f = build_alpha_one(r.ground);
      rendered = overall_weight(interps, f, s).to_string();
    } else if (builtin == "mu_all") {
      auto per_ctx = mu_all(k, r.ground, cl, interps);
      std::string out;
      for (const auto& [ctx, opt] : per_ctx)
        out += ctx + ": " + Value::of_opt(opt).to_string() + "\n";
      rendered = out;
    } else {
      throw CLI::ValidationError("--builtin",
                                 "expected mu_opt, mu_one or mu_all");
    }
  } else {
    query = "weight --semiring " + semiring_name + " --formula " + formula_text;
    SemiringDef s = make_semiring(semiring_name);
    WeightedFormula f = parse_weighted_formula(formula_text);
    rendered = overall_weight(interps, f, s).to_string();
  }
  if (!c.emit_json) std::cout << rendered << "\n";
  return finish(c, query, rendered, preferred.size(), r.models.size(), true);
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"reasoner for contextualized knowledge repositories"};
  app.require_subcommand(1);

  Common c_check, c_translate, c_models, c_entails, c_query, c_agg, c_weight;
  bool eval_disconnected = false;
  std::string output, entails_text, query_text, agg_text;
  bool all = false, justified_only = false, brave = false;
  std::string semiring_name = "nat", formula_text = "1", builtin;

  CLI::App* check = app.add_subcommand("check", "parse and validate");
  add_common(check, c_check);
  check->add_flag("--eval-disconnected", eval_disconnected,
                  "report eval-disconnectedness");

  CLI::App* translate = app.add_subcommand("translate", "emit the ASP encoding");
  add_common(translate, c_translate);
  translate->add_option("-o,--output", output, "output file (default stdout)");

  CLI::App* models = app.add_subcommand("models", "enumerate models");
  add_common(models, c_models);
  models->add_flag("--all", all, "show all justified models");
  models->add_flag("--justified-only", justified_only,
                   "alias for --all (skip preference filtering in the listing)");

  CLI::App* entails = app.add_subcommand("entails", "contextual entailment");
  add_common(entails, c_entails);
  entails->add_option("query", entails_text, "assertion, e.g. 'c : A(a)'")
      ->required();

  CLI::App* query = app.add_subcommand("query", "conjunctive query");
  add_common(query, c_query);
  query->add_option("query", query_text, "conjunction of contextualized atoms")
      ->required();
  query->add_flag("--brave", brave, "possible answers instead of certain ones");

  CLI::App* aggregate = app.add_subcommand("aggregate", "epistemic aggregate");
  add_common(aggregate, c_agg);
  aggregate->add_option("query", agg_text, "e.g. 'q(X, count(Y)) <- X : S(Y)'")
      ->required();

  CLI::App* weight = app.add_subcommand("weight", "weighted measure");
  add_common(weight, c_weight);
  weight->add_option("--semiring", semiring_name, "nat, bool, trop or max");
  weight->add_option("--formula", formula_text, "weighted formula");
  weight->add_option("--builtin", builtin, "mu_opt, mu_one or mu_all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(c_check, eval_disconnected);
    if (translate->parsed()) return run_translate(c_translate, output);
    if (models->parsed()) return run_models(c_models, all, justified_only);
    if (entails->parsed()) return run_entails(c_entails, entails_text);
    if (query->parsed()) return run_query(c_query, query_text, brave);
    if (aggregate->parsed()) return run_aggregate(c_agg, agg_text);
    if (weight->parsed())
      return run_weight(c_weight, semiring_name, formula_text, builtin);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ckr
