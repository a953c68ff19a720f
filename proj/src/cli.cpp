#include "mra/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mra/catalog.hpp"
#include "mra/fixpoint.hpp"
#include "mra/json_io.hpp"
#include "mra/repro.hpp"

namespace mra {

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kEngine = 3;

UniversePtr universe_from_csv(const std::string& csv) {
  std::vector<std::string> names;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ',')) names.push_back(item);
  return make_universe(std::move(names));
}

/// A binding value is an inline literal when it starts with '<' or '{',
/// otherwise it names a JSON file.
Mrel load_mrel(const UniversePtr& u, const std::string& value) {
  if (!value.empty() && (value[0] == '<' || value[0] == '{')) {
    return parse_mrel_literal(u, value);
  }
  std::ifstream in(value);
  if (!in) throw std::invalid_argument("cannot open file: " + value);
  nlohmann::json j;
  in >> j;
  return mrel_from_json(u, j);
}

void print_verdict(std::ostream& out, const std::string& name, const Verdict& v) {
  out << "LAW " << name << ' ';
  switch (v.status) {
    case Verdict::Status::Holds: out << "HOLDS"; break;
    case Verdict::Status::Refuted: out << "REFUTED"; break;
    case Verdict::Status::Inconclusive: out << "INCONCLUSIVE"; break;
  }
  if (v.witness) out << ' ' << witness_to_string(*v.witness);
  if (v.alg_witness) {
    const auto& alg = builtin_counterexample_algebra();
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [var, e] : *v.alg_witness) j[var] = alg.carrier[static_cast<std::size_t>(e)];
    out << ' ' << j.dump();
  }
  out << "  [" << v.space << "]\n";
}

struct SuiteOptions {
  int n = 2;
  std::string mode = "auto";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
};

int cmd_eval(const std::string& universe_csv, const std::string& expr,
             const std::vector<std::string>& binds, std::ostream& out) {
  const auto u = universe_from_csv(universe_csv);
  Env env;
  for (const auto& b : binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--bind expects name=value");
    env.emplace(b.substr(0, eq), load_mrel(u, b.substr(eq + 1)));
  }
  const Mrel result = eval_term(parse_term(expr), u, env);
  out << mrel_to_json(result).dump() << '\n';
  return kOk;
}

int check_one_law(const Law& law, const SuiteOptions& opt, std::ostream& out) {
  Verdict v;
  if (!law.expect_valid || law.model == Model::Algebra) {
    v = hunt_law(law, std::max(opt.n, 3), opt.samples, opt.seed);
  } else if (opt.mode == "sampled") {
    v = check_law(law, make_universe(opt.n), CheckMode::sampled(opt.samples, opt.seed));
  } else if (opt.mode == "exhaustive") {
    v = check_law(law, make_universe(opt.n), CheckMode::exhaustive());
  } else {
    const auto u = make_universe(opt.n);
    try {
      v = check_law(law, u, CheckMode::exhaustive());
    } catch (const std::invalid_argument&) {
      v = check_law(law, u, CheckMode::sampled(opt.samples, opt.seed));
    }
  }
  print_verdict(out, law.name, v);
  const bool as_expected = law.expect_valid ? v.status != Verdict::Status::Refuted
                                            : v.status == Verdict::Status::Refuted;
  return as_expected ? kOk : kRefuted;
}

int cmd_check_expr(const std::string& expr, const SuiteOptions& opt, std::ostream& out) {
  Law law;
  law.name = "ad-hoc";
  law.conclusion = expr;
  law.concl = parse_cond(expr);
  law.vars = cond_vars(law.concl);
  law.expect_valid = true;

  Verdict v;
  if (opt.mode == "sampled") {
    v = check_law(law, make_universe(opt.n), CheckMode::sampled(opt.samples, opt.seed));
  } else if (opt.mode == "exhaustive") {
    v = check_law(law, make_universe(opt.n), CheckMode::exhaustive());
  } else {
    v = hunt_law(law, opt.n, opt.samples, opt.seed);
    if (v.status == Verdict::Status::Inconclusive) {
      // No witness found; report the strongest clean verdict we can.
      const auto u = make_universe(opt.n);
      try {
        v = check_law(law, u, CheckMode::exhaustive());
      } catch (const std::invalid_argument&) {
        v = check_law(law, u, CheckMode::sampled(opt.samples, opt.seed));
      }
    }
  }
  print_verdict(out, law.name, v);
  return v.status == Verdict::Status::Refuted ? kRefuted : kOk;
}

int cmd_fixpoint(const std::string& op, const std::string& universe_csv,
                 const std::string& input, const std::string& rhs, std::ostream& out) {
  const auto u = universe_from_csv(universe_csv);
  const Mrel x = load_mrel(u, input);
  const bool needs_rhs = op == "star_binary" || op == "omega_binary";
  if (needs_rhs && rhs.empty()) throw std::invalid_argument("--rhs required for " + op);
  const Mrel y = needs_rhs ? load_mrel(u, rhs) : Mrel::empty(u);
  const Mrel ones = one_sigma(u);

  FixpointResult r;
  if (op == "star") {
    r = lfp({[&](const Mrel& w) { return join(ones, seq(x, w)); }, "1s + x.X"}, u);
  } else if (op == "star_binary") {
    r = lfp({[&](const Mrel& w) { return join(y, seq(x, w)); }, "y + x.X"}, u);
  } else if (op == "omega") {
    r = gfp({[&](const Mrel& w) { return seq(x, w); }, "x.X"}, u);
  } else if (op == "omega_binary") {
    r = gfp({[&](const Mrel& w) { return join(y, seq(x, w)); }, "y + x.X"}, u);
  } else if (op == "infinity") {
    r = gfp({[&](const Mrel& w) { return join(ones, seq(x, w)); }, "1s + x.X"}, u);
  } else if (op == "nabla") {
    // Iterated on the subidentity lattice; count the diamond applications.
    Mrel p = ones;
    int iterations = 0;
    for (;;) {
      ++iterations;
      Mrel next = domain(seq(x, p));
      if (next == p) break;
      p = std::move(next);
    }
    r = {std::move(p), iterations, true};
  } else {
    throw std::invalid_argument("unknown fixpoint operation: " + op);
  }

  nlohmann::json j;
  j["value"] = mrel_to_json(r.value);
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  out << j.dump() << '\n';
  return kOk;
}

nlohmann::json law_to_json(const Law& law) {
  nlohmann::json j;
  j["name"] = law.name;
  j["group"] = law.group;
  j["anchor"] = law.anchor;
  j["hypotheses"] = nlohmann::json::array();
  for (const auto& h : law.hyps) j["hypotheses"].push_back(to_string(h));
  j["lhs"] = to_string(law.concl.lhs);
  j["rhs"] = to_string(law.concl.rhs);
  j["rel"] = rel_symbol(law.concl.rel);
  j["expected"] = law.expect_valid ? "Valid" : "Refuted";
  j["model"] = law.model == Model::Algebra ? "algebra" : "multirelations";
  return j;
}

int cmd_algebra(const std::string& axioms, std::ostream& out) {
  const auto& alg = builtin_counterexample_algebra();
  const AxiomSet set = axioms == "c-monoid" ? AxiomSet::CMonoid : AxiomSet::CTrioid;
  const auto report = check_algebra(alg, set);
  for (const auto& item : report.items) {
    out << "AXIOM " << item.axiom << ' ' << (item.holds ? "HOLDS" : "REFUTED");
    if (!item.holds) {
      out << " at";
      for (const auto& [var, elem] : item.witness) out << ' ' << var << '=' << elem;
    }
    out << '\n';
  }
  int rc = report.all_hold() ? kOk : kRefuted;

  // The inequations this algebra exists to refute.
  for (const auto* law : catalog_group("algebra-refuted")) {
    const Verdict v = check_law_algebra(*law, alg);
    print_verdict(out, law->name, v);
    if (v.status != Verdict::Status::Refuted) rc = kRefuted;
  }
  return rc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite binary multirelation workbench"};
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
  std::string universe_csv, expr;
  std::vector<std::string> binds;
  eval_cmd->add_option("--universe", universe_csv, "comma-separated element labels")->required();
  eval_cmd->add_option("--expr", expr, "expression in the term syntax")->required();
  eval_cmd->add_option("--bind", binds, "variable binding name=<file or literal>");

  // check
  auto* check_cmd = app.add_subcommand("check", "check laws");
  std::string law_name, check_expr;
  bool check_all = false, roundtrips = false;
  SuiteOptions opt;
  check_cmd->add_option("--law", law_name, "catalog law name");
  check_cmd->add_option("--expr", check_expr, "ad-hoc law (term REL term)");
  check_cmd->add_flag("--all", check_all, "run the whole catalog");
  check_cmd->add_flag("--roundtrips", roundtrips, "check the triangle round-trip identities");
  check_cmd->add_option("--n", opt.n, "universe size")->default_val(2);
  check_cmd->add_option("--mode", opt.mode, "auto|exhaustive|sampled")->default_val("auto");
  check_cmd->add_option("--samples", opt.samples, "samples in sampled mode")->default_val(100000);
  check_cmd->add_option("--seed", opt.seed, "random seed")->default_val(42);
  bool check_json = false;
  check_cmd->add_flag("--json", check_json, "JSON output for --roundtrips");

  // hunt
  auto* hunt_cmd = app.add_subcommand("hunt", "search for a counterexample");
  std::string hunt_expr, hunt_law_name;
  int hunt_max_n = 3;
  std::uint64_t hunt_samples = 100000, hunt_seed = 42;
  hunt_cmd->add_option("--expr", hunt_expr, "law to refute (term REL term)");
  hunt_cmd->add_option("--law", hunt_law_name, "catalog law name");
  hunt_cmd->add_option("--max-n", hunt_max_n, "largest universe size")->default_val(3);
  hunt_cmd->add_option("--samples", hunt_samples, "samples per size")->default_val(100000);
  hunt_cmd->add_option("--seed", hunt_seed, "random seed")->default_val(42);

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "list the law catalog");
  bool catalog_json = false;
  std::string catalog_group_filter;
  catalog_cmd->add_flag("--json", catalog_json, "one JSON object per line");
  catalog_cmd->add_option("--group", catalog_group_filter, "restrict to one group");

  // repro
  auto* repro_cmd = app.add_subcommand("repro", "replay stored counterexamples");
  bool repro_all = false, repro_list = false;
  std::string repro_name;
  repro_cmd->add_flag("--all", repro_all, "replay everything");
  repro_cmd->add_flag("--list", repro_list, "list reproduction names");
  repro_cmd->add_option("--name", repro_name, "replay one reproduction");

  // fixpoint
  auto* fix_cmd = app.add_subcommand("fixpoint", "compute an iteration operator");
  std::string fix_op, fix_universe, fix_input, fix_rhs;
  fix_cmd->add_option("--op", fix_op, "star|star_binary|omega|omega_binary|infinity|nabla")
      ->required();
  fix_cmd->add_option("--universe", fix_universe, "comma-separated element labels")->required();
  fix_cmd->add_option("--input", fix_input, "multirelation (file or literal)")->required();
  fix_cmd->add_option("--rhs", fix_rhs, "second multirelation for binary operators");

  // algebra
  auto* alg_cmd = app.add_subcommand("algebra", "check the builtin four-element algebra");
  std::string alg_axioms = "c-trioid";
  alg_cmd->add_option("--axioms", alg_axioms, "c-monoid|c-trioid")->default_val("c-trioid");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(universe_csv, expr, binds, out);

    if (check_cmd->parsed()) {
      if (roundtrips) {
        const auto report = check_iso_roundtrips(make_universe(opt.n), opt.samples, opt.seed);
        for (const auto& item : report.items) {
          if (check_json) {
            nlohmann::json j;
            j["identity"] = item.identity;
            j["status"] = item.holds ? "holds" : "violated";
            if (item.witness) j["witness"] = mrel_to_json(*item.witness);
            out << j.dump() << '\n';
          } else {
            out << (item.holds ? "HOLDS    " : "VIOLATED ") << item.identity;
            if (item.witness) out << "  at x = " << to_string(*item.witness);
            out << '\n';
          }
        }
        out << (report.exhaustive ? "exhaustive" : "sampled") << ", " << report.checked
            << " multirelations\n";
        return report.all_hold() ? kOk : kRefuted;
      }
      if (check_all) {
        const auto report = run_suite(catalog(), opt.n, CheckMode::sampled(opt.samples, opt.seed),
                                      &out);
        out << report.mismatches << " mismatches in " << report.entries.size() << " laws\n";
        return report.mismatches == 0 ? kOk : kRefuted;
      }
      if (!law_name.empty()) return check_one_law(catalog_law(law_name), opt, out);
      if (!check_expr.empty()) return cmd_check_expr(check_expr, opt, out);
      err << "check: need --law, --expr, --all or --roundtrips\n";
      return kUsage;
    }

    if (hunt_cmd->parsed()) {
      Law law;
      if (!hunt_law_name.empty()) {
        law = catalog_law(hunt_law_name);
      } else if (!hunt_expr.empty()) {
        law.name = "ad-hoc";
        law.conclusion = hunt_expr;
        law.concl = parse_cond(hunt_expr);
        law.vars = cond_vars(law.concl);
      } else {
        err << "hunt: need --expr or --law\n";
        return kUsage;
      }
      const Verdict v = hunt_law(law, hunt_max_n, hunt_samples, hunt_seed);
      print_verdict(out, law.name, v);
      return v.status == Verdict::Status::Refuted ? kOk : kRefuted;
    }

    if (catalog_cmd->parsed()) {
      for (const auto& law : catalog()) {
        if (!catalog_group_filter.empty() && law.group != catalog_group_filter) continue;
        if (catalog_json) {
          out << law_to_json(law).dump() << '\n';
        } else {
          out << law.name << " [" << law.group << "] "
              << (law.expect_valid ? "Valid" : "Refuted") << ": " << to_string(law.concl);
          for (const auto& h : law.hyps) out << "  if " << to_string(h);
          out << '\n';
        }
      }
      return kOk;
    }

    if (repro_cmd->parsed()) {
      if (repro_list) {
        for (const auto& name : repro_names()) out << name << '\n';
        return kOk;
      }
      if (repro_all) {
        const int failures = run_all_repro(out);
        out << (failures == 0 ? "all reproductions pass" : "reproduction failures") << '\n';
        return failures == 0 ? kOk : kRefuted;
      }
      if (!repro_name.empty()) return run_repro(repro_name, out) ? kOk : kRefuted;
      err << "repro: need --all, --list or --name\n";
      return kUsage;
    }

    if (fix_cmd->parsed()) return cmd_fixpoint(fix_op, fix_universe, fix_input, fix_rhs, out);
    if (alg_cmd->parsed()) return cmd_algebra(alg_axioms, out);

    err << "no command\n";
    return kUsage;
  } catch (const FixpointError& e) {
    err << "engine failure: " << e.what() << '\n';
    return kEngine;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kEngine;
  }
}

}  // namespace mra
