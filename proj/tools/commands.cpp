#include "infothermo/cli/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "infothermo/cli/scenario.hpp"
#include "infothermo/engine/engine.hpp"
#include "infothermo/harness/harness.hpp"
#include "json.hpp"

namespace infothermo::cli {

namespace {

using Json = nlohmann::ordered_json;
using infothermo::to_string;

/// What a command produced: a text rendering, the structured result and notes.
struct Outcome {
  std::string text;
  Json result;
  std::vector<std::string> diagnostics;
  int code = kExitOk;
};

struct Context {
  Scenario scenario;
  std::unique_ptr<ModelOracle> model;
  int digits = engine::kDefaultDigits;

  std::string name(const StateExpr& a) const { return model->describe(a); }
  std::string name(const Eidostate& e) const { return model->describe(e); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

macro::Mutation parse_mutation(const std::string& text) {
  using macro::Mutation;
  for (Mutation m : {Mutation::None, Mutation::DropQCriterion, Mutation::FlipEntropyCriterion,
                     Mutation::BreakRecordFreeness}) {
    if (macro::to_string(m) == text) return m;
  }
  throw DomainError("unknown mutation '" + text + "'");
}

Json probability_json(const engine::Probability& p, int digits) {
  Json j;
  j["exact"] = p.exact ? Json(to_string(*p.exact)) : Json(nullptr);
  j["decimal"] = p.to_decimal(digits);
  return j;
}

std::string probability_text(const engine::Probability& p, int digits) {
  return p.exact ? to_string(*p.exact) + " = " + p.to_decimal(digits) : p.to_decimal(digits);
}

Outcome classify_cmd(const Context& ctx, const Eidostate& a, const Eidostate& b) {
  const ProcessType t = engine::classify({a, b}, *ctx.model);
  return {to_string(t), Json{{"type", to_string(t)}}, {}};
}

Outcome entropy_cmd(const Context& ctx, const Eidostate& e) {
  const ExactEntropy s = e.is_singleton() ? ctx.model->state_entropy(e.as_state())
                                          : engine::entropy_uniform(e, *ctx.model);
  Outcome o;
  // The unmerged multiset: every element's entropy exponents side by side.
  std::optional<std::string> raw;
  try {
    std::string m = "{";
    bool first = true;
    for (const auto& x : e.elements(engine::kEnumerationCap)) {
      const ExactEntropy sx = ctx.model->state_entropy(x);
      for (const auto& q : sx.exponents()) {
        m += (first ? "" : ", ") + to_string(q);
        first = false;
      }
    }
    raw = m + "}";
  } catch (const ResourceError&) {
    o.diagnostics.push_back("too many elements to list the unmerged multiset");
  }
  o.result["multiset"] = raw ? Json(*raw) : Json(nullptr);
  o.result["exact"] = s.exact_string();
  o.result["rational"] = s.rational_value() ? Json(to_string(*s.rational_value())) : Json(nullptr);
  o.result["decimal"] = s.to_decimal(ctx.digits);
  std::ostringstream t;
  if (raw) t << "multiset " << *raw << "\n";
  t << "exact " << s.exact_string() << "\n";
  t << "decimal " << s.to_decimal(ctx.digits);
  o.text = t.str();
  return o;
}

Outcome prob_cmd(const Context& ctx, const StateExpr& a, const Eidostate& e) {
  const auto p = engine::entropic_probability(a, e, *ctx.model, ctx.digits);
  return {"P(" + ctx.name(a) + " | " + ctx.name(e) + ") = " + probability_text(p, ctx.digits),
          probability_json(p, ctx.digits),
          {}};
}

Outcome prob_report_cmd(const Context& ctx, const Eidostate& e) {
  const auto rep = engine::shannon_decomposition(e, *ctx.model, ctx.digits);
  Outcome o;
  std::ostringstream t;
  Json rows = Json::array();
  for (const auto& [x, p] : rep.support) {
    t << "P(" << ctx.name(x) << ") = " << probability_text(p, ctx.digits) << "\n";
    Json row = probability_json(p, ctx.digits);
    row["state"] = ctx.name(x);
    rows.push_back(row);
  }
  const int d = ctx.digits;
  t << "S(E) = " << rep.entropy_total.to_decimal(d) << "\n";
  t << "<S> = " << rep.mean_state_entropy.to_decimal(d) << "\n";
  t << "H = " << rep.shannon_term.to_decimal(d) << "\n";
  char defect[32];
  std::snprintf(defect, sizeof defect, "%.3e", rep.defect.to_double());
  t << "|S(E) - (<S> + H)| = " << defect;
  o.text = t.str();
  o.result = Json{{"probabilities", rows},
                  {"entropy", rep.entropy_total.to_decimal(d)},
                  {"mean_state_entropy", rep.mean_state_entropy.to_decimal(d)},
                  {"shannon", rep.shannon_term.to_decimal(d)},
                  {"defect", defect}};
  return o;
}

Outcome irrev_cmd(const Context& ctx, const StateExpr& a, const StateExpr& b, int qmax) {
  const auto est = engine::irreversibility_estimate(a, b, qmax, *ctx.model);
  Outcome o;
  const auto lo = BigReal(est.lower, 128).to_decimal(ctx.digits);
  const auto hi = BigReal(est.upper, 128).to_decimal(ctx.digits);
  o.text = "[" + to_string(est.lower) + ", " + to_string(est.upper) + "]\ndecimal [" + lo + ", " + hi +
           "]\nwidth " + to_string(Rational(est.upper - est.lower));
  o.result = Json{{"lower", to_string(est.lower)},      {"upper", to_string(est.upper)},
                  {"lower_decimal", lo},               {"upper_decimal", hi},
                  {"width", to_string(Rational(est.upper - est.lower))},
                  {"qmax", est.q_max},                 {"complete", est.complete},
                  {"arrow_calls", est.arrow_calls}};
  if (!est.complete) o.diagnostics.push_back("a search hit its cap; the bracket is valid but may be loose");
  return o;
}

Outcome demon_cmd(const Context& ctx, const Eidostate& a, const Eidostate& b, std::size_t nmax) {
  const auto r = engine::min_information_to_transform(a, b, nmax, *ctx.model);
  using S = engine::InformationResult::Status;
  Outcome o;
  o.result = Json{{"status", engine::to_string(r.status)}};
  switch (r.status) {
    case S::Found:
      o.text = "n = " + std::to_string(r.n);
      o.result["n"] = r.n;
      break;
    case S::Blocked: o.text = "blocked"; break;
    case S::NotFoundWithinBound: o.text = "not found within n <= " + std::to_string(nmax); break;
  }
  return o;
}

Outcome landauer_cmd(const Context& ctx, const StateExpr& a, const StateExpr& b) {
  const auto v = engine::landauer_check(a, b, *ctx.model);
  Outcome o;
  const std::string margin = v.exact_margin ? to_string(*v.exact_margin) : v.margin.to_decimal(ctx.digits);
  o.result = Json{{"applicable", v.applicable}, {"holds", v.holds}, {"margin", margin}};
  if (!v.applicable) {
    o.text = "not applicable: a + I_b -/-> b";
  } else {
    o.text = std::string(v.holds ? "holds" : "violated") + "\nS(b) - S(a) - 1 = " + margin;
    if (!v.holds) o.code = kExitCheckFailed;
  }
  return o;
}

struct SuiteOptions {
  harness::SuiteConfig config;
  bool serial = false;
  std::string mutation = "none";
};

Outcome suite_cmd(const Context& ctx, const SuiteOptions& opt, bool axioms) {
  const auto mode = opt.serial ? harness::Execution::Serial : harness::Execution::Parallel;
  const auto res = axioms ? harness::run_axiom_suite(*ctx.model, opt.config, mode)
                          : harness::run_theorem_suite(*ctx.model, opt.config, mode);
  Outcome o;
  std::ostringstream t;
  t << (axioms ? "axioms" : "theorems") << ", model " << ctx.model->model_name() << ", seed "
    << opt.config.seed << ", " << opt.config.cases_per_check << " cases per check";
  if (opt.mutation != "none") t << ", mutation " << opt.mutation;
  t << "\n";
  Json checks = Json::array();
  for (const auto& c : res.checks) {
    t << "  " << c.id << ": " << (c.violations ? "FAIL" : "ok") << " (" << c.violations << " violations, "
      << c.inconclusive << " inconclusive)\n";
    checks.push_back(Json{{"id", c.id}, {"cases", c.cases}, {"violations", c.violations},
                          {"inconclusive", c.inconclusive}});
  }
  auto records = [](const std::vector<harness::CounterexampleRecord>& rs) {
    Json arr = Json::array();
    for (const auto& r : rs) {
      arr.push_back(Json{{"check", r.check_id}, {"seed", r.seed}, {"inputs", r.inputs}, {"observed", r.observed}});
    }
    return arr;
  };
  constexpr std::size_t kShown = 10;
  for (std::size_t i = 0; i < res.violations.size() && i < kShown; ++i) {
    const auto& r = res.violations[i];
    t << "counterexample " << r.check_id << " seed " << r.seed << ": " << r.observed << "\n";
    for (const auto& in : r.inputs) t << "    " << in << "\n";
  }
  if (res.violations.size() > kShown) t << "(" << res.violations.size() - kShown << " more counterexamples)\n";
  t << (res.passed() ? "PASS" : "FAIL") << ": " << res.violations.size() << " violations, "
    << res.inconclusive.size() << " inconclusive";
  o.text = t.str();
  o.result = Json{{"passed", res.passed()},
                  {"checks", checks},
                  {"violations", records(res.violations)},
                  {"inconclusive", records(res.inconclusive)}};
  if (!res.inconclusive.empty()) {
    o.diagnostics.push_back(std::to_string(res.inconclusive.size()) +
                            " inconclusive cases (precision, resource caps or finite-stability anomalies)");
  }
  if (!res.passed()) o.code = kExitCheckFailed;
  return o;
}

void apply_precision_env() {
  const char* env = std::getenv(kPrecisionEnv);
  if (!env || !*env) {
    set_default_precision_cap(kDefaultPrecisionCap);
    return;
  }
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0' || bits < 64 || bits > (1L << 24)) {
    throw DomainError(std::string(kPrecisionEnv) + " must be an integer number of bits in [64, 16777216]");
  }
  set_default_precision_cap(static_cast<mpfr_prec_t>(bits));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information thermodynamics toolkit: eidostates, entropy, probability and axiom checks"};
  app.name("infothermo");
  app.require_subcommand(1);

  std::string scenario_path;
  std::string format = "text";
  std::string model_name = "macro";
  int digits = engine::kDefaultDigits;
  app.add_option("-s,--scenario", scenario_path, "Scenario file");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--model", model_name, "Model when no scenario is given")
      ->check(CLI::IsMember({"macro", "quantum"}));
  app.add_option("--digits", digits, "Decimal digits printed")->check(CLI::Range(1, 200));

  Json inputs;
  std::function<Outcome(const Context&)> action;

  std::string a_name, b_name;
  auto* classify = app.add_subcommand("classify", "Classify the process <A, B>");
  classify->add_option("A", a_name)->required();
  classify->add_option("B", b_name)->required();
  classify->callback([&] {
    inputs = Json{{"A", a_name}, {"B", b_name}};
    action = [&](const Context& ctx) {
      Resolver r(ctx.scenario);
      return classify_cmd(ctx, r.eidostate(a_name), r.eidostate(b_name));
    };
  });

  auto* entropy = app.add_subcommand("entropy", "Entropy of a uniform eidostate");
  entropy->add_option("E", a_name)->required();
  entropy->callback([&] {
    inputs = Json{{"E", a_name}};
    action = [&](const Context& ctx) { return entropy_cmd(ctx, Resolver(ctx.scenario).eidostate(a_name)); };
  });

  auto* prob = app.add_subcommand("prob", "Entropic probability P(a|E)");
  prob->add_option("a", a_name)->required();
  prob->add_option("E", b_name)->required();
  prob->callback([&] {
    inputs = Json{{"a", a_name}, {"E", b_name}};
    action = [&](const Context& ctx) {
      Resolver r(ctx.scenario);
      return prob_cmd(ctx, r.state(a_name), r.eidostate(b_name));
    };
  });

  auto* report = app.add_subcommand("prob-report", "Entropic distribution and S(E) = <S> + H");
  report->add_option("E", a_name)->required();
  report->callback([&] {
    inputs = Json{{"E", a_name}};
    action = [&](const Context& ctx) { return prob_report_cmd(ctx, Resolver(ctx.scenario).eidostate(a_name)); };
  });

  int qmax = 64;
  auto* irrev = app.add_subcommand("irrev", "Bracket the irreversibility of <a, b>");
  irrev->add_option("a", a_name)->required();
  irrev->add_option("b", b_name)->required();
  irrev->add_option("--qmax", qmax, "Largest number of copies")->check(CLI::Range(1, 4096));
  irrev->callback([&] {
    inputs = Json{{"a", a_name}, {"b", b_name}, {"qmax", qmax}};
    action = [&](const Context& ctx) {
      Resolver r(ctx.scenario);
      return irrev_cmd(ctx, r.state(a_name), r.state(b_name), qmax);
    };
  });

  std::size_t nmax = 1024;
  auto* demon = app.add_subcommand("demon", "Smallest information state n with A -> B + J_n");
  demon->add_option("A", a_name)->required();
  demon->add_option("B", b_name)->required();
  demon->add_option("--nmax", nmax, "Largest n tried")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  demon->callback([&] {
    inputs = Json{{"A", a_name}, {"B", b_name}, {"nmax", nmax}};
    action = [&](const Context& ctx) {
      Resolver r(ctx.scenario);
      return demon_cmd(ctx, r.eidostate(a_name), r.eidostate(b_name), nmax);
    };
  });

  auto* landauer = app.add_subcommand("landauer", "Check S(b) - S(a) >= 1 when a + I_b -> b");
  landauer->add_option("a", a_name)->required();
  landauer->add_option("b", b_name)->required();
  landauer->callback([&] {
    inputs = Json{{"a", a_name}, {"b", b_name}};
    action = [&](const Context& ctx) {
      Resolver r(ctx.scenario);
      return landauer_cmd(ctx, r.state(a_name), r.state(b_name));
    };
  });

  SuiteOptions suite;
  auto add_suite = [&](const std::string& name, const std::string& help, bool axioms) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("--cases", suite.config.cases_per_check, "Cases per check")->check(CLI::PositiveNumber);
    sc->add_option("--seed", suite.config.seed, "Master seed");
    sc->add_option("--max-size", suite.config.max_eidostate_size, "Largest random eidostate")
        ->check(CLI::PositiveNumber);
    sc->add_option("--depth", suite.config.max_state_depth, "Deepest random state")->check(CLI::PositiveNumber);
    sc->add_option("--stability-n", suite.config.stability_n, "Largest n in the stability check")
        ->check(CLI::PositiveNumber);
    sc->add_option("--mutation", suite.mutation, "Deliberate model fault (macro only)")
        ->check(CLI::IsMember({"none", "drop-q-criterion", "flip-entropy-criterion", "break-record-freeness"}));
    sc->add_flag("--serial", suite.serial, "Run the reference serial loop");
    sc->callback([&, axioms] {
      inputs = Json{{"cases", suite.config.cases_per_check},
                    {"seed", suite.config.seed},
                    {"max_size", suite.config.max_eidostate_size},
                    {"depth", suite.config.max_state_depth},
                    {"stability_n", suite.config.stability_n},
                    {"mutation", suite.mutation}};
      action = [&, axioms](const Context& ctx) { return suite_cmd(ctx, suite, axioms); };
    });
  };
  add_suite("check-axioms", "Property-test the axioms", true);
  add_suite("check-theorems", "Property-test the theorems", false);

  std::vector<std::string> argv_store{"infothermo"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Json doc;
  doc["command"] = command;
  Json in = Json::object();
  in["scenario"] = scenario_path.empty() ? Json(nullptr) : Json(scenario_path);
  for (auto& [k, v] : inputs.items()) in[k] = v;
  Outcome outcome;
  try {
    apply_precision_env();
    Context ctx;
    if (!scenario_path.empty()) {
      ctx.scenario = parse_scenario(read_file(scenario_path));
    } else {
      ctx.scenario.model = model_name == "quantum" ? ModelKind::Quantum : ModelKind::Macro;
    }
    ctx.digits = digits;
    ctx.model = ctx.scenario.make_model(parse_mutation(suite.mutation));
    in["model"] = to_string(ctx.scenario.model);
    outcome = action(ctx);
  } catch (const std::exception& e) {
    outcome = Outcome{};
    outcome.code = kExitInputError;
    outcome.result = nullptr;
    outcome.diagnostics.push_back(std::string("error: ") + e.what());
  }

  if (format == "structured") {
    doc["inputs"] = in;
    doc["result"] = outcome.result;
    doc["diagnostics"] = outcome.diagnostics;
    out << doc.dump(2) << "\n";
  } else {
    if (!outcome.text.empty()) out << outcome.text << "\n";
    for (const auto& d : outcome.diagnostics) err << d << "\n";
  }
  return outcome.code;
}

}  // namespace infothermo::cli
