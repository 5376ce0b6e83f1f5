#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "infothermo/cli/commands.hpp"
#include "infothermo/cli/scenario.hpp"
#include "json.hpp"

using namespace infothermo;
using namespace infothermo::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scenario(const std::string& name) { return std::string(INFOTHERMO_SCENARIO_DIR) + "/" + name; }

std::size_t error_line(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

// Splits a command line on spaces, keeping single-quoted groups together.
std::vector<std::string> split_args(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, any = false;
  for (char ch : line) {
    if (ch == '\'') {
      quoted = !quoted;
      any = true;
    } else if (ch == ' ' && !quoted) {
      if (any) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += ch;
      any = true;
    }
  }
  if (any) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("bit state scenario") {
  const Scenario s = parse_scenario("atom r Q=0 S=0/1\nstate rr = (r + r)\neidostate Ib = { r, rr }\n");
  CHECK(s.model == ModelKind::Macro);
  REQUIRE(s.macro_atoms.size() == 1);
  const auto model = s.make_model();
  const Eidostate ib = Resolver(s).eidostate("Ib");
  CHECK(ib.size() == 2);
  CHECK(ib == model->make_bit_state());
}

TEST_CASE("atom lines") {
  const Scenario s = parse_scenario("model macro\natom sh Q=1 S=1/2\n");
  CHECK(s.macro_atoms[0].s == Rational(1, 2));
  CHECK(s.macro_atoms[0].q == 1);
  const Scenario q = parse_scenario("model quantum\natom q3 dim=3 len=2 # a qutrit in two qubits\n");
  CHECK(q.quantum_atoms[0].dim == 3);
  // Key order and spacing are free.
  CHECK(parse_scenario("atom sh S = 1/2  Q = 1").macro_atoms[0].s == Rational(1, 2));
}

TEST_CASE("diagnostics carry line numbers") {
  CHECK(error_line("atom r Q=0 S=0/1\n\nstate bad = (r + missing)\n") == 3);
  CHECK(error_line("atom s Q=1 S=3/2\n") == 1);
  CHECK(error_line("atom s Q=1 S=0.5\n") == 1);
  CHECK(error_line("model quantum\natom q dim=5 len=2\n") == 2);
  CHECK(error_line("atom r Q=0 S=0/1\natom r Q=0 S=0/1\n") == 2);
  CHECK(error_line("atom r Q=0 S=0/1\nstate r = (r + r)\n") == 2);
  CHECK(error_line("atom r Q=0\n") == 1);
  CHECK(error_line("model macro\nmodel quantum\n") == 2);
  CHECK(error_line("frobnicate x\n") == 1);
  CHECK(error_line("atom r Q=0 S=0/1\neidostate E = { r, nope }\n") == 2);
  CHECK(error_line("atom r Q=0 S=0/1\nstate x = r + r\n") == 2);
  try {
    parse_scenario("atom r Q=0 S=0/1\n\nstate bad = (r + missing)\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "line 3: unknown name 'missing'");
  }
}

TEST_CASE("default atoms when none are declared") {
  const Scenario s = parse_scenario("state x = (s0 + s1/2)\n");
  CHECK(s.macro_atoms.empty());
  CHECK(Resolver(s).state("x") == Resolver(s).state("(s0 + s1/2)"));
  CHECK(error_line("state x = (s0 + s0)\natom z Q=1 S=0/1\n") == 2);
}

TEST_CASE("serialization round trips") {
  for (const char* file : {"bit.scn", "szilard.scn", "qubits.scn"}) {
    std::ifstream in(scenario(file));
    std::stringstream ss;
    ss << in.rdbuf();
    const Scenario s = parse_scenario(ss.str());
    CHECK(parse_scenario(serialize(s)) == s);
    CHECK(serialize(parse_scenario(serialize(s))) == serialize(s));
  }
  // Random scenarios.
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    std::ostringstream text;
    const int atoms = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int i = 0; i < atoms; ++i) {
      const int den = std::uniform_int_distribution<int>(1, 16)(rng);
      const int num = std::uniform_int_distribution<int>(0, den)(rng);
      const bool record = i == 0;
      text << "atom a" << i << " Q=" << (record ? 0 : 1) << " S=" << (record ? 0 : num) << "/" << den << "\n";
    }
    std::function<std::string(int)> expr = [&](int depth) -> std::string {
      if (depth == 0 || rng() % 3 == 0) return "a" + std::to_string(rng() % atoms);
      return "(" + expr(depth - 1) + " + " + expr(depth - 1) + ")";
    };
    const int states = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int i = 0; i < states; ++i) text << "state x" << i << " = " << expr(3) << "\n";
    text << "eidostate E = { a0";
    for (int i = 0; i < states; ++i) text << ", x" << i;
    text << " }\n";
    const Scenario s = parse_scenario(text.str());
    CHECK(parse_scenario(serialize(s)) == s);
  }
}

TEST_CASE("worked scenarios match their expected output") {
  for (const char* stem : {"bit", "szilard", "qubits"}) {
    std::ifstream in(scenario(std::string(stem) + ".expected"));
    REQUIRE(in);
    std::string line, command, expected;
    auto flush = [&] {
      if (command.empty()) return;
      std::vector<std::string> args{"-s", scenario(std::string(stem) + ".scn")};
      for (auto& a : split_args(command)) args.push_back(a);
      const Run r = run_cli(args);
      INFO(stem << ": " << command);
      CHECK(r.code == 0);
      CHECK(r.out == expected);
      command.clear();
      expected.clear();
    };
    while (std::getline(in, line)) {
      if (line.rfind("$ ", 0) == 0) {
        flush();
        command = line.substr(2);
      } else if (line.rfind("#", 0) == 0) {
        continue;
      } else if (!line.empty()) {
        expected += line + "\n";
      }
    }
    flush();
  }
}

TEST_CASE("worked examples") {
  const std::string bit = scenario("bit.scn");
  CHECK(run_cli({"-s", bit, "classify", "r", "Ib"}).out == "natural irreversible\n");
  CHECK(run_cli({"-s", bit, "classify", "Ib", "r"}).out == "antinatural irreversible\n");
  const Run e = run_cli({"-s", bit, "entropy", "Ib"});
  CHECK(e.out.find("multiset {0, 0}") != std::string::npos);
  CHECK(e.out.find("exact {1}") != std::string::npos);
  CHECK(e.out.find("decimal 1.000") != std::string::npos);
  const Run irr = run_cli({"-s", bit, "--format", "structured", "irrev", "s0", "s1", "--qmax", "64"});
  const auto doc = nlohmann::json::parse(irr.out);
  const Rational lo = parse_rational(doc["result"]["lower"].get<std::string>());
  const Rational hi = parse_rational(doc["result"]["upper"].get<std::string>());
  CHECK(lo >= Rational(62, 64));
  CHECK(hi <= Rational(66, 64));
  CHECK(lo <= 1);
  CHECK(1 <= hi);
}

TEST_CASE("structured output") {
  const std::vector<std::string> args{"-s", scenario("bit.scn"), "--format", "structured", "prob", "s1", "Mix"};
  const Run a = run_cli(args), b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["command"] == "prob");
  CHECK(doc["inputs"]["a"] == "s1");
  CHECK(doc["inputs"]["model"] == "macro");
  CHECK(doc["result"]["exact"] == "2/3");
  CHECK(doc["diagnostics"].empty());

  const std::vector<std::string> suite{"--format", "structured", "check-axioms", "--cases", "20", "--seed", "5"};
  const Run s1 = run_cli(suite), s2 = run_cli(suite);
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  CHECK(nlohmann::json::parse(s1.out)["result"]["passed"] == true);
}

TEST_CASE("exit codes") {
  const std::string bit = scenario("bit.scn");
  CHECK(run_cli({"-s", bit, "entropy", "Ib"}).code == kExitOk);
  CHECK(run_cli({"-s", bit, "entropy", "nope"}).code == kExitInputError);
  CHECK(run_cli({"-s", "/no/such/file.scn", "entropy", "r"}).code == kExitInputError);
  CHECK(run_cli({"-s", bit, "entropy", "{r, s0}"}).code == kExitInputError);  // not uniform
  CHECK(run_cli({"-s", bit, "irrev", "r", "s1"}).code == kExitInputError);    // impossible
  CHECK(run_cli({"bogus"}).code == kExitInputError);
  CHECK(run_cli({"--help"}).code == kExitOk);
  CHECK(run_cli({"check-theorems", "--cases", "15"}).code == kExitOk);
  CHECK(run_cli({"check-axioms", "--cases", "40", "--mutation", "flip-entropy-criterion"}).code == kExitCheckFailed);
  CHECK(run_cli({"--model", "quantum", "check-axioms", "--cases", "10", "--mutation", "drop-q-criterion"}).code ==
        kExitInputError);
  const Run err = run_cli({"-s", bit, "--format", "structured", "entropy", "nope"});
  const auto doc = nlohmann::json::parse(err.out);
  CHECK(doc["result"].is_null());
  CHECK(doc["diagnostics"][0].get<std::string>().find("unknown name") != std::string::npos);
}

TEST_CASE("precision cap from the environment") {
  const std::string bit = scenario("bit.scn");
  ::setenv(kPrecisionEnv, "banana", 1);
  CHECK(run_cli({"-s", bit, "entropy", "Ib"}).code == kExitInputError);
  ::setenv(kPrecisionEnv, "256", 1);
  CHECK(run_cli({"-s", bit, "entropy", "Mix"}).code == kExitOk);
  CHECK(default_precision_cap() == 256);
  ::unsetenv(kPrecisionEnv);
  CHECK(run_cli({"-s", bit, "entropy", "Mix"}).code == kExitOk);
  CHECK(default_precision_cap() == kDefaultPrecisionCap);
}
