#include "infothermo/cli/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

namespace infothermo::cli {

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

std::string to_string(ModelKind k) { return k == ModelKind::Macro ? "macro" : "quantum"; }

namespace {

enum class Tok { Ident, Number, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '/';
}

std::vector<Token> lex(const std::string& line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, line.substr(i, j - i)});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::size_t j = i + 1;
      while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '/')) ++j;
      if (j < line.size() && (line[j] == '.' || line[j] == 'e' || line[j] == 'E')) {
        throw ParseError(lineno, "floating-point literals are not accepted; write p/q");
      }
      out.push_back({Tok::Number, line.substr(i, j - i)});
      i = j;
    } else if (std::string_view("{}()+,=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c)});
      ++i;
    } else {
      throw ParseError(lineno, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

}  // namespace

namespace detail {

class Cursor {
 public:
  Cursor(std::vector<Token> toks, std::size_t line) : toks_(std::move(toks)), line_(line) {}

  const Token& peek() const {
    static const Token end;
    return pos_ < toks_.size() ? toks_[pos_] : end;
  }
  bool at_end() const { return pos_ >= toks_.size(); }
  bool accept(const std::string& sym) {
    if (peek().kind == Tok::Sym && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const std::string& sym) {
    if (!accept(sym)) fail("expected '" + sym + "'" + found());
  }
  std::string ident(const std::string& what) {
    if (peek().kind != Tok::Ident) fail("expected " + what + found());
    return toks_[pos_++].text;
  }
  std::string number(const std::string& what) {
    if (peek().kind != Tok::Number) fail("expected " + what + found());
    return toks_[pos_++].text;
  }
  void finish() {
    if (!at_end()) fail("unexpected trailing '" + peek().text + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }
  std::size_t line() const { return line_; }

 private:
  std::string found() const { return at_end() ? " at end of line" : ", found '" + peek().text + "'"; }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

}  // namespace detail

namespace {

using detail::Cursor;

using Lookup = std::function<std::optional<StateExpr>(const std::string&)>;

StateExpr parse_expr(Cursor& c, const Lookup& lookup) {
  if (c.accept("(")) {
    StateExpr l = parse_expr(c, lookup);
    c.expect("+");
    StateExpr r = parse_expr(c, lookup);
    c.expect(")");
    return l + r;
  }
  const std::string name = c.ident("an atom name or '('");
  if (auto e = lookup(name)) return *e;
  c.fail("unknown name '" + name + "'");
}

std::vector<std::string> default_names(ModelKind k) {
  std::vector<std::string> out;
  if (k == ModelKind::Macro) {
    const macro::MacroModel m;
    for (const auto& a : m.registered()) out.push_back(a.name);
  } else {
    const quantum::QuantumModel q;
    for (const auto& a : q.registered()) out.push_back(a.name);
  }
  return out;
}

std::int64_t parse_int(const std::string& text, Cursor& c) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) c.fail("expected an integer, found '" + text + "'");
    return v;
  } catch (const std::logic_error&) {
    c.fail("integer out of range: '" + text + "'");
  }
}

// key=value pairs in any order, each key exactly once.
std::map<std::string, std::string> parse_keys(Cursor& c, std::initializer_list<std::string> keys) {
  std::map<std::string, std::string> out;
  while (!c.at_end()) {
    const std::string key = c.ident("a key");
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) c.fail("unknown key '" + key + "'");
    if (out.count(key)) c.fail("duplicate key '" + key + "'");
    c.expect("=");
    out[key] = c.number("a value for " + key);
  }
  for (const auto& k : keys)
    if (!out.count(k)) c.fail("missing " + k + "=");
  return out;
}

bool same_atoms(const std::vector<macro::AtomDef>& a, const std::vector<macro::AtomDef>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
    return x.name == y.name && x.q == y.q && x.s == y.s;
  });
}

bool same_atoms(const std::vector<quantum::QAtom>& a, const std::vector<quantum::QAtom>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
    return x.name == y.name && x.dim == y.dim && x.len == y.len;
  });
}

}  // namespace

bool operator==(const Scenario& a, const Scenario& b) {
  return a.model == b.model && same_atoms(a.macro_atoms, b.macro_atoms) &&
         same_atoms(a.quantum_atoms, b.quantum_atoms) && a.states == b.states &&
         a.eidostates == b.eidostates;
}

std::unique_ptr<ModelOracle> Scenario::make_model(macro::Mutation mutation) const {
  if (model == ModelKind::Quantum) {
    if (mutation != macro::Mutation::None) throw DomainError("mutations apply to the macro model only");
    return quantum_atoms.empty() ? std::make_unique<quantum::QuantumModel>()
                                 : std::make_unique<quantum::QuantumModel>(quantum_atoms);
  }
  if (macro_atoms.empty()) return std::make_unique<macro::MacroModel>(macro::MacroModel().with_mutation(mutation));
  return std::make_unique<macro::MacroModel>(macro_atoms, mutation);
}

std::vector<std::string> atom_names(const Scenario& s) {
  std::vector<std::string> out;
  if (s.model == ModelKind::Macro)
    for (const auto& a : s.macro_atoms) out.push_back(a.name);
  else
    for (const auto& a : s.quantum_atoms) out.push_back(a.name);
  return out.empty() ? default_names(s.model) : out;
}

Scenario parse_scenario(const std::string& text) {
  Scenario s;
  bool model_seen = false;
  bool defaults_used = false;
  std::map<std::string, std::size_t> atom_ids;
  std::map<std::string, StateExpr> states;
  std::map<std::string, std::string> kind_of;  // name -> "atom" | "state" | "eidostate"

  auto declare = [&](const std::string& name, const char* kind, Cursor& c) {
    if (auto it = kind_of.find(name); it != kind_of.end()) {
      c.fail("duplicate definition of '" + name + "' (already a " + it->second + ")");
    }
    kind_of[name] = kind;
  };
  // Names resolve to atoms declared so far, or to the model defaults when no
  // atom lines precede the first use.
  auto lookup = [&](const std::string& name) -> std::optional<StateExpr> {
    if (auto it = states.find(name); it != states.end()) return it->second;
    if (atom_ids.empty()) {
      defaults_used = true;
      const auto names = default_names(s.model);
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return StateExpr::atom(AtomId{i});
      return std::nullopt;
    }
    if (auto it = atom_ids.find(name); it != atom_ids.end()) return StateExpr::atom(AtomId{it->second});
    return std::nullopt;
  };

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Cursor c(lex(raw, lineno), lineno);
    if (c.at_end()) continue;
    const std::string head = c.ident("a directive");

    if (head == "model") {
      if (model_seen) c.fail("duplicate model line");
      if (!kind_of.empty()) c.fail("the model line must come before any definition");
      const std::string m = c.ident("macro or quantum");
      if (m == "macro") s.model = ModelKind::Macro;
      else if (m == "quantum") s.model = ModelKind::Quantum;
      else c.fail("unknown model '" + m + "'");
      c.finish();
      model_seen = true;
    } else if (head == "atom") {
      if (defaults_used) c.fail("atom lines must precede states that use the default atoms");
      const std::string name = c.ident("an atom name");
      declare(name, "atom", c);
      try {
        if (s.model == ModelKind::Macro) {
          auto kv = parse_keys(c, {"Q", "S"});
          macro::AtomDef def{name, parse_int(kv["Q"], c), parse_rational(kv["S"])};
          macro::validate(def);
          s.macro_atoms.push_back(def);
        } else {
          auto kv = parse_keys(c, {"dim", "len"});
          const std::int64_t len = parse_int(kv["len"], c);
          if (len < 1) c.fail("len must be >= 1");
          quantum::QAtom def{name, BigInt(kv["dim"]), static_cast<std::uint64_t>(len)};
          quantum::validate(def);
          s.quantum_atoms.push_back(def);
        }
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        c.fail(e.what());
      }
      atom_ids[name] = atom_ids.size();
    } else if (head == "state") {
      const std::string name = c.ident("a state name");
      c.expect("=");
      StateExpr e = parse_expr(c, lookup);
      c.finish();
      declare(name, "state", c);
      states.emplace(name, e);
      s.states.emplace_back(name, std::move(e));
    } else if (head == "eidostate") {
      const std::string name = c.ident("an eidostate name");
      c.expect("=");
      c.expect("{");
      std::vector<std::string> members;
      do {
        const std::string m = c.ident("a state name");
        if (!lookup(m)) c.fail("unknown name '" + m + "'");
        members.push_back(m);
      } while (c.accept(","));
      c.expect("}");
      c.finish();
      declare(name, "eidostate", c);
      s.eidostates.emplace_back(name, std::move(members));
    } else {
      c.fail("unknown directive '" + head + "'");
    }
  }
  return s;
}

std::string serialize(const Scenario& s) {
  std::ostringstream out;
  out << "model " << to_string(s.model) << "\n";
  for (const auto& a : s.macro_atoms) out << "atom " << a.name << " Q=" << a.q << " S=" << to_fraction_string(a.s) << "\n";
  for (const auto& a : s.quantum_atoms) out << "atom " << a.name << " dim=" << a.dim.get_str() << " len=" << a.len << "\n";
  const auto names = atom_names(s);
  auto name_of = [&](AtomId id) { return names.at(id.value); };
  for (const auto& [name, e] : s.states) out << "state " << name << " = " << to_string(e, name_of) << "\n";
  for (const auto& [name, members] : s.eidostates) {
    out << "eidostate " << name << " = { ";
    for (std::size_t i = 0; i < members.size(); ++i) out << (i ? ", " : "") << members[i];
    out << " }\n";
  }
  return out.str();
}

Resolver::Resolver(const Scenario& scenario) : scenario_(scenario), atoms_(atom_names(scenario)) {}

namespace {

std::optional<StateExpr> find_state(const Scenario& s, const std::vector<std::string>& atoms,
                                    const std::string& name) {
  for (const auto& [n, e] : s.states)
    if (n == name) return e;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i] == name) return StateExpr::atom(AtomId{i});
  return std::nullopt;
}

}  // namespace

StateExpr Resolver::state(const std::string& text) const {
  Cursor c(lex(text, 0), 0);
  const Lookup lookup = [&](const std::string& n) { return find_state(scenario_, atoms_, n); };
  StateExpr e = parse_expr(c, lookup);
  c.finish();
  return e;
}

Eidostate Resolver::eidostate(const std::string& text) const {
  Cursor c(lex(text, 0), 0);
  Eidostate e = parse_eidostate(c);
  c.finish();
  return e;
}

// term ::= eidostate-name | state-name | atom-name | "{" expr, ... "}" | "(" term "+" term ")"
Eidostate Resolver::parse_eidostate(Cursor& c) const {
  const Lookup lookup = [&](const std::string& n) { return find_state(scenario_, atoms_, n); };
  if (c.accept("{")) {
    std::vector<StateExpr> elems;
    do elems.push_back(parse_expr(c, lookup));
    while (c.accept(","));
    c.expect("}");
    return Eidostate::of(std::move(elems));
  }
  if (c.accept("(")) {
    Eidostate l = parse_eidostate(c);
    c.expect("+");
    Eidostate r = parse_eidostate(c);
    c.expect(")");
    return l + r;
  }
  const std::string name = c.ident("a name, '{' or '('");
  for (const auto& [n, members] : scenario_.eidostates) {
    if (n != name) continue;
    std::vector<StateExpr> elems;
    for (const auto& m : members) elems.push_back(*find_state(scenario_, atoms_, m));
    return Eidostate::of(std::move(elems));
  }
  if (auto e = lookup(name)) return Eidostate::singleton(*e);
  c.fail("unknown name '" + name + "'");
}

}  // namespace infothermo::cli
