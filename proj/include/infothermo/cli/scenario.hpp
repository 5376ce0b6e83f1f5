#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infothermo/core/errors.hpp"
#include "infothermo/macro/macro_model.hpp"
#include "infothermo/quantum/quantum_model.hpp"

namespace infothermo::cli {

namespace detail {
class Cursor;
}

/// A malformed scenario line. `line` is 1-based; 0 means the whole input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class ModelKind { Macro, Quantum };

std::string to_string(ModelKind k);

/// A parsed scenario file. Atom ids are indices into the atom list of the
/// declared model; with no atom lines the model's default atoms are used.
struct Scenario {
  ModelKind model = ModelKind::Macro;
  std::vector<macro::AtomDef> macro_atoms;
  std::vector<quantum::QAtom> quantum_atoms;
  std::vector<std::pair<std::string, StateExpr>> states;
  /// Members are kept by name, as written.
  std::vector<std::pair<std::string, std::vector<std::string>>> eidostates;

  /// The model the scenario describes.
  std::unique_ptr<ModelOracle> make_model(macro::Mutation mutation = macro::Mutation::None) const;

  friend bool operator==(const Scenario&, const Scenario&);
};

Scenario parse_scenario(const std::string& text);
/// Canonical text form; parse_scenario(serialize(s)) == s.
std::string serialize(const Scenario& s);

/// Names of the atoms in id order: the declared ones, or the model defaults.
std::vector<std::string> atom_names(const Scenario& s);

/// Resolves names (and inline expressions) against a scenario. Errors are
/// ParseError with line 0.
class Resolver {
 public:
  explicit Resolver(const Scenario& scenario);

  /// An atom or state name, or an inline expression such as `(r + s0)`.
  StateExpr state(const std::string& text) const;
  /// An eidostate name, a set literal `{ a, (a + b) }`, a product `(E + F)`
  /// of such terms, or anything `state` accepts.
  Eidostate eidostate(const std::string& text) const;

 private:
  Eidostate parse_eidostate(detail::Cursor& c) const;

  const Scenario& scenario_;
  std::vector<std::string> atoms_;
};

}  // namespace infothermo::cli
