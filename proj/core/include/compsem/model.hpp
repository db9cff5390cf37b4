#pragma once

#include "compsem/semantics.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace compsem {

struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& what_) : std::runtime_error("model: " + what_) {}
};

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& what_) : std::runtime_error("evaluation: " + what_) {}
};

struct MissingDenotationError : EvalError {
  explicit MissingDenotationError(const std::string& name)
      : EvalError("constant '" + name + "' has no denotation") {}
};

using Entity = std::string;

// Finite first-order model: named entities, one-place sorts, two-place
// relations, per-dimension partial measures, and constant denotations.
struct Model {
  std::vector<Entity> entities;
  std::map<std::string, std::set<Entity>> sorts;
  std::map<std::string, std::set<std::pair<Entity, Entity>>> relations;
  std::map<std::string, std::map<Entity, double>> measures;
  std::map<std::string, Entity> constants;

  static Model from_json(const std::string& text);
  static Model load(const std::string& path);
  void validate() const;
};

// Adjective constant -> measure dimension. The defaults cover the shipped
// fragment (fast' -> speed, rich' -> wealth, high' -> height).
using DimensionMap = std::map<std::string, std::string>;
const DimensionMap& default_dimensions();

struct EvalOptions {
  std::vector<double> extra_degrees;  // injected grid points (soundness tests)
  const DimensionMap* dimensions = nullptr;
  // entity/dimension pairs whose measure was queried but missing
  std::set<std::pair<Entity, std::string>>* missing_measures = nullptr;
};

// All measure values of the dimensions an expression mentions.
std::set<double> degree_grid(const Term& form, const Model& model,
                             const DimensionMap& dims = default_dimensions());

// Tarskian truth over the finite universe; degree quantifiers range over the
// degree grid. Entities without the queried measure falsify degree atoms.
// The partial variant returns nullopt only when a maximal-degree description
// is undefined.
std::optional<bool> evaluate_partial(const Term& form, const Model& model,
                                     const EvalOptions& opts = {});
bool evaluate(const Term& form, const Model& model, const EvalOptions& opts = {});

struct ReferentInfo {
  std::string var;
  std::string quantifier;  // "exists", "atleast 2", "atmost 1"
  std::string restrictor;  // printed body of the quantifier
  bool accessible = false;
  std::string position;
};

struct AccessibilityReport {
  std::vector<ReferentInfo> referents;
};

// Discourse referents of a reading: entity-typed existentials, accessible
// unless they sit inside an implication antecedent (a universal's
// restriction) or under negation.
AccessibilityReport accessibility(const Reading& reading);

// Truth value per reading, in reading order.
std::vector<bool> check_reading_pair(const std::vector<Reading>& readings,
                                     const Model& model);

}  // namespace compsem
