#include "compsem/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <variant>

#include "json.hpp"

namespace compsem {

// ------------------------------------------------------------------- loading

Model Model::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ModelError("top level must be an object");
  if (j.contains("version") && j["version"].get<int>() != 1)
    throw ModelError("unsupported model version");
  Model m;
  try {
    for (const auto& e : j.at("entities")) m.entities.push_back(e.get<std::string>());
    if (j.contains("sorts"))
      for (auto it = j["sorts"].begin(); it != j["sorts"].end(); ++it) {
        std::set<Entity>& s = m.sorts[it.key()];
        for (const auto& e : it.value()) s.insert(e.get<std::string>());
      }
    if (j.contains("relations"))
      for (auto it = j["relations"].begin(); it != j["relations"].end(); ++it) {
        std::set<std::pair<Entity, Entity>>& r = m.relations[it.key()];
        for (const auto& pair : it.value()) {
          if (!pair.is_array() || pair.size() != 2)
            throw ModelError("relation tuples must be pairs");
          r.emplace(pair[0].get<std::string>(), pair[1].get<std::string>());
        }
      }
    if (j.contains("measures"))
      for (auto it = j["measures"].begin(); it != j["measures"].end(); ++it) {
        std::map<Entity, double>& mm = m.measures[it.key()];
        for (auto e = it.value().begin(); e != it.value().end(); ++e)
          mm[e.key()] = e.value().get<double>();
      }
    if (j.contains("constants"))
      for (auto it = j["constants"].begin(); it != j["constants"].end(); ++it)
        m.constants[it.key()] = it.value().get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("malformed model: ") + e.what());
  }
  m.validate();
  return m;
}

Model Model::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

void Model::validate() const {
  std::set<Entity> uni(entities.begin(), entities.end());
  auto check = [&](const Entity& e, const std::string& where) {
    if (!uni.count(e)) throw ModelError("unknown entity '" + e + "' in " + where);
  };
  for (const auto& [name, members] : sorts)
    for (const Entity& e : members) check(e, "sort " + name);
  for (const auto& [name, tuples] : relations)
    for (const auto& [a, b] : tuples) {
      check(a, "relation " + name);
      check(b, "relation " + name);
    }
  for (const auto& [dim, mm] : measures)
    for (const auto& [e, v] : mm) check(e, "measure " + dim);
  for (const auto& [c, e] : constants) check(e, "constant " + c);
}

const DimensionMap& default_dimensions() {
  static const DimensionMap dims{
      {"fast'", "speed"}, {"rich'", "wealth"}, {"high'", "height"}};
  return dims;
}

// --------------------------------------------------------------- degree grid

namespace {

void collect_dims(const Term& t, const DimensionMap& dims, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Const: {
      auto it = dims.find(t.name());
      if (it != dims.end()) out.insert(it->second);
      return;
    }
    case TermKind::Var:
      return;
    case TermKind::App:
      collect_dims(t.fn(), dims, out);
      collect_dims(t.arg(), dims, out);
      return;
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Implies:
    case TermKind::Greater:
      collect_dims(t.lhs(), dims, out);
      collect_dims(t.rhs(), dims, out);
      return;
    case TermKind::Not:
      collect_dims(t.operand(), dims, out);
      return;
    default:
      collect_dims(t.body(), dims, out);
      return;
  }
}

}  // namespace

std::set<double> degree_grid(const Term& form, const Model& model, const DimensionMap& dims) {
  std::set<std::string> used;
  collect_dims(form, dims, used);
  std::set<double> grid;
  for (const std::string& dim : used) {
    auto it = model.measures.find(dim);
    if (it == model.measures.end()) continue;
    for (const auto& [e, v] : it->second) grid.insert(v);
  }
  return grid;
}

// ----------------------------------------------------------------- evaluator

namespace {

using Value = std::variant<Entity, double>;
using Env = std::map<std::string, Value>;

// Binds a variable for the current scope and restores any shadowed value.
class ScopedBind {
 public:
  ScopedBind(Env& env, const std::string& name, Value v) : env_(env), name_(name) {
    auto it = env_.find(name_);
    if (it != env_.end()) old_ = it->second;
    env_[name_] = std::move(v);
  }
  ~ScopedBind() {
    if (old_) env_[name_] = *old_;
    else env_.erase(name_);
  }
  ScopedBind(const ScopedBind&) = delete;
  ScopedBind& operator=(const ScopedBind&) = delete;

 private:
  Env& env_;
  std::string name_;
  std::optional<Value> old_;
};

struct Evaluator {
  const Model& model;
  const DimensionMap& dims;
  std::vector<double> grid;
  std::set<std::pair<Entity, std::string>>* missing;

  std::optional<bool> formula(const Term& t, Env& env) {
    switch (t.kind()) {
      case TermKind::And: {
        auto l = formula(t.lhs(), env);
        auto r = formula(t.rhs(), env);
        if (l && !*l) return false;
        if (r && !*r) return false;
        if (l && r) return true;
        return std::nullopt;
      }
      case TermKind::Or: {
        auto l = formula(t.lhs(), env);
        auto r = formula(t.rhs(), env);
        if (l && *l) return true;
        if (r && *r) return true;
        if (l && r) return false;
        return std::nullopt;
      }
      case TermKind::Implies: {
        auto l = formula(t.lhs(), env);
        auto r = formula(t.rhs(), env);
        if (l && !*l) return true;
        if (r && *r) return true;
        if (l && r) return *r || !*l;
        return std::nullopt;
      }
      case TermKind::Not: {
        auto v = formula(t.operand(), env);
        if (!v) return std::nullopt;
        return !*v;
      }
      case TermKind::Greater: {
        auto l = degree(t.lhs(), env);
        auto r = degree(t.rhs(), env);
        if (!l || !r) return std::nullopt;
        return *l > *r;
      }
      case TermKind::Forall:
        return quantifier(t, env, /*universal=*/true);
      case TermKind::Exists:
        return quantifier(t, env, /*universal=*/false);
      case TermKind::Card:
        return counting(t, env);
      case TermKind::App:
        return atom(t, env);
      case TermKind::Var:
      case TermKind::Const:
      case TermKind::Lam:
      case TermKind::Iota:
        throw EvalError("expected a formula, found " + print_term(t));
    }
    throw EvalError("expected a formula");
  }

  std::optional<bool> quantifier(const Term& t, Env& env, bool universal) {
    bool undefined = false;
    auto run = [&](const Value& v) -> std::optional<bool> {
      ScopedBind bind(env, t.bound_name(), v);
      return formula(t.body(), env);
    };
    auto step = [&](std::optional<bool> r) -> std::optional<bool> {
      if (!r) { undefined = true; return std::nullopt; }
      if (universal && !*r) return false;
      if (!universal && *r) return true;
      return std::nullopt;
    };
    if (t.var_type() == SemType::e()) {
      for (const Entity& e : model.entities)
        if (auto decided = step(run(Value{e}))) return decided;
    } else if (t.var_type() == SemType::d()) {
      for (double d : grid)
        if (auto decided = step(run(Value{d}))) return decided;
    } else {
      throw EvalError("quantification over " + t.var_type().to_string() +
                      " is not supported");
    }
    if (undefined) return std::nullopt;
    return universal;
  }

  std::optional<bool> counting(const Term& t, Env& env) {
    size_t yes = 0, unknown = 0;
    auto tally = [&](const Value& v) {
      ScopedBind bind(env, t.bound_name(), v);
      auto r = formula(t.body(), env);
      if (!r) ++unknown;
      else if (*r) ++yes;
    };
    if (t.var_type() == SemType::e()) {
      for (const Entity& e : model.entities) tally(Value{e});
    } else if (t.var_type() == SemType::d()) {
      for (double d : grid) tally(Value{d});
    } else {
      throw EvalError("counting over " + t.var_type().to_string() + " is not supported");
    }
    if (t.card_kind() == CardKind::AtLeast) {
      if (yes >= t.card_n()) return true;
      if (yes + unknown < t.card_n()) return false;
      return std::nullopt;
    }
    if (yes > t.card_n()) return false;
    if (yes + unknown <= t.card_n()) return true;
    return std::nullopt;
  }

  Entity entity(const Term& t, Env& env) {
    if (t.kind() == TermKind::Var) {
      auto it = env.find(t.name());
      if (it == env.end()) throw EvalError("unbound variable " + t.name());
      return std::get<Entity>(it->second);
    }
    if (t.kind() == TermKind::Const) {
      auto it = model.constants.find(t.name());
      if (it == model.constants.end()) throw MissingDenotationError(t.name());
      return it->second;
    }
    throw EvalError("expected an entity term, found " + print_term(t));
  }

  std::optional<double> degree(const Term& t, Env& env) {
    if (t.kind() == TermKind::Var) {
      auto it = env.find(t.name());
      if (it == env.end()) throw EvalError("unbound degree variable " + t.name());
      return std::get<double>(it->second);
    }
    if (t.kind() == TermKind::Iota) {
      // maximal grid degree satisfying the body
      std::optional<double> best;
      for (double d : grid) {
        ScopedBind bind(env, t.bound_name(), Value{d});
        auto r = formula(t.body(), env);
        if (r && *r && (!best || d > *best)) best = d;
      }
      return best;
    }
    throw EvalError("expected a degree term, found " + print_term(t));
  }

  std::optional<bool> predicate(const Term& p, const Entity& x, Env& env) {
    if (p.kind() == TermKind::Const) {
      auto it = model.sorts.find(p.name());
      if (it == model.sorts.end()) return false;
      return it->second.count(x) > 0;
    }
    if (p.kind() == TermKind::Lam) {
      ScopedBind bind(env, p.bound_name(), Value{x});
      return formula(p.body(), env);
    }
    throw EvalError("unsupported property term " + print_term(p));
  }

  // `flag` limits the missing-measure log to individuals named by constants;
  // arbitrary universe members failing a degree atom are not noteworthy.
  bool measure_at_least(const std::string& dim, const Entity& x, double d, bool flag) {
    auto mit = model.measures.find(dim);
    if (mit != model.measures.end()) {
      auto vit = mit->second.find(x);
      if (vit != mit->second.end()) return vit->second >= d;
    }
    if (flag && missing) missing->emplace(x, dim);
    return false;
  }

  std::optional<bool> atom(const Term& t, Env& env) {
    auto [head, args] = app_spine(t);
    if (head.kind() != TermKind::Const)
      throw EvalError("unreduced application head " + print_term(head));
    const std::string& name = head.name();
    if (name == "P0") throw EvalError("unresolved anaphoric relation P0");
    auto dim_it = dims.find(name);
    if (dim_it != dims.end()) {
      // degree adjective: attributive A(Q)(x)(d) or predicative A(x)(d)
      if (args.size() == 3) {
        Entity x = entity(args[1], env);
        auto q = predicate(args[0], x, env);
        auto dv = degree(args[2], env);
        if (!dv) return std::nullopt;
        bool meas = measure_at_least(dim_it->second, x, *dv,
                                     args[1].kind() == TermKind::Const);
        if (q && !*q) return false;
        if (!meas) return false;
        return q;
      }
      if (args.size() == 2) {
        Entity x = entity(args[0], env);
        auto dv = degree(args[1], env);
        if (!dv) return std::nullopt;
        return measure_at_least(dim_it->second, x, *dv,
                                args[0].kind() == TermKind::Const);
      }
      throw EvalError("degree adjective " + name + " applied to " +
                      std::to_string(args.size()) + " arguments");
    }
    if (args.size() == 1) {
      Entity x = entity(args[0], env);
      auto it = model.sorts.find(name);
      if (it == model.sorts.end()) return false;
      return it->second.count(x) > 0;
    }
    if (args.size() == 2) {
      Entity a = entity(args[0], env);
      Entity b = entity(args[1], env);
      auto it = model.relations.find(name);
      if (it == model.relations.end()) return false;
      return it->second.count({a, b}) > 0;
    }
    throw EvalError("unsupported atom " + print_term(t));
  }
};

}  // namespace

std::optional<bool> evaluate_partial(const Term& form, const Model& model,
                                     const EvalOptions& opts) {
  if (!free_vars(form).empty())
    throw EvalError("form is not closed");
  if (type_of(form) != SemType::t())
    throw EvalError("form is not truth-valued");
  const DimensionMap& dims = opts.dimensions ? *opts.dimensions : default_dimensions();
  std::set<double> grid = degree_grid(form, model, dims);
  for (double d : opts.extra_degrees) grid.insert(d);
  Evaluator ev{model, dims, std::vector<double>(grid.begin(), grid.end()),
               opts.missing_measures};
  Env env;
  return ev.formula(form, env);
}

bool evaluate(const Term& form, const Model& model, const EvalOptions& opts) {
  auto r = evaluate_partial(form, model, opts);
  if (!r) throw EvalError("truth value is undefined (empty maximal degree)");
  return *r;
}

// -------------------------------------------------------------- accessibility

namespace {

void scan_referents(const Term& t, bool blocked, const std::string& path,
                    std::vector<ReferentInfo>& out) {
  switch (t.kind()) {
    case TermKind::Exists:
    case TermKind::Card: {
      std::string quant = "exists";
      if (t.kind() == TermKind::Card)
        quant = (t.card_kind() == CardKind::AtLeast ? "atleast " : "atmost ") +
                std::to_string(t.card_n());
      if (t.var_type() == SemType::e()) {
        ReferentInfo info;
        info.var = t.bound_name();
        info.quantifier = quant;
        info.restrictor = print_term(t.body());
        info.accessible = !blocked;
        info.position = path.empty() ? "top level" : path;
        out.push_back(std::move(info));
      }
      scan_referents(t.body(), blocked, path + (path.empty() ? "" : " > ") + quant +
                     " " + t.bound_name(), out);
      return;
    }
    case TermKind::Forall:
      scan_referents(t.body(), blocked,
                     path + (path.empty() ? "" : " > ") + "forall " + t.bound_name(), out);
      return;
    case TermKind::Iota:
    case TermKind::Lam:
      scan_referents(t.body(), blocked, path, out);
      return;
    case TermKind::Implies:
      scan_referents(t.lhs(), true, path + (path.empty() ? "" : " > ") + "antecedent", out);
      scan_referents(t.rhs(), blocked, path, out);
      return;
    case TermKind::Not:
      scan_referents(t.operand(), true, path + (path.empty() ? "" : " > ") + "negation", out);
      return;
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Greater:
      scan_referents(t.lhs(), blocked, path, out);
      scan_referents(t.rhs(), blocked, path, out);
      return;
    case TermKind::App:
      scan_referents(t.fn(), blocked, path, out);
      scan_referents(t.arg(), blocked, path, out);
      return;
    default:
      return;
  }
}

}  // namespace

AccessibilityReport accessibility(const Reading& reading) {
  AccessibilityReport report;
  scan_referents(reading.form, false, "", report.referents);
  return report;
}

std::vector<bool> check_reading_pair(const std::vector<Reading>& readings,
                                     const Model& model) {
  std::vector<bool> out;
  out.reserve(readings.size());
  for (const Reading& r : readings) out.push_back(evaluate(r.form, model));
  return out;
}

}  // namespace compsem
