#include "compsem/term.hpp"

#include <algorithm>
#include <optional>

namespace compsem {

struct Term::Node {
  TermKind kind;
  std::string name;             // Var/Const name, or binder's bound name
  SemType ty;                   // Var/Const type, or bound variable's type
  CardKind card_kind = CardKind::AtLeast;
  unsigned card_n = 0;
  std::vector<Term> kids;
};

namespace {

bool binder_kind(TermKind k) {
  return k == TermKind::Lam || k == TermKind::Forall || k == TermKind::Exists ||
         k == TermKind::Card || k == TermKind::Iota;
}

std::string describe(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return "variable " + t.name();
    case TermKind::Const: return "constant " + t.name();
    case TermKind::Lam: return "lam " + t.bound_name();
    case TermKind::App: return "application";
    case TermKind::Forall: return "forall " + t.bound_name();
    case TermKind::Exists: return "exists " + t.bound_name();
    case TermKind::Card: return "counting quantifier over " + t.bound_name();
    case TermKind::And: return "&";
    case TermKind::Or: return "|";
    case TermKind::Implies: return "->";
    case TermKind::Not: return "~";
    case TermKind::Greater: return ">";
    case TermKind::Iota: return "iota " + t.bound_name();
  }
  return "?";
}

void require_var(const Term& v, const char* where) {
  if (v.kind() != TermKind::Var)
    throw std::invalid_argument(std::string(where) + ": binder expects a Var");
}

}  // namespace

// ---------------------------------------------------------------- factories

Term Term::var(std::string name, SemType type) {
  Node n;
  n.kind = TermKind::Var;
  n.name = std::move(name);
  n.ty = std::move(type);
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::constant(std::string name, SemType type) {
  Node n;
  n.kind = TermKind::Const;
  n.name = std::move(name);
  n.ty = std::move(type);
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::lam(const Term& bound_var, Term body) {
  require_var(bound_var, "lam");
  Node n;
  n.kind = TermKind::Lam;
  n.name = bound_var.name();
  n.ty = bound_var.var_type();
  n.kids = {std::move(body)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::app(Term fn, Term arg) {
  Node n;
  n.kind = TermKind::App;
  n.kids = {std::move(fn), std::move(arg)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::forall(const Term& bound_var, Term body) {
  require_var(bound_var, "forall");
  Node n;
  n.kind = TermKind::Forall;
  n.name = bound_var.name();
  n.ty = bound_var.var_type();
  n.kids = {std::move(body)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::exists(const Term& bound_var, Term body) {
  require_var(bound_var, "exists");
  Node n;
  n.kind = TermKind::Exists;
  n.name = bound_var.name();
  n.ty = bound_var.var_type();
  n.kids = {std::move(body)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::card(CardKind kind, unsigned card_n, const Term& bound_var, Term body) {
  require_var(bound_var, "card");
  if (card_n == 0) throw std::invalid_argument("card: n must be positive");
  Node n;
  n.kind = TermKind::Card;
  n.name = bound_var.name();
  n.ty = bound_var.var_type();
  n.card_kind = kind;
  n.card_n = card_n;
  n.kids = {std::move(body)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::conj(Term lhs, Term rhs) {
  Node n;
  n.kind = TermKind::And;
  n.kids = {std::move(lhs), std::move(rhs)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::disj(Term lhs, Term rhs) {
  Node n;
  n.kind = TermKind::Or;
  n.kids = {std::move(lhs), std::move(rhs)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::implies(Term lhs, Term rhs) {
  Node n;
  n.kind = TermKind::Implies;
  n.kids = {std::move(lhs), std::move(rhs)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::neg(Term operand) {
  Node n;
  n.kind = TermKind::Not;
  n.kids = {std::move(operand)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::greater(Term lhs, Term rhs) {
  Node n;
  n.kind = TermKind::Greater;
  n.kids = {std::move(lhs), std::move(rhs)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::iota(const Term& bound_var, Term body) {
  require_var(bound_var, "iota");
  if (bound_var.var_type() != SemType::d())
    throw std::invalid_argument("iota binds a degree variable");
  Node n;
  n.kind = TermKind::Iota;
  n.name = bound_var.name();
  n.ty = bound_var.var_type();
  n.kids = {std::move(body)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

// ----------------------------------------------------------------- accessors

TermKind Term::kind() const { return node_->kind; }
bool Term::is_binder() const { return binder_kind(node_->kind); }
const std::string& Term::name() const { return node_->name; }
const SemType& Term::var_type() const { return node_->ty; }
const std::string& Term::bound_name() const { return node_->name; }
Term Term::bound_var() const { return Term::var(node_->name, node_->ty); }
const Term& Term::body() const { return node_->kids[0]; }
const Term& Term::fn() const { return node_->kids[0]; }
const Term& Term::arg() const { return node_->kids[1]; }
const Term& Term::lhs() const { return node_->kids[0]; }
const Term& Term::rhs() const { return node_->kids[1]; }
const Term& Term::operand() const { return node_->kids[0]; }
CardKind Term::card_kind() const { return node_->card_kind; }
unsigned Term::card_n() const { return node_->card_n; }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  if (node_->name != other.node_->name) return false;
  if (node_->ty != other.node_->ty) return false;
  if (node_->card_kind != other.node_->card_kind) return false;
  if (node_->card_n != other.node_->card_n) return false;
  if (node_->kids.size() != other.node_->kids.size()) return false;
  for (size_t i = 0; i < node_->kids.size(); ++i)
    if (node_->kids[i] != other.node_->kids[i]) return false;
  return true;
}

// -------------------------------------------------------------------- typing

namespace {

SemType type_of_impl(const Term& t, std::vector<std::pair<std::string, SemType>>& env) {
  switch (t.kind()) {
    case TermKind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == t.name()) {
          if (it->second != t.var_type())
            throw TypeError(describe(t), it->second.to_string(),
                            t.var_type().to_string());
          return it->second;
        }
      }
      return t.var_type();
    }
    case TermKind::Const:
      return t.var_type();
    case TermKind::Lam: {
      env.emplace_back(t.bound_name(), t.var_type());
      SemType bt = type_of_impl(t.body(), env);
      env.pop_back();
      return SemType::arrow(t.var_type(), bt);
    }
    case TermKind::App: {
      SemType ft = type_of_impl(t.fn(), env);
      SemType at = type_of_impl(t.arg(), env);
      if (!ft.is_arrow())
        throw TypeError(describe(t.fn()), "a function type", ft.to_string());
      if (ft.arg() != at)
        throw TypeError(describe(t), ft.arg().to_string(), at.to_string());
      return ft.result();
    }
    case TermKind::Forall:
    case TermKind::Exists:
    case TermKind::Card: {
      env.emplace_back(t.bound_name(), t.var_type());
      SemType bt = type_of_impl(t.body(), env);
      env.pop_back();
      if (bt != SemType::t())
        throw TypeError(describe(t), "t", bt.to_string());
      return SemType::t();
    }
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Implies: {
      SemType lt = type_of_impl(t.lhs(), env);
      SemType rt = type_of_impl(t.rhs(), env);
      if (lt != SemType::t()) throw TypeError(describe(t), "t", lt.to_string());
      if (rt != SemType::t()) throw TypeError(describe(t), "t", rt.to_string());
      return SemType::t();
    }
    case TermKind::Not: {
      SemType ot = type_of_impl(t.operand(), env);
      if (ot != SemType::t()) throw TypeError(describe(t), "t", ot.to_string());
      return SemType::t();
    }
    case TermKind::Greater: {
      SemType lt = type_of_impl(t.lhs(), env);
      SemType rt = type_of_impl(t.rhs(), env);
      if (lt != SemType::d()) throw TypeError(describe(t), "d", lt.to_string());
      if (rt != SemType::d()) throw TypeError(describe(t), "d", rt.to_string());
      return SemType::t();
    }
    case TermKind::Iota: {
      env.emplace_back(t.bound_name(), t.var_type());
      SemType bt = type_of_impl(t.body(), env);
      env.pop_back();
      if (bt != SemType::t())
        throw TypeError(describe(t), "t", bt.to_string());
      return SemType::d();
    }
  }
  throw std::logic_error("type_of: unknown kind");
}

}  // namespace

SemType type_of(const Term& term) {
  std::vector<std::pair<std::string, SemType>> env;
  return type_of_impl(term, env);
}

// ------------------------------------------------------------ free variables

namespace {

void free_vars_impl(const Term& t, std::set<std::string>& bound,
                    std::map<std::string, SemType>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      if (!bound.count(t.name())) out.emplace(t.name(), t.var_type());
      return;
    case TermKind::Const:
      return;
    default:
      break;
  }
  if (t.is_binder()) {
    bool already = bound.count(t.bound_name()) > 0;
    bound.insert(t.bound_name());
    free_vars_impl(t.body(), bound, out);
    if (!already) bound.erase(t.bound_name());
    return;
  }
  switch (t.kind()) {
    case TermKind::App:
      free_vars_impl(t.fn(), bound, out);
      free_vars_impl(t.arg(), bound, out);
      return;
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Implies:
    case TermKind::Greater:
      free_vars_impl(t.lhs(), bound, out);
      free_vars_impl(t.rhs(), bound, out);
      return;
    case TermKind::Not:
      free_vars_impl(t.operand(), bound, out);
      return;
    default:
      return;
  }
}

}  // namespace

std::map<std::string, SemType> free_vars(const Term& term) {
  std::set<std::string> bound;
  std::map<std::string, SemType> out;
  free_vars_impl(term, bound, out);
  return out;
}

bool is_free_in(const Term& term, const std::string& name) {
  return free_vars(term).count(name) > 0;
}

std::string fresh_name(const std::string& base,
                       const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (unsigned k = 1;; ++k) {
    std::string cand = base + std::to_string(k);
    if (!taken.count(cand)) return cand;
  }
}

// -------------------------------------------------------------- substitution

namespace {

Term rebuild_binder(const Term& t, const Term& v, Term body) {
  switch (t.kind()) {
    case TermKind::Lam: return Term::lam(v, std::move(body));
    case TermKind::Forall: return Term::forall(v, std::move(body));
    case TermKind::Exists: return Term::exists(v, std::move(body));
    case TermKind::Card: return Term::card(t.card_kind(), t.card_n(), v, std::move(body));
    case TermKind::Iota: return Term::iota(v, std::move(body));
    default: throw std::logic_error("rebuild_binder: not a binder");
  }
}

Term subst_impl(const Term& t, const std::string& var_name, const Term& value) {
  switch (t.kind()) {
    case TermKind::Var:
      return t.name() == var_name ? value : t;
    case TermKind::Const:
      return t;
    case TermKind::App:
      return Term::app(subst_impl(t.fn(), var_name, value),
                       subst_impl(t.arg(), var_name, value));
    case TermKind::And:
      return Term::conj(subst_impl(t.lhs(), var_name, value),
                        subst_impl(t.rhs(), var_name, value));
    case TermKind::Or:
      return Term::disj(subst_impl(t.lhs(), var_name, value),
                        subst_impl(t.rhs(), var_name, value));
    case TermKind::Implies:
      return Term::implies(subst_impl(t.lhs(), var_name, value),
                           subst_impl(t.rhs(), var_name, value));
    case TermKind::Greater:
      return Term::greater(subst_impl(t.lhs(), var_name, value),
                           subst_impl(t.rhs(), var_name, value));
    case TermKind::Not:
      return Term::neg(subst_impl(t.operand(), var_name, value));
    default:
      break;
  }
  // binders
  if (t.bound_name() == var_name) return t;  // shadowed
  if (!is_free_in(t.body(), var_name)) return t;
  if (is_free_in(value, t.bound_name())) {
    // rename the bound variable to avoid capturing a free variable of `value`
    std::set<std::string> taken;
    for (const auto& [n, ty] : free_vars(value)) taken.insert(n);
    for (const auto& [n, ty] : free_vars(t.body())) taken.insert(n);
    taken.insert(var_name);
    Term fresh = Term::var(fresh_name(t.bound_name(), taken), t.var_type());
    Term renamed = subst_impl(t.body(), t.bound_name(), fresh);
    return rebuild_binder(t, fresh, subst_impl(renamed, var_name, value));
  }
  return rebuild_binder(t, t.bound_var(), subst_impl(t.body(), var_name, value));
}

}  // namespace

Term substitute(const Term& term, const Term& var, const Term& value) {
  require_var(var, "substitute");
  SemType vt = type_of(value);
  if (vt != var.var_type())
    throw TypeError("substitute for " + var.name(), var.var_type().to_string(),
                    vt.to_string());
  return subst_impl(term, var.name(), value);
}

// ------------------------------------------------------------- normalization

Term normalize(const Term& term) {
  switch (term.kind()) {
    case TermKind::Var:
    case TermKind::Const:
      return term;
    case TermKind::App: {
      Term f = normalize(term.fn());
      Term a = normalize(term.arg());
      if (f.kind() == TermKind::Lam)
        return normalize(subst_impl(f.body(), f.bound_name(), a));
      return Term::app(std::move(f), std::move(a));
    }
    case TermKind::And:
      return Term::conj(normalize(term.lhs()), normalize(term.rhs()));
    case TermKind::Or:
      return Term::disj(normalize(term.lhs()), normalize(term.rhs()));
    case TermKind::Implies:
      return Term::implies(normalize(term.lhs()), normalize(term.rhs()));
    case TermKind::Greater:
      return Term::greater(normalize(term.lhs()), normalize(term.rhs()));
    case TermKind::Not:
      return Term::neg(normalize(term.operand()));
    default:
      return rebuild_binder(term, term.bound_var(), normalize(term.body()));
  }
}

// ----------------------------------------------------------- alpha equality

namespace {

bool alpha_impl(const Term& a, const Term& b,
                std::map<std::string, int>& ea, std::map<std::string, int>& eb,
                int depth) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Var: {
      auto ia = ea.find(a.name());
      auto ib = eb.find(b.name());
      if ((ia != ea.end()) != (ib != eb.end())) return false;
      if (ia != ea.end()) return ia->second == ib->second;
      return a.name() == b.name() && a.var_type() == b.var_type();
    }
    case TermKind::Const:
      return a.name() == b.name() && a.var_type() == b.var_type();
    case TermKind::App:
      return alpha_impl(a.fn(), b.fn(), ea, eb, depth) &&
             alpha_impl(a.arg(), b.arg(), ea, eb, depth);
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Implies:
    case TermKind::Greater:
      return alpha_impl(a.lhs(), b.lhs(), ea, eb, depth) &&
             alpha_impl(a.rhs(), b.rhs(), ea, eb, depth);
    case TermKind::Not:
      return alpha_impl(a.operand(), b.operand(), ea, eb, depth);
    default:
      break;
  }
  // binders
  if (a.var_type() != b.var_type()) return false;
  if (a.kind() == TermKind::Card &&
      (a.card_kind() != b.card_kind() || a.card_n() != b.card_n()))
    return false;
  auto olda = ea.find(a.bound_name()) != ea.end()
                  ? std::optional<int>(ea[a.bound_name()]) : std::nullopt;
  auto oldb = eb.find(b.bound_name()) != eb.end()
                  ? std::optional<int>(eb[b.bound_name()]) : std::nullopt;
  ea[a.bound_name()] = depth;
  eb[b.bound_name()] = depth;
  bool ok = alpha_impl(a.body(), b.body(), ea, eb, depth + 1);
  if (olda) ea[a.bound_name()] = *olda; else ea.erase(a.bound_name());
  if (oldb) eb[b.bound_name()] = *oldb; else eb.erase(b.bound_name());
  return ok;
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  std::map<std::string, int> ea, eb;
  return alpha_impl(a, b, ea, eb, 0);
}

// ----------------------------------------------------- combination operations

namespace {

// Readable binder names for synthesised abstractions, keyed on the type.
std::string name_for_type(const SemType& ty) {
  if (ty == SemType::e()) return "x";
  if (ty == SemType::d()) return "d";
  if (ty == SemType::t()) return "p";
  if (ty == SemType::arrow(SemType::e(), SemType::t())) return "Q";
  if (ty == SemType::arrow(SemType::d(), SemType::t())) return "D";
  if (ty == SemType::arrow(SemType::arrow(SemType::d(), SemType::t()), SemType::t()))
    return "P";
  if (ty == SemType::arrow(SemType::arrow(SemType::e(), SemType::t()), SemType::t()))
    return "N";
  return "f";
}

std::set<std::string> names_in_use(const Term& a, const Term& b) {
  std::set<std::string> taken;
  for (const auto& [n, ty] : free_vars(a)) taken.insert(n);
  for (const auto& [n, ty] : free_vars(b)) taken.insert(n);
  return taken;
}

}  // namespace

Term apply_fa(const Term& f, const Term& a) {
  SemType ft = type_of(f);
  SemType at = type_of(a);
  if (!ft.is_arrow())
    throw TypeError("apply_fa", "a function type", ft.to_string());
  if (ft.arg() != at)
    throw TypeError("apply_fa", ft.arg().to_string(), at.to_string());
  return normalize(Term::app(f, a));
}

Term apply_gfa(const Term& f, const Term& a) {
  SemType ft = type_of(f);
  if (!ft.is_arrow() || !ft.arg().is_arrow())
    throw GfaSplitError("function must take a function-typed argument, got " +
                        ft.to_string());
  const SemType& alpha = ft.arg().arg();
  const SemType& beta = ft.arg().result();
  SemType at = type_of(a);
  if (!at.is_arrow() || at.arg() != alpha)
    throw GfaSplitError("argument type " + at.to_string() +
                        " does not start with " + alpha.to_string());
  std::vector<SemType> sigmas;
  SemType rest = at.result();
  while (rest != beta) {
    if (!rest.is_arrow())
      throw GfaSplitError("no residual prefix aligns " + at.to_string() +
                          " with " + ft.arg().to_string());
    sigmas.push_back(rest.arg());
    rest = rest.result();
  }
  if (sigmas.empty()) {
    Term na = normalize(a);
    if (na.kind() != TermKind::Lam) return apply_fa(f, a);
  }
  std::set<std::string> taken = names_in_use(f, a);
  Term v = Term::var(fresh_name(name_for_type(alpha), taken), alpha);
  taken.insert(v.name());
  std::vector<Term> svars;
  svars.reserve(sigmas.size());
  for (const SemType& s : sigmas) {
    Term sv = Term::var(fresh_name(name_for_type(s), taken), s);
    taken.insert(sv.name());
    svars.push_back(sv);
  }
  Term inner = Term::app(a, v);
  for (const Term& sv : svars) inner = Term::app(inner, sv);
  Term out = Term::app(f, Term::lam(v, inner));
  for (auto it = svars.rbegin(); it != svars.rend(); ++it)
    out = Term::lam(*it, out);
  return normalize(out);
}

Term apply_fc(const Term& f, const Term& g) {
  SemType ft = type_of(f);
  SemType gt = type_of(g);
  if (!ft.is_arrow())
    throw TypeError("apply_fc", "a function type", ft.to_string());
  if (!gt.is_arrow())
    throw TypeError("apply_fc", "a function type", gt.to_string());
  if (gt.result() != ft.arg())
    throw TypeError("apply_fc", ft.arg().to_string(), gt.result().to_string());
  std::set<std::string> taken = names_in_use(f, g);
  Term x = Term::var(fresh_name(name_for_type(gt.arg()), taken), gt.arg());
  return normalize(Term::lam(x, Term::app(f, Term::app(g, x))));
}

Term quantify_in(const Term& quantifier, const Term& scope, const Term& target) {
  require_var(target, "quantify_in");
  SemType qt = type_of(quantifier);
  SemType expected = SemType::arrow(
      SemType::arrow(target.var_type(), SemType::t()), SemType::t());
  if (qt != expected)
    throw TypeError("quantify_in", expected.to_string(), qt.to_string());
  SemType st = type_of(scope);
  if (st != SemType::t())
    throw TypeError("quantify_in scope", "t", st.to_string());
  if (!is_free_in(scope, target.name()))
    throw QuantifyInError("target " + target.name() +
                          " is not free in the scope");
  return normalize(Term::app(quantifier, Term::lam(target, scope)));
}

Term apply_all(Term f, const std::vector<Term>& args) {
  for (const Term& a : args) f = Term::app(std::move(f), a);
  return f;
}

std::pair<Term, std::vector<Term>> app_spine(const Term& term) {
  std::vector<Term> args;
  Term head = term;
  while (head.kind() == TermKind::App) {
    args.push_back(head.arg());
    head = head.fn();
  }
  std::reverse(args.begin(), args.end());
  return {head, args};
}

}  // namespace compsem
