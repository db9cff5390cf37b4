#pragma once

#include "compsem/types.hpp"

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace compsem {

// Simply typed lambda terms with logical constants. Terms are immutable
// values; all operations below are pure functions.
enum class TermKind {
  Var,
  Const,
  Lam,
  App,
  Forall,
  Exists,
  Card,  // counting quantifier: at least / at most n witnesses
  And,
  Or,
  Implies,
  Not,
  Greater,  // strict order on degrees
  Iota      // maximal degree satisfying the body; may be undefined
};

enum class CardKind { AtLeast, AtMost };

struct TypeError : std::runtime_error {
  TypeError(const std::string& location_, const std::string& expected_,
            const std::string& found_)
      : std::runtime_error("type error at " + location_ + ": expected " +
                           expected_ + ", found " + found_),
        location(location_),
        expected(expected_),
        found(found_) {}
  std::string location;
  std::string expected;
  std::string found;
};

struct GfaSplitError : std::runtime_error {
  explicit GfaSplitError(const std::string& what_)
      : std::runtime_error("no GFA split: " + what_) {}
};

struct QuantifyInError : std::runtime_error {
  explicit QuantifyInError(const std::string& what_)
      : std::runtime_error("quantify_in: " + what_) {}
};

class Term {
 public:
  static Term var(std::string name, SemType type);
  static Term constant(std::string name, SemType type);
  static Term lam(const Term& bound_var, Term body);
  static Term app(Term fn, Term arg);
  static Term forall(const Term& bound_var, Term body);
  static Term exists(const Term& bound_var, Term body);
  static Term card(CardKind kind, unsigned n, const Term& bound_var, Term body);
  static Term conj(Term lhs, Term rhs);
  static Term disj(Term lhs, Term rhs);
  static Term implies(Term lhs, Term rhs);
  static Term neg(Term operand);
  static Term greater(Term lhs, Term rhs);
  static Term iota(const Term& bound_var, Term body);

  TermKind kind() const;
  bool is(TermKind k) const { return kind() == k; }
  bool is_binder() const;

  const std::string& name() const;      // Var, Const
  const SemType& var_type() const;      // Var/Const: own type; binders: bound variable's type
  const std::string& bound_name() const;
  Term bound_var() const;               // binders, as a Var term
  const Term& body() const;             // binders
  const Term& fn() const;               // App
  const Term& arg() const;              // App
  const Term& lhs() const;              // And/Or/Implies/Greater
  const Term& rhs() const;
  const Term& operand() const;          // Not
  CardKind card_kind() const;
  unsigned card_n() const;

  // Structural equality, bound-variable names included.
  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Typing. Throws TypeError on ill-typed terms; deterministic.
SemType type_of(const Term& term);

std::map<std::string, SemType> free_vars(const Term& term);
bool is_free_in(const Term& term, const std::string& name);

// First of base1, base2, ... not in `taken`.
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

// Capture-avoiding substitution of `value` for free occurrences of `var`.
Term substitute(const Term& term, const Term& var, const Term& value);

// Beta-normal form. Terminates on well-typed terms.
Term normalize(const Term& term);

bool alpha_equal(const Term& a, const Term& b);

// Functional Application: normalize(f a).
Term apply_fa(const Term& f, const Term& a);

// Generalized Functional Application. For f : (a->b)->g and an argument whose
// type peels as a -> s1 -> ... -> sn -> b (minimal n), builds
//   lam s1 ... lam sn . f (lam v . a v s1 ... sn)
// and normalizes. n = 0 coincides with apply_fa.
Term apply_gfa(const Term& f, const Term& a);

// Functional Composition: normalize(lam x . f (g x)).
Term apply_fc(const Term& f, const Term& g);

// Montague-style quantifying-in: normalize(quantifier (lam target . scope)).
Term quantify_in(const Term& quantifier, const Term& scope, const Term& target);

Term apply_all(Term f, const std::vector<Term>& args);

// Decomposes nested applications into (head, [arg0, arg1, ...]).
std::pair<Term, std::vector<Term>> app_spine(const Term& term);

}  // namespace compsem
