#pragma once

#include "compsem/lf.hpp"
#include "compsem/term_text.hpp"

#include <optional>
#include <string>
#include <vector>

namespace compsem {

struct ComposeError : std::runtime_error {
  explicit ComposeError(const std::string& what_) : std::runtime_error(what_) {}
};

struct QuantifiedComplementError : ComposeError {
  explicit QuantifiedComplementError(const std::string& what_)
      : ComposeError("quantified complement: " + what_) {}
};

struct NoSemanticsError : ComposeError {
  explicit NoSemanticsError(const std::string& what_)
      : ComposeError("no semantics: " + what_) {}
};

struct NoAntecedentError : ComposeError {
  explicit NoAntecedentError(const std::string& what_)
      : ComposeError("no antecedent: " + what_) {}
};

struct NotAClauseError : ComposeError {
  explicit NotAClauseError(const std::string& what_)
      : ComposeError("not a clause: " + what_) {}
};

// Semantic lexicon: typed constants plus the closed combinators the engine
// composes with. Every entry is closed and well-typed; standard() ships the
// fragment's inventory.
struct SemLexicon {
  Signature constants;
  Term er;          // comparative morpheme
  Term wh_wra;      // complement operator after reconstruction
  Term wh_direct;   // small-clause operator (direct analyses)
  Term pos_closure; // existential degree closure for positive adjectives
  Term pred_and;    // predicate intersection for reduced relatives
  Term or_lift;     // generalized disjunction of NP meanings

  static SemLexicon standard();

  Term constant(const std::string& key) const;
  Term lift_name(const std::string& key) const;      // lam Q . Q c
  Term determiner(const LexEntry& det) const;        // throws NoSemanticsError
  Term adjective(const LexEntry& adj) const;         // degree-first entry
  bool has_constant(const std::string& key) const;
};

enum class StepMode { FA, GFA, QuantifyIn };

struct DerivationStep {
  std::string note;
  StepMode mode = StepMode::FA;
  std::vector<Term> operands;  // FA/GFA: {f, a}; QuantifyIn: {q, scope, target}
  Term result;
};

struct P0Resolution {
  bool applied = false;
  std::optional<Term> antecedent;
  std::string description;
};

// One fully composed reading: a closed truth-valued form, the scope choice
// that produced it, and a replayable derivation trace.
struct Reading {
  Term form;
  Term pre_anaphora_form;
  ScopeAssignment scope;
  ConstructionTag tag = ConstructionTag::Plain;
  P0Resolution p0;
  std::vector<DerivationStep> trace;
};

Reading compose_wra(const LfTree& lf, const ScopeAssignment& scope, const SemLexicon& sem);
Reading compose_nra(const SurfaceTree& tree, const SemLexicon& sem);
Reading compose_pred(const SurfaceTree& tree, const SemLexicon& sem);

// Dispatch over the parse's construction tag; WRA readings are composed per
// scope assignment and deduplicated up to alpha-equivalence.
std::vector<Reading> compose_all(const SurfaceTree& tree, const SemLexicon& sem);

// Replaces every occurrence of the anaphoric relation P0 and renormalizes.
Term instantiate_p0(const Term& form, const Term& antecedent);
Reading resolve_p0(const Reading& reading, const Term& antecedent);

// Re-runs the recorded combination steps; true when every step reproduces its
// recorded result and the last one matches the pre-anaphora form.
bool replay_trace(const Reading& reading);

}  // namespace compsem
