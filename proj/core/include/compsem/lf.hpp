#pragma once

#include "compsem/grammar.hpp"

#include <map>
#include <string>
#include <vector>

namespace compsem {

struct LfError : std::runtime_error {
  explicit LfError(const std::string& what_) : std::runtime_error(what_) {}
};

struct RedundantQrError : LfError {
  explicit RedundantQrError(const std::string& what_) : LfError("redundant QR: " + what_) {}
};

struct NotApplicableError : LfError {
  explicit NotApplicableError(const std::string& what_) : LfError("not applicable: " + what_) {}
};

struct DerivStep {
  std::string op;        // transformation name
  std::string snapshot;  // labelled bracketing after the step
  bool operator==(const DerivStep&) const = default;
};

// A surface tree after covert movement: traces and the WH operator are
// index-bearing leaves; the log keeps one bracketing snapshot per step.
struct LfTree {
  SynTree root;
  std::vector<DerivStep> log;
  std::map<std::string, std::string> index_aliases;  // e.g. j -> i
};

LfTree lf_from_surface(const SurfaceTree& tree);

// Adjoins the comparative NP to IP, leaving trace t_i. A topicalized
// comparative NP counts as already raised. PLAIN trees pass unchanged.
LfTree qr_comparative_np(const LfTree& lf);

// Raises the subject correlate, leaving trace t_1.
LfTree qr_correlate(const LfTree& lf);

// Copies the matrix IP into the complement: the copied subject trace is
// re-indexed to the complement NP (index 2), the copied object trace keeps
// the comparative NP's index (strict copy), then WH insertion binds it with
// index j resolved to i. Two steps are logged.
LfTree acd_reconstruct(const LfTree& lf);

// Full derivation for a parse: surface snapshot plus all applicable steps.
LfTree build_lf(const SurfaceTree& tree);

enum class ScopeOrder { WhOverNp, NpOverWh, Direct };

struct ScopeAssignment {
  ScopeOrder order = ScopeOrder::Direct;
  std::string label;  // "WH > NP", "NP > WH", "direct"
  bool operator==(const ScopeAssignment&) const = default;
};

// Candidate relative scopes of the complement-internal NP and the WH
// operator: NPI complements only sit under WH, universals only above it,
// names and disjunctions admit both orders. Non-reconstructed structures get
// the single direct assignment.
std::vector<ScopeAssignment> enumerate_scopes(const LfTree& lf);

struct Judgment {
  enum class Verdict { Ok, Marginal, Bad };
  Verdict verdict = Verdict::Ok;
  std::string rule;
  std::string explanation;
};

// Acceptability as a pure function of determiner class, construction tag and
// complement position.
Judgment judge(const SurfaceTree& tree);

std::string verdict_name(Judgment::Verdict v);

// Invariant checker: every trace is bound by exactly one c-commanding
// indexed NP or WH operator (indices resolved through aliases).
bool traces_bound(const LfTree& lf);

}  // namespace compsem
