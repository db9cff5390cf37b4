#pragma once

#include "compsem/model.hpp"
#include "compsem/semantics.hpp"

#include <optional>
#include <string>

namespace compsem {

struct UnsupportedConstructionError : std::runtime_error {
  explicit UnsupportedConstructionError(const std::string& what_)
      : std::runtime_error("unsupported construction: " + what_) {}
};

// The direct analysis used as a contrast baseline: the comparison is a pair
// of entities and one degree property; the whole matrix (determiner
// included) sits inside the maximal-degree description.
struct HeimForm {
  std::string correlate_key;
  std::string complement_key;
  Term degree_relation;  // e -> d -> t
  std::string sentence;

  // (iota d . rel(a)(d)) > (iota d . rel(b)(d))
  Term display_term() const;
};

HeimForm build_heim(const SurfaceTree& tree, const SemLexicon& sem);

// f(a) > f(b) with f the maximal satisfying degree; no maximum means the
// comparison is undefined.
std::optional<bool> eval_heim(const HeimForm& form, const Model& model);

}  // namespace compsem
