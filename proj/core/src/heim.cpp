#include "compsem/heim.hpp"

namespace compsem {

namespace {

const SynTree* find_tag(const SynTree& t, ConstructionTag tag) {
  if (t.tag == tag) return &t;
  for (const SynTree& k : t.kids)
    if (const SynTree* p = find_tag(k, tag)) return p;
  return nullptr;
}

}  // namespace

Term HeimForm::display_term() const {
  Term d = Term::var("d", SemType::d());
  auto wrap = [&](const std::string& key) {
    Term c = Term::constant(key, SemType::e());
    return Term::iota(d, normalize(Term::app(Term::app(degree_relation, c), d)));
  };
  return Term::greater(wrap(correlate_key), wrap(complement_key));
}

HeimForm build_heim(const SurfaceTree& tree, const SemLexicon& sem) {
  ConstructionTag tag = classify_construction(tree);
  if (tree.cat != Cat::IP)
    throw UnsupportedConstructionError("baseline needs a clause");
  Term x = Term::var("x", SemType::e());
  Term d = Term::var("d", SemType::d());

  if (tag == ConstructionTag::Pred) {
    const SynTree& ap = tree.kids[2];
    const SynTree& sc = ap.kids[1].kids[1];
    if (!sc.kids[1].is_leaf())
      throw UnsupportedConstructionError("baseline complement must be a proper name");
    const LexEntry& adj = ap.kids[0].kids[0].lex;
    if (adj.attributive)
      throw UnsupportedConstructionError("predicative baseline expects a predicative adjective");
    Term rel = Term::lam(x, Term::lam(d,
        Term::app(Term::app(sem.constant(adj.sem_key), x), d)));
    return HeimForm{tree.kids[0].lex.sem_key, sc.kids[1].lex.sem_key, rel,
                    print_bracketing(tree)};
  }

  if (tag == ConstructionTag::Wra) {
    const SynTree* host = find_tag(tree, ConstructionTag::Wra);
    if (!host || tree.kids.size() < 3 || !tree.kids[0].is_leaf())
      throw UnsupportedConstructionError("baseline expects a canonical transitive clause");
    const SynTree& comp_np = host->kids[1].kids[1];
    if (!comp_np.is_leaf())
      throw UnsupportedConstructionError("baseline complement must be a proper name");
    const SynTree& inner = host->kids[0];
    const LexEntry& det = inner.kids[0].lex;
    const LexEntry* adj = nullptr;
    std::string noun;
    for (const SynTree& k : inner.kids[1].kids) {
      if (k.cat == Cat::A) adj = &k.lex;
      if (k.cat == Cat::N) noun = k.lex.sem_key;
    }
    if (!adj || !adj->attributive)
      throw UnsupportedConstructionError("baseline expects an attributive comparative");
    const SynTree* v = nullptr;
    for (const SynTree& k : tree.kids)
      if (k.cat == Cat::V) v = &k;
    if (!v) throw UnsupportedConstructionError("matrix verb not found");

    Term y = Term::var("y", SemType::e());
    Term restr = Term::app(Term::app(Term::app(sem.constant(adj->sem_key),
                                               sem.constant(noun)), y), d);
    Term scope = Term::app(Term::app(sem.constant(v->lex.sem_key), x), y);
    Term body = Term::conj(restr, scope);
    Term quantified = [&]() -> Term {
      switch (det.det_class) {
        case DetClass::Indefinite:
        case DetClass::Npi:
          return Term::exists(y, body);
        case DetClass::Cardinal:
          return Term::card(det.card_kind, det.card_n, y, body);
        default:
          throw UnsupportedConstructionError(
              "baseline covers indefinite and cardinal determiners only");
      }
    }();
    Term rel = Term::lam(x, Term::lam(d, quantified));
    return HeimForm{tree.kids[0].lex.sem_key, comp_np.lex.sem_key, rel,
                    print_bracketing(tree)};
  }

  throw UnsupportedConstructionError("baseline covers PRED and WRA clauses with name complements");
}

std::optional<bool> eval_heim(const HeimForm& form, const Model& model) {
  return evaluate_partial(form.display_term(), model);
}

}  // namespace compsem
