#include "compsem/semantics.hpp"

#include <algorithm>

namespace compsem {

namespace {

const SemType& E() { return SemType::e(); }
const SemType& D() { return SemType::d(); }
const SemType& T() { return SemType::t(); }
SemType et() { return SemType::arrow(E(), T()); }
SemType dt() { return SemType::arrow(D(), T()); }
SemType eet() { return SemType::arrow(E(), SemType::arrow(E(), T())); }
SemType edt() { return SemType::arrow(E(), dt()); }

}  // namespace

SemLexicon SemLexicon::standard() {
  Signature sig;
  sig.emplace("g*", E());
  sig.emplace("b*", E());
  sig.emplace("r*", E());
  sig.emplace("bmw*", E());
  sig.emplace("et*", E());
  sig.emplace("car'", et());
  sig.emplace("policeman'", et());
  sig.emplace("professor'", et());
  sig.emplace("building'", et());
  sig.emplace("bmw'", et());
  sig.emplace("own'", eet());
  sig.emplace("has'", eet());
  sig.emplace("fast'", SemType::arrow(et(), edt()));
  sig.emplace("rich'", edt());
  sig.emplace("high'", edt());
  sig.emplace("P0", edt());

  Term er = read_term(
      "lam D:(d->t) . lam P:((d->t)->t) . exists d':d . (P (lam d:d . d' > d)) & (D d')",
      sig);
  // The complement operator bundles two jobs: an existential anaphor over
  // individuals standing in the recovered degree relation P0, and a degree
  // determiner binding its degree slot. Splitting them over two covert
  // positions (an anaphoric indefinite in the gap plus a separate degree
  // binder) types out the same way — see the degree-determiner composition
  // in the tests — but needs an extra empty position, so the bundled entry
  // is the one the engine uses. The degree determiner is universal here; a
  // maximality operator over the same set would give equivalent truth
  // conditions on these finite models.
  Term wh_wra = read_term(
      "lam Q:(e->t) . lam D':(d->t) . forall d:d . (exists y:e . ((P0 y) d) & (Q y)) -> (D' d)",
      sig);
  // Small-clause variant: the complement NP itself saturates the anaphor.
  Term wh_direct = read_term(
      "lam P:((e->t)->t) . lam D:(d->t) . forall d:d . (P (lam x:e . ((P0 x) d))) -> (D d)",
      sig);
  Term pos_closure = read_term(
      "lam R:(e->(d->t)) . lam x:e . exists d:d . ((R x) d)", sig);
  Term pred_and = read_term(
      "lam P:(e->t) . lam Q:(e->t) . lam x:e . (P x) & (Q x)", sig);
  Term or_lift = read_term(
      "lam N:((e->t)->t) . lam M:((e->t)->t) . lam Q:(e->t) . (N Q) | (M Q)", sig);
  return SemLexicon{std::move(sig), std::move(er), std::move(wh_wra),
                    std::move(wh_direct), std::move(pos_closure),
                    std::move(pred_and), std::move(or_lift)};
}

bool SemLexicon::has_constant(const std::string& key) const {
  return constants.count(key) > 0;
}

Term SemLexicon::constant(const std::string& key) const {
  auto it = constants.find(key);
  if (it == constants.end())
    throw NoSemanticsError("no constant for key '" + key + "'");
  return Term::constant(key, it->second);
}

Term SemLexicon::lift_name(const std::string& key) const {
  Term q = Term::var("Q", et());
  return Term::lam(q, Term::app(q, constant(key)));
}

Term SemLexicon::determiner(const LexEntry& det) const {
  Term p = Term::var("P", et());
  Term q = Term::var("Q", et());
  Term x = Term::var("x", E());
  Term restr = Term::app(p, x);
  Term scope = Term::app(q, x);
  switch (det.det_class) {
    case DetClass::Indefinite:
    case DetClass::Npi:
      return Term::lam(p, Term::lam(q, Term::exists(x, Term::conj(restr, scope))));
    case DetClass::Universal:
      return Term::lam(p, Term::lam(q, Term::forall(x, Term::implies(restr, scope))));
    case DetClass::Cardinal:
      return Term::lam(p, Term::lam(q, Term::card(det.card_kind, det.card_n, x,
                                                  Term::conj(restr, scope))));
    case DetClass::Definite:
      throw NoSemanticsError("the definite article has no entry in this fragment");
    default:
      throw NoSemanticsError("determiner '" + det.sem_key + "' has no entry");
  }
}

Term SemLexicon::adjective(const LexEntry& adj) const {
  Term a = constant(adj.sem_key);
  Term d = Term::var("d", D());
  Term x = Term::var("x", E());
  if (adj.attributive) {
    Term q = Term::var("Q", et());
    return Term::lam(d, Term::lam(q, Term::lam(x,
        Term::app(Term::app(Term::app(a, q), x), d))));
  }
  return Term::lam(d, Term::lam(x, Term::app(Term::app(a, x), d)));
}

// --------------------------------------------------------- clause extraction

namespace {

struct NpDesc {
  enum class Kind { Name, Quantified, Coord };
  Kind kind = Kind::Name;
  std::string name_key;                 // Name
  LexEntry det;                         // Quantified
  std::string noun_key;                 // Quantified
  std::vector<std::string> coord_keys;  // Coord
};

NpDesc describe_np(const SynTree& np) {
  NpDesc d;
  if (np.is_leaf()) {
    d.kind = NpDesc::Kind::Name;
    d.name_key = np.lex.sem_key;
    return d;
  }
  if (np.kids.size() == 3 && np.kids[1].cat == Cat::Coord) {
    d.kind = NpDesc::Kind::Coord;
    d.coord_keys = {np.kids[0].lex.sem_key, np.kids[2].lex.sem_key};
    return d;
  }
  if (np.kids.size() == 2 && np.kids[0].cat == Cat::Det && np.kids[1].cat == Cat::Nbar) {
    d.kind = NpDesc::Kind::Quantified;
    d.det = np.kids[0].lex;
    for (const SynTree& k : np.kids[1].kids)
      if (k.cat == Cat::N) d.noun_key = k.lex.sem_key;
    if (d.noun_key.empty()) throw ComposeError("complement NP lacks a head noun");
    return d;
  }
  throw ComposeError("unsupported NP shape");
}

struct Composer {
  const SemLexicon& sem;
  std::vector<DerivationStep> steps;

  Term fa(const std::string& note, const Term& f, const Term& a) {
    Term r = apply_fa(f, a);
    steps.push_back({note, StepMode::FA, {f, a}, r});
    return r;
  }
  Term gfa(const std::string& note, const Term& f, const Term& a) {
    Term r = apply_gfa(f, a);
    steps.push_back({note, StepMode::GFA, {f, a}, r});
    return r;
  }
  Term qi(const std::string& note, const Term& q, const Term& scope, const Term& target) {
    Term r = quantify_in(q, scope, target);
    steps.push_back({note, StepMode::QuantifyIn, {q, scope, target}, r});
    return r;
  }

  Term complement_gq(const NpDesc& np) {
    switch (np.kind) {
      case NpDesc::Kind::Name:
        return sem.lift_name(np.name_key);
      case NpDesc::Kind::Coord: {
        Term l = sem.lift_name(np.coord_keys[0]);
        Term r = sem.lift_name(np.coord_keys[1]);
        Term once = fa("coordination (left conjunct)", sem.or_lift, l);
        return fa("coordination (right conjunct)", once, r);
      }
      case NpDesc::Kind::Quantified: {
        Term det = sem.determiner(np.det);
        return fa("complement determiner + noun", det, sem.constant(np.noun_key));
      }
    }
    throw ComposeError("unreachable");
  }
};

// Pieces of a comparative clause gathered from the tree.
struct ClauseBits {
  std::string subj_key;
  std::string verb_key;
  LexEntry det;        // determiner of the comparative NP
  LexEntry adj;        // comparative adjective
  std::string noun_key;
  NpDesc complement;
};

const SynTree* find_cat(const SynTree& t, Cat c) {
  if (t.cat == c) return &t;
  for (const SynTree& k : t.kids)
    if (const SynTree* p = find_cat(k, c)) return p;
  return nullptr;
}

// Undoes object topicalization: [IP NP_k [IP subj V t_k ...]] composes like
// the canonical [IP subj V NP ...].
SynTree canonical_clause(const SynTree& tree) {
  if (tree.cat == Cat::IP && tree.kids.size() == 2 && tree.kids[0].cat == Cat::NP &&
      !tree.kids[0].index.empty() && tree.kids[1].cat == Cat::IP) {
    const SynTree& inner = tree.kids[1];
    SynTree out;
    out.cat = Cat::IP;
    for (const SynTree& k : inner.kids) {
      if (k.cat == Cat::Trace && k.index == tree.kids[0].index) {
        SynTree obj = tree.kids[0];
        obj.index.clear();
        out.kids.push_back(std::move(obj));
      } else {
        out.kids.push_back(k);
      }
    }
    return out;
  }
  return tree;
}

const SynTree* find_tag(const SynTree& t, ConstructionTag tag) {
  if (t.tag == tag) return &t;
  for (const SynTree& k : t.kids)
    if (const SynTree* p = find_tag(k, tag)) return p;
  return nullptr;
}

void read_comparative_np(const SynTree& host, ClauseBits& bits) {
  // host: [NP [NP Det [N' A N]] [PP than ...]]
  const SynTree& inner = host.kids[0];
  bits.det = inner.kids[0].lex;
  for (const SynTree& k : inner.kids[1].kids) {
    if (k.cat == Cat::A) bits.adj = k.lex;
    if (k.cat == Cat::N) bits.noun_key = k.lex.sem_key;
  }
  const SynTree& pp = host.kids[1];
  const SynTree& comp_np = pp.kids[1];
  if (comp_np.cat == Cat::SC)
    bits.complement = describe_np(comp_np.kids[1]);
  else if (comp_np.cat == Cat::CP)
    bits.complement = describe_np(comp_np.kids[2].kids[0]);
  else
    bits.complement = describe_np(comp_np);
}

ClauseBits wra_bits(const LfTree& lf) {
  ClauseBits bits;
  const SynTree& root = lf.root;
  if (root.cat != Cat::IP || root.kids.size() != 2)
    throw ComposeError("expected a reconstructed clause");
  const SynTree& raised = root.kids[0];
  read_comparative_np(raised, bits);
  const SynTree& matrix = root.kids[1];
  const SynTree* subj = &matrix.kids[0];
  bits.subj_key = subj->lex.sem_key;
  const SynTree* v = find_cat(matrix, Cat::V);
  if (!v) throw ComposeError("matrix verb not found");
  bits.verb_key = v->lex.sem_key;
  return bits;
}

}  // namespace

// -------------------------------------------------------------- composition

Term instantiate_p0(const Term& form, const Term& antecedent) {
  SemType at = type_of(antecedent);
  SemType want = SemType::arrow(SemType::e(), SemType::arrow(SemType::d(), SemType::t()));
  if (at != want)
    throw TypeError("instantiate_p0", want.to_string(), at.to_string());
  // P0 is a constant, so plain rewriting cannot capture anything.
  struct Rewriter {
    const Term& ante;
    Term operator()(const Term& t) {
      switch (t.kind()) {
        case TermKind::Const:
          return t.name() == "P0" ? ante : t;
        case TermKind::Var:
          return t;
        case TermKind::App:
          return Term::app((*this)(t.fn()), (*this)(t.arg()));
        case TermKind::And:
          return Term::conj((*this)(t.lhs()), (*this)(t.rhs()));
        case TermKind::Or:
          return Term::disj((*this)(t.lhs()), (*this)(t.rhs()));
        case TermKind::Implies:
          return Term::implies((*this)(t.lhs()), (*this)(t.rhs()));
        case TermKind::Greater:
          return Term::greater((*this)(t.lhs()), (*this)(t.rhs()));
        case TermKind::Not:
          return Term::neg((*this)(t.operand()));
        case TermKind::Lam:
          return Term::lam(t.bound_var(), (*this)(t.body()));
        case TermKind::Forall:
          return Term::forall(t.bound_var(), (*this)(t.body()));
        case TermKind::Exists:
          return Term::exists(t.bound_var(), (*this)(t.body()));
        case TermKind::Card:
          return Term::card(t.card_kind(), t.card_n(), t.bound_var(), (*this)(t.body()));
        case TermKind::Iota:
          return Term::iota(t.bound_var(), (*this)(t.body()));
      }
      throw std::logic_error("instantiate_p0: unknown kind");
    }
  } rw{antecedent};
  return normalize(rw(form));
}

namespace {

bool contains_constant(const Term& t, const std::string& name) {
  switch (t.kind()) {
    case TermKind::Const: return t.name() == name;
    case TermKind::Var: return false;
    case TermKind::App:
      return contains_constant(t.fn(), name) || contains_constant(t.arg(), name);
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Implies:
    case TermKind::Greater:
      return contains_constant(t.lhs(), name) || contains_constant(t.rhs(), name);
    case TermKind::Not:
      return contains_constant(t.operand(), name);
    default:
      return contains_constant(t.body(), name);
  }
}

}  // namespace

Reading resolve_p0(const Reading& reading, const Term& antecedent) {
  if (!contains_constant(reading.form, "P0")) return reading;
  Reading out = reading;
  out.form = instantiate_p0(reading.form, antecedent);
  out.p0 = P0Resolution{true, antecedent,
                        "anaphor resolved to " + print_term(antecedent)};
  return out;
}

namespace {

Term lift_var(const Term& v) {
  Term q = Term::var("Q", SemType::arrow(SemType::e(), SemType::t()));
  return Term::lam(q, Term::app(q, v));
}

Reading finish(Composer& c, Term pre, ConstructionTag tag, const ScopeAssignment& scope,
               const Term& antecedent, const std::string& p0_desc) {
  Term final_form = instantiate_p0(pre, antecedent);
  Reading r{final_form, pre, scope, tag,
            P0Resolution{true, antecedent, p0_desc}, std::move(c.steps)};
  if (!free_vars(r.form).empty())
    throw ComposeError("composed form is not closed");
  if (type_of(r.form) != SemType::t())
    throw ComposeError("composed form is not truth-valued");
  return r;
}

}  // namespace

Reading compose_wra(const LfTree& lf, const ScopeAssignment& scope, const SemLexicon& sem) {
  ClauseBits bits = wra_bits(lf);
  Composer c{sem, {}};
  Term u = Term::var("u", SemType::e());  // copied object trace
  Term w = Term::var("w", SemType::e());  // complement subject trace
  Term s = Term::var("s", SemType::e());  // matrix subject trace
  Term o = Term::var("o", SemType::e());  // matrix object trace

  Term verb = sem.constant(bits.verb_key);
  Term ip2 = c.fa("copied verb + object trace",
                  c.fa("copied verb + subject trace", verb, w), u);
  Term comp_gq = c.complement_gq(bits.complement);
  Term comp = [&] {
    if (scope.order == ScopeOrder::NpOverWh) {
      Term comp0 = c.fa("WH operator binds the object trace", sem.wh_wra, Term::lam(u, ip2));
      return c.gfa("complement NP scopes over WH", comp_gq, Term::lam(w, comp0));
    }
    Term bound = c.qi("complement subject quantified in", comp_gq, ip2, w);
    return c.fa("WH operator binds the object trace", sem.wh_wra, Term::lam(u, bound));
  }();

  Term adj = sem.adjective(bits.adj);
  Term er_adj = c.gfa("comparative morpheme + adjective", sem.er, adj);
  Term nbar = c.fa("comparative adjective + head noun", er_adj, sem.constant(bits.noun_key));
  Term det = sem.determiner(bits.det);
  Term np = c.gfa("determiner over the comparative N'", det, nbar);
  Term np_full = c.fa("comparative NP + complement degrees", np, comp);

  Term core = c.fa("matrix verb + object trace",
                   c.fa("matrix verb + subject trace", verb, s), o);
  Term m1 = c.qi("matrix subject quantified in", sem.lift_name(bits.subj_key), core, s);
  Term pre = c.qi("comparative NP quantified in", np_full, m1, o);

  Term antecedent = Term::app(sem.constant(bits.adj.sem_key), sem.constant(bits.noun_key));
  return finish(c, pre, ConstructionTag::Wra, scope, antecedent,
                "N' content " + print_term(antecedent));
}

Reading compose_nra(const SurfaceTree& raw_tree, const SemLexicon& sem) {
  if (raw_tree.cat != Cat::IP) throw NotAClauseError("NRA composition needs a clause");
  SynTree tree = canonical_clause(raw_tree);
  const SynTree* host = find_tag(tree, ConstructionTag::Nra);
  if (!host) throw ComposeError("no NRA comparative in the tree");
  ClauseBits bits;
  read_comparative_np(*host, bits);
  bits.subj_key = tree.kids[0].lex.sem_key;
  const SynTree* v = find_cat(tree, Cat::V);
  if (!v) throw ComposeError("matrix verb not found");
  bits.verb_key = v->lex.sem_key;
  if (bits.complement.kind == NpDesc::Kind::Quantified)
    throw QuantifiedComplementError(
        "the small-clause complement is captured by the WH operator");

  Composer c{sem, {}};
  Term s = Term::var("s", SemType::e());
  Term o = Term::var("o", SemType::e());
  Term comp_gq = c.complement_gq(bits.complement);
  Term comp = c.fa("small-clause WH over the complement", sem.wh_direct, comp_gq);
  Term adj = sem.adjective(bits.adj);
  Term er_adj = c.gfa("comparative morpheme + adjective", sem.er, adj);
  Term nbar = c.fa("comparative adjective + head noun", er_adj, sem.constant(bits.noun_key));
  Term det = sem.determiner(bits.det);
  Term np = c.gfa("determiner over the comparative N'", det, nbar);
  Term np_full = c.fa("comparative NP + complement degrees", np, comp);
  Term verb = sem.constant(bits.verb_key);
  Term core = c.fa("matrix verb + object trace",
                   c.fa("matrix verb + subject trace", verb, s), o);
  Term m1 = c.qi("matrix subject quantified in", sem.lift_name(bits.subj_key), core, s);
  Term pre = c.qi("comparative NP quantified in", np_full, m1, o);
  Term antecedent = Term::app(sem.constant(bits.adj.sem_key), sem.constant(bits.noun_key));
  return finish(c, pre, ConstructionTag::Nra, {ScopeOrder::Direct, "direct"}, antecedent,
                "N' content " + print_term(antecedent));
}

Reading compose_pred(const SurfaceTree& tree, const SemLexicon& sem) {
  if (tree.cat != Cat::IP || tree.kids.size() != 3 || tree.kids[1].cat != Cat::Copula)
    throw NotAClauseError("predicative composition needs a copular clause");
  const SynTree& subj = tree.kids[0];
  const SynTree& ap = tree.kids[2];
  const SynTree& sc = ap.kids[1].kids[1];
  NpDesc comp_desc = describe_np(sc.kids[1]);
  const LexEntry& adj = ap.kids[0].kids[0].lex;

  Composer c{sem, {}};
  Term s = Term::var("s", SemType::e());
  Term adj_entry = sem.adjective(adj);
  Term er_adj = c.gfa("comparative morpheme + adjective", sem.er, adj_entry);
  Term antecedent = sem.constant(adj.sem_key);

  if (comp_desc.kind == NpDesc::Kind::Name) {
    Term comp = c.fa("small-clause WH over the complement", sem.wh_direct,
                     c.complement_gq(comp_desc));
    Term m1 = c.fa("predicative AP + subject trace", er_adj, s);
    Term m2 = c.fa("AP + complement degrees", m1, comp);
    Term pre = c.qi("matrix subject quantified in", sem.lift_name(subj.lex.sem_key), m2, s);
    return finish(c, pre, ConstructionTag::Pred, {ScopeOrder::Direct, "direct"},
                  antecedent, "adjective content " + print_term(antecedent));
  }
  // quantified complement: raise it out of the small clause to the matrix IP
  Term w = Term::var("w", SemType::e());
  Term comp_gq = c.complement_gq(comp_desc);
  Term comp = c.fa("small-clause WH over the complement trace", sem.wh_direct, lift_var(w));
  Term m1 = c.fa("predicative AP + subject trace", er_adj, s);
  Term m2 = c.fa("AP + complement degrees", m1, comp);
  Term s1 = c.qi("matrix subject quantified in", sem.lift_name(subj.lex.sem_key), m2, s);
  Term pre = c.qi("complement NP raised to the matrix IP", comp_gq, s1, w);
  return finish(c, pre, ConstructionTag::Pred, {ScopeOrder::Direct, "direct"},
                antecedent, "adjective content " + print_term(antecedent));
}

namespace {

// Positive adjectives and post-nominal comparatives live inside the object
// NP of an ordinary transitive clause.
Reading compose_clause_np(const SurfaceTree& raw_tree, const SemLexicon& sem) {
  if (raw_tree.cat != Cat::IP) throw NotAClauseError("composition needs a clause");
  SynTree tree = canonical_clause(raw_tree);
  if (tree.kids.size() < 3 || tree.kids[1].cat != Cat::V)
    throw NotAClauseError("expected a transitive clause");
  const SynTree& subj = tree.kids[0];
  const SynTree& obj = tree.kids[2];
  if (subj.cat != Cat::NP || !subj.is_leaf())
    throw ComposeError("only proper-name subjects are supported");
  if (obj.kids.size() != 2 || obj.kids[0].cat != Cat::Det)
    throw ComposeError("unsupported object NP");
  const LexEntry& det_lex = obj.kids[0].lex;
  const SynTree& nbar = obj.kids[1];

  Composer c{sem, {}};
  Term s = Term::var("s", SemType::e());
  Term o = Term::var("o", SemType::e());
  Term antecedent = sem.constant("P0");
  bool has_p0 = false;

  Term prop = [&]() -> Term {
    // plain N' built from leaves
    bool lexical = std::all_of(nbar.kids.begin(), nbar.kids.end(),
                               [](const SynTree& k) { return k.is_leaf(); });
    if (lexical) {
      const LexEntry* a = nullptr;
      std::string noun;
      for (const SynTree& k : nbar.kids) {
        if (k.cat == Cat::A) a = &k.lex;
        if (k.cat == Cat::N) noun = k.lex.sem_key;
      }
      if (!a) return sem.constant(noun);
      if (a->comparative)
        throw NoSemanticsError("comparative without a complement has no contextual standard");
      Term rel = a->attributive
                     ? c.fa("adjective + head noun", sem.constant(a->sem_key), sem.constant(noun))
                     : sem.constant(a->sem_key);
      Term pos = c.fa("positive degree closure", sem.pos_closure, rel);
      if (a->attributive) return pos;
      // predicative-typed adjective: intersect with the noun
      Term both = c.fa("noun restriction", sem.pred_and, sem.constant(noun));
      return c.fa("reduced modifier", both, pos);
    }
    // post-nominal reduced relative: [N' [N' N] [AP [AP A] [PP than SC]]]
    if (nbar.kids.size() == 2 && nbar.kids[0].cat == Cat::Nbar &&
        nbar.kids[1].cat == Cat::AP) {
      const SynTree& ap = nbar.kids[1];
      const LexEntry& a = ap.kids[0].kids[0].lex;
      const SynTree& sc = ap.kids[1].kids[1];
      NpDesc comp_desc = describe_np(sc.kids[1]);
      if (comp_desc.kind == NpDesc::Kind::Quantified)
        throw QuantifiedComplementError("post-nominal small-clause complement must be referential");
      std::string noun = nbar.kids[0].kids[0].lex.sem_key;
      Term comp = c.fa("small-clause WH over the complement", sem.wh_direct,
                       c.complement_gq(comp_desc));
      Term er_adj = c.gfa("comparative morpheme + adjective", sem.er,
                          sem.adjective(a));
      Term vx = Term::var("x", SemType::e());
      Term apx = c.fa("AP + entity", er_adj, vx);
      Term apfull = c.fa("AP + complement degrees", apx, comp);
      Term ap_prop = Term::lam(vx, apfull);
      Term both = c.fa("noun restriction", sem.pred_and, sem.constant(noun));
      antecedent = sem.constant(a.sem_key);
      has_p0 = true;
      return c.fa("reduced relative modifier", both, ap_prop);
    }
    throw ComposeError("unsupported N' shape");
  }();

  Term det = sem.determiner(det_lex);
  Term np = c.fa("determiner over the N'", det, prop);
  Term verb = sem.constant(find_cat(tree, Cat::V)->lex.sem_key);
  Term core = c.fa("matrix verb + object trace",
                   c.fa("matrix verb + subject trace", verb, s), o);
  Term m1 = c.qi("matrix subject quantified in", sem.lift_name(subj.lex.sem_key), core, s);
  Term pre = c.qi("object NP quantified in", np, m1, o);
  if (has_p0)
    return finish(c, pre, ConstructionTag::Pred, {ScopeOrder::Direct, "direct"},
                  antecedent, "adjective content " + print_term(antecedent));
  Reading r{pre, pre, {ScopeOrder::Direct, "direct"}, ConstructionTag::Plain,
            P0Resolution{}, std::move(c.steps)};
  if (!free_vars(r.form).empty()) throw ComposeError("composed form is not closed");
  return r;
}

}  // namespace

std::vector<Reading> compose_all(const SurfaceTree& tree, const SemLexicon& sem) {
  ConstructionTag tag = classify_construction(tree);
  if (tree.cat != Cat::IP)
    throw NotAClauseError("bare phrases are parsed and judged but not composed");
  switch (tag) {
    case ConstructionTag::Wra: {
      LfTree lf = build_lf(tree);
      std::vector<Reading> out;
      for (const ScopeAssignment& sc : enumerate_scopes(lf)) {
        Reading r = compose_wra(lf, sc, sem);
        bool dup = std::any_of(out.begin(), out.end(), [&](const Reading& prev) {
          return alpha_equal(prev.form, r.form);
        });
        if (!dup) out.push_back(std::move(r));
      }
      return out;
    }
    case ConstructionTag::Nra:
      return {compose_nra(tree, sem)};
    case ConstructionTag::Pred: {
      const SynTree* host = find_tag(tree, ConstructionTag::Pred);
      bool copular = tree.kids.size() == 3 && tree.kids[1].cat == Cat::Copula &&
                     host == &tree.kids[2];
      if (copular) return {compose_pred(tree, sem)};
      return {compose_clause_np(tree, sem)};
    }
    default:
      return {compose_clause_np(tree, sem)};
  }
}

bool replay_trace(const Reading& reading) {
  for (const DerivationStep& st : reading.trace) {
    Term redo = [&]() -> Term {
      switch (st.mode) {
        case StepMode::FA: return apply_fa(st.operands[0], st.operands[1]);
        case StepMode::GFA: return apply_gfa(st.operands[0], st.operands[1]);
        case StepMode::QuantifyIn:
          return quantify_in(st.operands[0], st.operands[1], st.operands[2]);
      }
      throw std::logic_error("replay_trace: unknown mode");
    }();
    if (!alpha_equal(redo, st.result)) return false;
  }
  if (reading.trace.empty()) return false;
  return alpha_equal(reading.trace.back().result, reading.pre_anaphora_form);
}

}  // namespace compsem
