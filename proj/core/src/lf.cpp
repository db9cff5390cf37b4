#include "compsem/lf.hpp"

#include <algorithm>

namespace compsem {

namespace {

SynTree mk_node(Cat c, std::vector<SynTree> kids) {
  SynTree t;
  t.cat = c;
  t.kids = std::move(kids);
  return t;
}

SynTree mk_trace(const std::string& index) {
  SynTree t;
  t.cat = Cat::Trace;
  t.index = index;
  return t;
}

SynTree mk_wh(const std::string& index) {
  SynTree t;
  t.cat = Cat::WH;
  t.index = index;
  return t;
}

SynTree mk_c() {
  SynTree t;
  t.cat = Cat::C;
  return t;
}

// `from` taken by value: callers may pass an index string owned by the tree
// being rewritten.
void retag_traces(SynTree& t, std::string from, const std::string& to) {
  if (t.index == from) t.index = to;
  for (SynTree& k : t.kids) retag_traces(k, from, to);
}

bool is_clause(const SynTree& t) { return t.cat == Cat::IP; }

const SynTree* find_first(const SynTree& t, ConstructionTag tag) {
  if (t.tag == tag) return &t;
  for (const SynTree& k : t.kids)
    if (const SynTree* p = find_first(k, tag)) return p;
  return nullptr;
}

void log_step(LfTree& lf, const std::string& op) {
  lf.log.push_back({op, print_bracketing(lf.root)});
}

}  // namespace

LfTree lf_from_surface(const SurfaceTree& tree) {
  LfTree lf{tree, {}, {}};
  log_step(lf, "surface");
  return lf;
}

LfTree qr_comparative_np(const LfTree& lf) {
  ConstructionTag tag = classify_construction(lf.root);
  if (tag == ConstructionTag::Plain) {
    LfTree out = lf;
    // nothing to move
    return out;
  }
  if (tag != ConstructionTag::Wra)
    throw NotApplicableError("QR of the comparative NP applies to WRA clauses only");
  if (!is_clause(lf.root)) throw NotApplicableError("input is not a clause");

  const SynTree& root = lf.root;
  // already raised at LF
  if (root.kids.size() == 2 && root.kids[0].cat == Cat::NP && root.kids[0].index == "i")
    throw RedundantQrError("comparative NP already carries index i");
  // topicalized: fronted object is overtly raised; relabel its chain to i
  if (root.kids.size() == 2 && root.kids[0].cat == Cat::NP &&
      !root.kids[0].index.empty() && root.kids[1].cat == Cat::IP) {
    LfTree out = lf;
    retag_traces(out.root, out.root.kids[0].index, "i");
    log_step(out, "qr_comparative_np");
    return out;
  }
  // canonical transitive clause: [IP subj V obj (adv)]
  if (root.kids.size() < 3 || root.kids[1].cat != Cat::V)
    throw NotApplicableError("expected a transitive clause");
  const SynTree& obj = root.kids[2];
  if (obj.tag != ConstructionTag::Wra)
    throw NotApplicableError("object NP is not the comparative NP");
  SynTree raised = obj;
  raised.index = "i";
  std::vector<SynTree> inner_kids = {root.kids[0], root.kids[1], mk_trace("i")};
  for (size_t k = 3; k < root.kids.size(); ++k) inner_kids.push_back(root.kids[k]);
  LfTree out = lf;
  out.root = mk_node(Cat::IP, {raised, mk_node(Cat::IP, std::move(inner_kids))});
  log_step(out, "qr_comparative_np");
  return out;
}

LfTree qr_correlate(const LfTree& lf) {
  const SynTree& root = lf.root;
  if (!is_clause(root) || root.kids.size() != 2 || root.kids[0].index != "i" ||
      root.kids[1].cat != Cat::IP)
    throw NotApplicableError("expected the output of qr_comparative_np");
  const SynTree& inner = root.kids[1];
  if (!inner.kids.empty() && inner.kids[0].cat == Cat::NP && !inner.kids[0].index.empty())
    throw RedundantQrError("correlate already raised");
  if (inner.kids.empty() || inner.kids[0].cat != Cat::NP || !inner.kids[0].is_leaf())
    throw NotApplicableError("only proper-name subject correlates are raised");
  SynTree subj = inner.kids[0];
  subj.index = "1";
  std::vector<SynTree> core = {mk_trace("1")};
  for (size_t k = 1; k < inner.kids.size(); ++k) core.push_back(inner.kids[k]);
  LfTree out = lf;
  out.root = mk_node(Cat::IP, {root.kids[0],
                               mk_node(Cat::IP, {subj, mk_node(Cat::IP, std::move(core))})});
  log_step(out, "qr_correlate");
  return out;
}

LfTree acd_reconstruct(const LfTree& lf) {
  ConstructionTag tag = classify_construction(lf.root);
  if (tag == ConstructionTag::Nra)
    throw NotApplicableError("reconstruction is rejected for the direct (NRA) analysis");
  if (tag != ConstructionTag::Wra)
    throw NotApplicableError("reconstruction applies to WRA clauses");
  const SynTree& root = lf.root;
  if (!is_clause(root) || root.kids.size() != 2 || root.kids[0].index != "i")
    throw NotApplicableError("expected the output of qr_correlate");
  const SynTree& raised = root.kids[0];
  if (raised.kids.size() != 2 || raised.kids[1].cat != Cat::PP ||
      raised.kids[1].kids.size() != 2 || raised.kids[1].kids[1].cat != Cat::NP)
    throw NotApplicableError("comparative NP lacks an NP complement");
  const SynTree& matrix = root.kids[1];
  if (matrix.kids.size() != 2 || matrix.kids[0].index != "1" ||
      matrix.kids[1].cat != Cat::IP)
    throw NotApplicableError("correlate has not been raised");

  // the copy is the trace-only core of the matrix IP
  SynTree core = matrix.kids[1];
  SynTree copy;
  copy.cat = Cat::IP;
  for (const SynTree& k : core.kids) {
    if (k.cat == Cat::Trace || k.cat == Cat::V) copy.kids.push_back(k);
  }
  for (SynTree& k : copy.kids)
    if (k.cat == Cat::Trace && k.index == "1") k.index = "2";  // i-copy re-indexes

  SynTree comp = raised.kids[1].kids[1];
  comp.index = "2";

  LfTree out = lf;
  SynTree& pp = out.root.kids[0].kids[1];
  pp.kids[1] = mk_node(Cat::IP, {comp, copy});
  log_step(out, "acd_copy");

  // WH insertion: the copied object trace becomes t_j with j resolved to i
  SynTree& copied_ip = pp.kids[1];
  retag_traces(copied_ip.kids[1], "i", "j");
  pp.kids[1] = mk_node(Cat::CP, {mk_wh("j"), mk_c(), copied_ip});
  out.index_aliases["j"] = "i";
  log_step(out, "wh_bind");
  return out;
}

LfTree build_lf(const SurfaceTree& tree) {
  LfTree lf = lf_from_surface(tree);
  if (classify_construction(tree) == ConstructionTag::Wra && is_clause(tree)) {
    lf = qr_comparative_np(lf);
    lf = qr_correlate(lf);
    lf = acd_reconstruct(lf);
  }
  return lf;
}

// ------------------------------------------------------------------- scoping

namespace {

const SynTree* reconstructed_complement(const SynTree& t) {
  if (t.cat == Cat::CP && t.kids.size() == 3 && t.kids[0].cat == Cat::WH &&
      t.kids[2].cat == Cat::IP && !t.kids[2].kids.empty() &&
      t.kids[2].kids[0].cat == Cat::NP)
    return &t.kids[2].kids[0];
  for (const SynTree& k : t.kids)
    if (const SynTree* p = reconstructed_complement(k)) return p;
  return nullptr;
}

bool np_is_coordination(const SynTree& np) {
  return np.kids.size() == 3 && np.kids[1].cat == Cat::Coord;
}

DetClass np_det_class(const SynTree& np) {
  if (!np.kids.empty() && np.kids[0].cat == Cat::Det) return np.kids[0].lex.det_class;
  return DetClass::None;
}

}  // namespace

std::vector<ScopeAssignment> enumerate_scopes(const LfTree& lf) {
  const SynTree* comp = reconstructed_complement(lf.root);
  if (!comp) return {{ScopeOrder::Direct, "direct"}};
  ScopeAssignment wh_wide{ScopeOrder::WhOverNp, "WH > NP"};
  ScopeAssignment np_wide{ScopeOrder::NpOverWh, "NP > WH"};
  if (comp->is_leaf() || np_is_coordination(*comp)) return {wh_wide, np_wide};
  switch (np_det_class(*comp)) {
    case DetClass::Npi: return {wh_wide};
    case DetClass::Universal: return {np_wide};
    default: return {wh_wide, np_wide};
  }
}

// ------------------------------------------------------------------ judgment

std::string verdict_name(Judgment::Verdict v) {
  switch (v) {
    case Judgment::Verdict::Ok: return "ok";
    case Judgment::Verdict::Marginal: return "marginal";
    case Judgment::Verdict::Bad: return "bad";
  }
  return "?";
}

namespace {

const SynTree* first_tagged(const SynTree& t) {
  if (t.tag != ConstructionTag::None) return &t;
  for (const SynTree& k : t.kids)
    if (const SynTree* p = first_tagged(k)) return p;
  return nullptr;
}

bool under_nbar(const SynTree& root, const SynTree* target, bool in_nbar) {
  if (&root == target) return in_nbar;
  for (const SynTree& k : root.kids)
    if (under_nbar(k, target, in_nbar || root.cat == Cat::Nbar)) return true;
  return false;
}

bool complement_referential(const SynTree& sc) {
  // small clause [SC WH NP]
  if (sc.kids.size() != 2) return false;
  const SynTree& np = sc.kids[1];
  if (np.is_leaf()) return true;  // proper name
  if (np_is_coordination(np)) return np.kids[0].is_leaf() && np.kids[2].is_leaf();
  return false;
}

Judgment ok(const std::string& rule, const std::string& why) {
  return {Judgment::Verdict::Ok, rule, why};
}

}  // namespace

Judgment judge(const SurfaceTree& tree) {
  const SynTree* host = first_tagged(tree);
  if (!host || host->tag == ConstructionTag::Plain)
    return ok("complement-free",
              "no overt comparative complement interacts with the determiner");
  switch (host->tag) {
    case ConstructionTag::Wra: {
      DetClass cls = np_det_class(host->kids[0]);
      switch (cls) {
        case DetClass::Indefinite:
        case DetClass::Npi:
          return ok("wra-indefinite", "indefinite comparative NP with an adjoined complement");
        case DetClass::Cardinal:
          return {Judgment::Verdict::Marginal, "wra-cardinal",
                  "cardinal determiners on a complement-taking comparative NP are marginal in English"};
        case DetClass::Definite:
        case DetClass::Universal:
          return {Judgment::Verdict::Bad, "indefiniteness-effect",
                  "definite/universal determiner scopes under the adjoined comparative complement"};
        default:
          return ok("wra", "comparative NP with an adjoined complement");
      }
    }
    case ConstructionTag::Nra: {
      const SynTree& sc = host->kids[1].kids[1];
      if (!complement_referential(sc))
        return {Judgment::Verdict::Bad, "nra-quantified-complement",
                "the complement of a direct attributive comparative must be referential"};
      // the complement is still adjoined to NP, so the determiner restriction
      // applies exactly as in the reconstructed case
      switch (np_det_class(host->kids[0])) {
        case DetClass::Cardinal:
          return {Judgment::Verdict::Marginal, "nra-cardinal",
                  "cardinal determiners on a complement-taking comparative NP are marginal in English"};
        case DetClass::Definite:
        case DetClass::Universal:
          return {Judgment::Verdict::Bad, "indefiniteness-effect",
                  "definite/universal determiner scopes under the adjoined comparative complement"};
        default:
          return ok("nra-referential", "direct comparison with a referential complement");
      }
    }
    case ConstructionTag::Pred: {
      if (under_nbar(tree, host, false))
        return ok("postnominal-ap", "complement stays inside the post-nominal AP");
      return ok("predicative", "predicative comparative");
    }
    default:
      return ok("complement-free", "no comparative complement");
  }
}

// ------------------------------------------------------------ trace binding

namespace {

std::string resolve_index(const LfTree& lf, std::string idx) {
  auto it = lf.index_aliases.find(idx);
  while (it != lf.index_aliases.end()) {
    idx = it->second;
    it = lf.index_aliases.find(idx);
  }
  return idx;
}

void check_traces(const LfTree& lf, const SynTree& t,
                  std::vector<std::string> binders, bool& all_bound) {
  if (t.cat == Cat::Trace) {
    std::string want = resolve_index(lf, t.index);
    int hits = 0;
    for (const std::string& b : binders)
      if (b == want) ++hits;
    if (hits != 1) all_bound = false;
    return;
  }
  for (size_t i = 0; i < t.kids.size(); ++i) {
    std::vector<std::string> scope = binders;
    // earlier sisters with an index (raised NPs, WH) c-command later ones
    for (size_t j = 0; j < i; ++j) {
      const SynTree& sib = t.kids[j];
      if ((sib.cat == Cat::NP || sib.cat == Cat::WH) && !sib.index.empty())
        scope.push_back(resolve_index(lf, sib.index));
    }
    check_traces(lf, t.kids[i], scope, all_bound);
  }
}

}  // namespace

bool traces_bound(const LfTree& lf) {
  bool all = true;
  check_traces(lf, lf.root, {}, all);
  return all;
}

}  // namespace compsem
