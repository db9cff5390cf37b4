// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Runs at desk scale (seconds).

#include "compsem/heim.hpp"
#include "compsem/model.hpp"
#include "compsem/pipeline.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "../support/generators.hpp"

using namespace compsem;

namespace {

const SemLexicon& sem() {
  static const SemLexicon s = SemLexicon::standard();
  return s;
}

const Lexicon& lex() {
  static const Lexicon lx = Lexicon::builtin();
  return lx;
}

Term rd(const std::string& text) { return read_term(text, sem().constants); }

SurfaceTree parse_one(const std::string& s, ConstructionTag tag) {
  for (const SurfaceTree& t : parse(s, lex()))
    if (classify_construction(t) == tag) return t;
  throw std::runtime_error("no parse with the requested tag for: " + s);
}

std::vector<Reading> readings_of(const std::string& s, ConstructionTag tag) {
  return compose_all(parse_one(s, tag), sem());
}

Model load_model(const std::string& name) {
  return Model::load(std::string(COMPSEM_DATA_DIR) + "/models/" + name);
}

struct Check {
  std::string detail;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& name, const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  if (c.ok) {
    std::printf("PASS criterion %d: %s\n", n, name.c_str());
  } else {
    std::printf("FAIL criterion %d: %s — %s\n", n, name.c_str(), c.detail.c_str());
    ++failures;
  }
}

// ------------------------------------------------------------------ golden LF

const char* kWraBill =
    "exists x:e . (exists d':d . (forall d:d . "
    "(exists y:e . (((fast' car') y) d) & ((own' b*) y)) -> d' > d) & "
    "(((fast' car') x) d')) & ((own' g*) x)";

const char* kNraBmw =
    "exists x:e . (exists d':d . (forall d:d . (((fast' car') bmw*) d) -> d' > d) & "
    "(((fast' car') x) d')) & ((own' g*) x)";

const char* kCardTwo =
    "atleast 2 x:e . (exists d':d . (forall d:d . "
    "(exists y:e . (((fast' car') y) d) & ((own' b*) y)) -> d' > d) & "
    "(((fast' car') x) d')) & ((own' g*) x)";

const char* kAnyPoliceman =
    "exists x:e . (exists d':d . (forall d:d . "
    "(exists y:e . (((fast' car') y) d) & (exists z:e . (policeman' z) & ((has' z) y))) "
    "-> d' > d) & (((fast' car') x) d')) & ((has' g*) x)";

const char* kEveryPoliceman =
    "exists x:e . (exists d':d . (forall z:e . (policeman' z) -> "
    "(forall d:d . (exists y:e . (((fast' car') y) d) & ((has' z) y)) -> d' > d)) & "
    "(((fast' car') x) d')) & ((has' g*) x)";

const char* kCoordNarrow =
    "exists x:e . (exists d':d . (forall d:d . "
    "(exists y:e . (((fast' car') y) d) & (((own' b*) y) | ((own' r*) y))) -> d' > d) & "
    "(((fast' car') x) d')) & ((own' g*) x)";

const char* kCoordWide =
    "exists x:e . (exists d':d . "
    "((forall d:d . (exists y:e . (((fast' car') y) d) & ((own' b*) y)) -> d' > d) | "
    "(forall d:d . (exists y:e . (((fast' car') y) d) & ((own' r*) y)) -> d' > d)) & "
    "(((fast' car') x) d')) & ((own' g*) x)";

const char* kPredBill =
    "exists d':d . (forall d:d . ((rich' b*) d) -> d' > d) & ((rich' g*) d')";

void criterion1(Check& c) {
  struct Row {
    const char* sentence;
    ConstructionTag tag;
    const char* golden;
  };
  const Row rows[] = {
      {"George is richer than Bill", ConstructionTag::Pred, kPredBill},
      {"George owns a faster car than this BMW", ConstructionTag::Nra, kNraBmw},
      {"George owns a faster car than Bill", ConstructionTag::Wra, kWraBill},
      {"George owns at least two faster cars than Bill", ConstructionTag::Wra, kCardTwo},
      {"George has a faster car than any policeman", ConstructionTag::Wra, kAnyPoliceman},
      {"George has a faster car than every policeman", ConstructionTag::Wra, kEveryPoliceman},
  };
  for (const Row& row : rows) {
    auto rs = readings_of(row.sentence, row.tag);
    c.expect(rs.size() == 1, std::string(row.sentence) + ": expected a single reading");
    if (rs.size() != 1) return;
    c.expect(alpha_equal(rs[0].form, rd(row.golden)),
             std::string(row.sentence) + ": composed form differs from the transcription");
  }
  auto coord = readings_of("George owns a faster car than Bill or Richard",
                           ConstructionTag::Wra);
  c.expect(coord.size() == 2, "disjunctive complement: expected two readings");
  if (coord.size() == 2) {
    c.expect(alpha_equal(coord[0].form, rd(kCoordNarrow)),
             "disjunction, narrow reading differs");
    c.expect(alpha_equal(coord[1].form, rd(kCoordWide)),
             "disjunction, wide reading differs");
  }
}

void criterion2(Check& c) {
  Signature s = sem().constants;
  s.emplace("F", SemType::arrow(SemType::e(),
                                SemType::arrow(SemType::e(), SemType::t())));
  Term phi = read_term("lam P:(e->t) . (P b*)", s);
  Term psi = read_term("lam y:e . lam x:e . ((F x) y)", s);
  c.expect(alpha_equal(apply_gfa(phi, psi), read_term("lam x':e . ((F x') b*)", s)),
           "generalized application result differs");
  c.expect(alpha_equal(apply_fc(phi, psi), read_term("lam y:e . ((F b*) y)", s)),
           "functional composition result differs");
  testing::Rng rng(240811);
  for (int i = 0; i < 100; ++i) {
    SemType alpha = testing::random_type(rng, 1);
    SemType beta = testing::random_base_type(rng);
    SemType gamma = testing::random_type(rng, 1);
    Term g = Term::constant("g0", SemType::arrow(beta, gamma));
    Term h = Term::constant("h0", SemType::arrow(alpha, beta));
    Term a0 = Term::constant("a0", alpha);
    Term p = Term::var("P", SemType::arrow(alpha, beta));
    Term v = Term::var("v", alpha);
    Term f = Term::lam(p, Term::app(g, Term::app(p, a0)));
    Term a = Term::lam(v, Term::app(h, v));
    if (!alpha_equal(apply_gfa(f, a), apply_fa(f, a))) {
      c.expect(false, "empty residual prefix does not reduce to plain application");
      return;
    }
  }
}

void criterion3(Check& c) {
  std::ifstream in(std::string(COMPSEM_DATA_DIR) + "/goldens/derivation_wra.txt");
  c.expect(in.good(), "missing derivation fixture");
  std::vector<std::string> want;
  std::string line;
  while (std::getline(in, line)) want.push_back(line);
  c.expect(want.size() == 4, "fixture must hold four snapshots");
  LfTree lf = build_lf(parse_one("George owns a faster car than Bill", ConstructionTag::Wra));
  c.expect(lf.log.size() == 5, "derivation must log surface plus four steps");
  for (size_t k = 0; k + 1 < lf.log.size() && k < want.size(); ++k) {
    if (lf.log[k + 1].snapshot != want[k]) {
      c.expect(false, "snapshot " + std::to_string(k + 1) + " differs: " +
                        lf.log[k + 1].snapshot);
      return;
    }
  }
}

void criterion4(Check& c) {
  Model md = load_model("mdagger.json");
  SurfaceTree tree = parse_one("George owns at least two faster cars than Bill",
                               ConstructionTag::Wra);
  HeimForm hf = build_heim(tree, sem());
  auto baseline = eval_heim(hf, md);
  c.expect(baseline.has_value() && *baseline == true,
           "baseline should be true on the witness model");
  auto readings = compose_all(tree, sem());
  c.expect(readings.size() == 1, "expected one cardinal reading");
  c.expect(evaluate(readings[0].form, md) == false,
           "pipeline should be false on the witness model");

  testing::Rng rng(77);
  for (int i = 0; i < 1000; ++i) {
    testing::CarModel cm = testing::random_car_model(rng, false, true);
    bool got = evaluate(readings[0].form, cm.model);
    bool want = testing::oracle_at_least_n_exceed_all(cm, 2);
    if (got != want) {
      c.expect(false, "oracle disagreement on random model " + std::to_string(i));
      return;
    }
  }
}

void criterion5(Check& c) {
  auto check_reading = [&](const Reading& r, const std::string& label) {
    AccessibilityReport rep = accessibility(r);
    size_t accessible = 0, inaccessible = 0;
    for (const ReferentInfo& ref : rep.referents)
      (ref.accessible ? accessible : inaccessible)++;
    if (accessible != 1 || inaccessible < 1) {
      c.expect(false, label + ": expected exactly one accessible and at least one "
                      "inaccessible referent");
      return false;
    }
    if (!rep.referents[0].accessible) {
      c.expect(false, label + ": the matrix referent must come first and be accessible");
      return false;
    }
    return true;
  };

  auto fixture = readings_of("George owns a faster car than Bill", ConstructionTag::Wra);
  c.expect(fixture.size() == 1, "fixture reading missing");
  if (!fixture.empty()) {
    if (!check_reading(fixture[0], "fixture")) return;
    AccessibilityReport rep = accessibility(fixture[0]);
    c.expect(rep.referents[0].restrictor.find("own' g*") != std::string::npos,
             "accessible referent should be the matrix car");
    c.expect(!rep.referents[1].accessible &&
                 rep.referents[1].restrictor.find("own' b*") != std::string::npos,
             "complement car should be inaccessible");
  }

  testing::Rng rng(501);
  const char* subjects[] = {"George", "Bill", "Richard"};
  const char* verbs[] = {"owns", "has"};
  const char* complements[] = {"Bill", "Richard", "George", "every policeman",
                               "any policeman", "Bill or Richard"};
  for (int i = 0; i < 100; ++i) {
    std::string s = std::string(subjects[testing::pick(rng, 0, 2)]) + " " +
                    verbs[testing::pick(rng, 0, 1)] + " a faster car than " +
                    complements[testing::pick(rng, 0, 5)];
    auto rs = readings_of(s, ConstructionTag::Wra);
    for (const Reading& r : rs)
      if (!check_reading(r, s)) return;
  }
}

void criterion6(Check& c) {
  struct Row {
    const char* sentence;
    ConstructionTag tag;
    Judgment::Verdict want;
  };
  using V = Judgment::Verdict;
  const Row rows[] = {
      {"George owns a faster car than Bill", ConstructionTag::Wra, V::Ok},
      {"George owns every faster car than Bill", ConstructionTag::Wra, V::Bad},
      {"George owns the faster car than Bill", ConstructionTag::Wra, V::Bad},
      {"George owns a faster car", ConstructionTag::Plain, V::Ok},
      {"George owns every faster car", ConstructionTag::Plain, V::Ok},
      {"George owns the faster car", ConstructionTag::Plain, V::Ok},
      {"a building higher than the ET", ConstructionTag::Pred, V::Ok},
      {"the building higher than the ET", ConstructionTag::Pred, V::Ok},
      {"every building higher than the ET", ConstructionTag::Pred, V::Ok},
      {"George owns at least two faster cars than Bill", ConstructionTag::Wra, V::Marginal},
      {"George owns at most one faster car than Bill", ConstructionTag::Wra, V::Marginal},
      {"George owns a faster car than every BMW", ConstructionTag::Nra, V::Bad},
      {"George is richer than every professor", ConstructionTag::Pred, V::Ok},
      // repeated data points cited a second time in the discussion
      {"George owns a faster car than Bill", ConstructionTag::Wra, V::Ok},
      {"George owns every faster car than Bill", ConstructionTag::Wra, V::Bad},
      {"George owns every faster car", ConstructionTag::Plain, V::Ok},
      {"every building higher than the ET", ConstructionTag::Pred, V::Ok},
  };
  size_t hits = 0;
  for (const Row& row : rows) {
    Judgment j = judge(parse_one(row.sentence, row.tag));
    if (j.verdict == row.want) {
      ++hits;
    } else {
      c.expect(false, std::string(row.sentence) + ": got " + verdict_name(j.verdict));
      return;
    }
  }
  c.expect(hits == 17, "expected 17 judgments");
}

void criterion7(Check& c) {
  auto npi = readings_of("George has a faster car than any policeman", ConstructionTag::Wra);
  c.expect(npi.size() == 1 && npi[0].scope.order == ScopeOrder::WhOverNp,
           "NPI complement must yield exactly the narrow reading");
  auto univ = readings_of("George has a faster car than every policeman", ConstructionTag::Wra);
  c.expect(univ.size() == 1 && univ[0].scope.order == ScopeOrder::NpOverWh,
           "universal complement must yield exactly the wide reading");
  auto coord = readings_of("George owns a faster car than Bill or Richard",
                           ConstructionTag::Wra);
  c.expect(coord.size() == 2, "disjunctive complement must yield two readings");
  if (coord.size() == 2) {
    auto split = check_reading_pair(coord, load_model("m3.json"));
    c.expect(split == std::vector<bool>{false, true},
             "in the split model the wide reading is true, the narrow one false");
  }
}

void criterion8(Check& c) {
  auto wra = readings_of("George owns a faster car than Bill", ConstructionTag::Wra);
  c.expect(wra.size() == 1, "expected a single reading");
  const Term& form = wra[0].form;

  testing::Rng rng(6502);
  for (int i = 0; i < 1000; ++i) {
    testing::CarModel cm = testing::random_car_model(rng, true, false);
    if (evaluate(form, cm.model) != testing::oracle_max_vs_max(cm)) {
      c.expect(false, "paraphrase mismatch on random model " + std::to_string(i));
      return;
    }
  }
  for (int i = 0; i < 1000; ++i) {
    testing::CarModel cm = testing::random_car_model(rng, true, false);
    bool before = evaluate(form, cm.model);
    Model bumped = cm.model;
    std::vector<Entity> george_cars, bill_cars;
    for (const auto& [o, car] : bumped.relations["own'"])
      (o == "george" ? george_cars : bill_cars).push_back(car);
    bool raise_george = testing::pick(rng, 0, 1) == 0;
    auto& pool = raise_george ? george_cars : bill_cars;
    if (pool.empty()) continue;
    Entity car = pool[static_cast<size_t>(
        testing::pick(rng, 0, static_cast<int>(pool.size()) - 1))];
    bumped.measures["speed"][car] += testing::pick(rng, 1, 10);
    bool after = evaluate(form, bumped);
    bool violated = raise_george ? (before && !after) : (!before && after);
    if (violated) {
      c.expect(false, "monotonicity violated on perturbation " + std::to_string(i));
      return;
    }
  }
}

}  // namespace

int main() {
  criterion(1, "golden logical forms", criterion1);
  criterion(2, "generalized application kernel", criterion2);
  criterion(3, "derivation-tree goldens", criterion3);
  criterion(4, "counterexample reproduction", criterion4);
  criterion(5, "accessibility asymmetry", criterion5);
  criterion(6, "judgment fixture", criterion6);
  criterion(7, "scope filtering", criterion7);
  criterion(8, "paraphrase oracle and monotonicity", criterion8);
  return failures == 0 ? 0 : 1;
}
