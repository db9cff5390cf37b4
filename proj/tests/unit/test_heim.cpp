#include "compsem/heim.hpp"

#include "doctest.h"
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
  FAIL("no parse with the requested tag for: " << s);
  throw std::logic_error("unreachable");
}

Model load_model(const std::string& name) {
  return Model::load(std::string(COMPSEM_DATA_DIR) + "/models/" + name);
}

}  // namespace

TEST_CASE("baseline degree relations match the intended shapes") {
  HeimForm pred = build_heim(parse_one("George is richer than Bill", ConstructionTag::Pred),
                             sem());
  CHECK(pred.correlate_key == "g*");
  CHECK(pred.complement_key == "b*");
  CHECK(alpha_equal(pred.degree_relation, rd("lam x:e . lam d:d . ((rich' x) d)")));

  HeimForm wra = build_heim(parse_one("George owns a faster car than Bill",
                                      ConstructionTag::Wra), sem());
  CHECK(alpha_equal(wra.degree_relation, rd(
      "lam x:e . lam d:d . exists y:e . (((fast' car') y) d) & ((own' x) y)")));

  HeimForm card = build_heim(parse_one("George owns at least two faster cars than Bill",
                                       ConstructionTag::Wra), sem());
  CHECK(alpha_equal(card.degree_relation, rd(
      "lam x:e . lam d:d . atleast 2 y:e . (((fast' car') y) d) & ((own' x) y)")));

  CHECK_THROWS_AS(build_heim(parse_one("George owns a faster car than this BMW",
                                       ConstructionTag::Nra), sem()),
                  UnsupportedConstructionError);
  CHECK_THROWS_AS(build_heim(parse_one("George has a faster car than every policeman",
                                       ConstructionTag::Wra), sem()),
                  UnsupportedConstructionError);
}

TEST_CASE("predicative baseline compares maximal degrees") {
  HeimForm pred = build_heim(parse_one("George is richer than Bill", ConstructionTag::Pred),
                             sem());
  Model m0 = load_model("m0.json");  // wealth: george 5, bill 3
  auto v = eval_heim(pred, m0);
  REQUIRE(v.has_value());
  CHECK(*v == true);
}

TEST_CASE("an empty degree description makes the baseline undefined") {
  HeimForm wra = build_heim(parse_one("George owns a faster car than Bill",
                                      ConstructionTag::Wra), sem());
  Model m = Model::from_json(R"({
    "entities": ["george", "bill", "gcar1"],
    "sorts": {"car'": ["gcar1"]},
    "relations": {"own'": [["george", "gcar1"]]},
    "measures": {"speed": {"gcar1": 100}},
    "constants": {"g*": "george", "b*": "bill"}
  })");
  CHECK_FALSE(eval_heim(wra, m).has_value());
}

TEST_CASE("the cardinal baseline and the pipeline diverge on the witness model") {
  Model md = load_model("mdagger.json");
  SurfaceTree tree = parse_one("George owns at least two faster cars than Bill",
                               ConstructionTag::Wra);
  HeimForm hf = build_heim(tree, sem());
  auto baseline = eval_heim(hf, md);
  REQUIRE(baseline.has_value());
  CHECK(*baseline == true);

  auto readings = compose_all(tree, sem());
  REQUIRE(readings.size() == 1);
  CHECK(evaluate(readings[0].form, md) == false);
}

TEST_CASE("property: baseline and pipeline agree on simple predicative sentences") {
  testing::Rng rng(5150);
  SurfaceTree tree = parse_one("George is richer than Bill", ConstructionTag::Pred);
  HeimForm hf = build_heim(tree, sem());
  auto readings = compose_all(tree, sem());
  REQUIRE(readings.size() == 1);
  for (int i = 0; i < 200; ++i) {
    Model m;
    m.entities = {"george", "bill"};
    m.constants = {{"g*", "george"}, {"b*", "bill"}};
    m.measures["wealth"]["george"] = testing::pick(rng, 1, 12);
    m.measures["wealth"]["bill"] = testing::pick(rng, 1, 12);
    auto baseline = eval_heim(hf, m);
    REQUIRE(baseline.has_value());
    CHECK(*baseline == evaluate(readings[0].form, m));
  }
}
