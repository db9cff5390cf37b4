#include "compsem/model.hpp"

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

Model load_model(const std::string& name) {
  return Model::load(std::string(COMPSEM_DATA_DIR) + "/models/" + name);
}

SurfaceTree parse_one(const std::string& s, ConstructionTag tag) {
  for (const SurfaceTree& t : parse(s, lex()))
    if (classify_construction(t) == tag) return t;
  FAIL("no parse with the requested tag for: " << s);
  throw std::logic_error("unreachable");
}

Reading reading_of(const std::string& s, ConstructionTag tag, size_t idx = 0) {
  auto rs = compose_all(parse_one(s, tag), sem());
  REQUIRE(rs.size() > idx);
  return rs[idx];
}

}  // namespace

TEST_CASE("model loading validates referential integrity") {
  CHECK_THROWS_AS(Model::from_json("not json"), ModelError);
  CHECK_THROWS_AS(Model::from_json(R"({"entities": ["a"], "version": 7})"), ModelError);
  CHECK_THROWS_AS(Model::from_json(R"({
    "entities": ["a"], "sorts": {"car'": ["ghost"]}
  })"), ModelError);
  CHECK_THROWS_AS(Model::from_json(R"({
    "entities": ["a"], "constants": {"g*": "ghost"}
  })"), ModelError);
  Model ok = Model::from_json(R"({"entities": ["a"], "constants": {"g*": "a"}})");
  CHECK(ok.entities.size() == 1);
}

namespace {

// Independent arithmetic oracle over the raw model data: the speeds of the
// measured cars a relation pairs with `owner`.
std::vector<double> owned_speeds(const Model& m, const std::string& rel,
                                 const std::string& owner) {
  std::vector<double> out;
  auto rit = m.relations.find(rel);
  auto mit = m.measures.find("speed");
  if (rit == m.relations.end() || mit == m.measures.end()) return out;
  for (const auto& [a, b] : rit->second) {
    if (a != owner) continue;
    auto vit = mit->second.find(b);
    if (vit != mit->second.end()) out.push_back(vit->second);
  }
  return out;
}

double max_of(const std::vector<double>& v) {
  REQUIRE_FALSE(v.empty());
  return *std::max_element(v.begin(), v.end());
}

}  // namespace

TEST_CASE("fixture truth values for the standard comparative") {
  Reading wra = reading_of("George owns a faster car than Bill", ConstructionTag::Wra);
  for (const auto& [file, frozen] :
       std::vector<std::pair<std::string, bool>>{{"m0.json", true}, {"m1.json", false}}) {
    CAPTURE(file);
    Model m = load_model(file);
    bool oracle = max_of(owned_speeds(m, "own'", "george")) >
                  max_of(owned_speeds(m, "own'", "bill"));
    CHECK(oracle == frozen);
    CHECK(evaluate(wra.form, m) == frozen);
  }
}

TEST_CASE("fixture truth value for the cardinal comparative on the witness model") {
  Reading card = reading_of("George owns at least two faster cars than Bill",
                            ConstructionTag::Wra);
  Model md = load_model("mdagger.json");
  // oracle: count George cars strictly above Bill's best
  double bill_best = max_of(owned_speeds(md, "own'", "bill"));
  int count = 0;
  for (double g : owned_speeds(md, "own'", "george"))
    if (g > bill_best) ++count;
  CHECK(count == 1);  // frozen: only one such car, so the claim fails
  CHECK(evaluate(card.form, md) == false);
}

TEST_CASE("fixture truth value for the direct analysis") {
  Reading nra = reading_of("George owns a faster car than this BMW", ConstructionTag::Nra);
  Model m2 = load_model("m2.json");
  bool oracle = max_of(owned_speeds(m2, "own'", "george")) >
                m2.measures.at("speed").at(m2.constants.at("bmw*"));
  CHECK(oracle == true);
  CHECK(evaluate(nra.form, m2) == true);
}

TEST_CASE("quantified complements compare against every witness") {
  Model m = Model::from_json(R"({
    "entities": ["george", "pat", "sam", "gcar", "pcar1", "pcar2", "scar"],
    "sorts": {"car'": ["gcar", "pcar1", "pcar2", "scar"],
              "policeman'": ["pat", "sam"]},
    "relations": {"has'": [["george", "gcar"], ["pat", "pcar1"], ["pat", "pcar2"],
                           ["sam", "scar"]]},
    "measures": {"speed": {"gcar": 180, "pcar1": 120, "pcar2": 160, "scar": 170}},
    "constants": {"g*": "george"}
  })");
  // oracle: George's best (180) beats every policeman-held car (<= 170)
  Reading npi = reading_of("George has a faster car than any policeman", ConstructionTag::Wra);
  Reading univ = reading_of("George has a faster car than every policeman",
                            ConstructionTag::Wra);
  CHECK(evaluate(npi.form, m) == true);
  CHECK(evaluate(univ.form, m) == true);
  m.measures["speed"]["scar"] = 200;  // now one policeman car wins
  CHECK(evaluate(npi.form, m) == false);
  CHECK(evaluate(univ.form, m) == false);
}

TEST_CASE("predicative universal complements quantify over the sort") {
  Model m = Model::from_json(R"({
    "entities": ["george", "ann", "ben"],
    "sorts": {"professor'": ["ann", "ben"]},
    "measures": {"wealth": {"george": 10, "ann": 4, "ben": 8}},
    "constants": {"g*": "george"}
  })");
  Reading r = reading_of("George is richer than every professor", ConstructionTag::Pred);
  CHECK(evaluate(r.form, m) == true);   // 10 beats 4 and 8
  m.measures["wealth"]["ben"] = 12;
  CHECK(evaluate(r.form, m) == false);  // ben now wins
}

TEST_CASE("degree grid collects the mentioned dimensions only") {
  Model m0 = load_model("m0.json");
  Reading wra = reading_of("George owns a faster car than Bill", ConstructionTag::Wra);
  CHECK(degree_grid(wra.form, m0) == std::set<double>{140, 150, 200});

  Term no_measures = rd("(car' g*)");
  CHECK(degree_grid(no_measures, m0).empty());
  CHECK(evaluate(rd("forall d:d . (d > d)"), m0) == true);  // vacuous over an empty grid

  Model m2 = load_model("m2.json");
  Reading nra = reading_of("George owns a faster car than this BMW", ConstructionTag::Nra);
  CHECK(degree_grid(nra.form, m2) == std::set<double>{180, 200});
}

TEST_CASE("a complement that owns nothing makes the degree condition vacuous") {
  Reading wra = reading_of("George owns a faster car than Bill", ConstructionTag::Wra);
  Model m = Model::from_json(R"({
    "entities": ["george", "bill", "gcar1"],
    "sorts": {"car'": ["gcar1"]},
    "relations": {"own'": [["george", "gcar1"]]},
    "measures": {"speed": {"gcar1": 10}},
    "constants": {"g*": "george", "b*": "bill"}
  })");
  CHECK(evaluate(wra.form, m) == true);
}

TEST_CASE("evaluation errors") {
  Model m0 = load_model("m0.json");
  CHECK_THROWS_AS(evaluate(rd("(car' x:e)"), m0), EvalError);  // open form
  CHECK_THROWS_AS(evaluate(rd("(car' et*)"), m0), MissingDenotationError);
  // an unresolved anaphoric relation is an error once its atom is reached
  // (the wealth dimension keeps the degree grid nonempty)
  CHECK_THROWS_AS(
      evaluate(rd("exists y:e . forall d:d . (((P0 y) d) | ((rich' y) d))"), m0),
      EvalError);
}

TEST_CASE("property: injecting extra grid points never changes truth") {
  testing::Rng rng(31337);
  Reading wra = reading_of("George owns a faster car than Bill", ConstructionTag::Wra);
  Reading card = reading_of("George owns at least two faster cars than Bill",
                            ConstructionTag::Wra);
  for (int i = 0; i < 120; ++i) {
    testing::CarModel cm = testing::random_car_model(rng, false, true);
    for (const Reading* r : {&wra, &card}) {
      bool base = evaluate(r->form, cm.model);
      EvalOptions opts;
      for (int k = 0; k < 5; ++k)
        opts.extra_degrees.push_back(testing::pick(rng, -5, 30) + 0.5);
      CHECK(evaluate(r->form, cm.model, opts) == base);
    }
  }
}

TEST_CASE("property: the composed form means fastest-vs-fastest") {
  testing::Rng rng(8086);
  Reading wra = reading_of("George owns a faster car than Bill", ConstructionTag::Wra);
  for (int i = 0; i < 300; ++i) {
    testing::CarModel cm = testing::random_car_model(rng, true, false);
    CHECK(evaluate(wra.form, cm.model) == testing::oracle_max_vs_max(cm));
  }
}

TEST_CASE("property: truth is monotone in the right direction") {
  testing::Rng rng(1701);
  Reading wra = reading_of("George owns a faster car than Bill", ConstructionTag::Wra);
  for (int i = 0; i < 200; ++i) {
    testing::CarModel cm = testing::random_car_model(rng, true, false);
    bool before = evaluate(wra.form, cm.model);
    Model bumped = cm.model;
    auto& speeds = bumped.measures["speed"];
    std::vector<Entity> george_cars, bill_cars;
    for (const auto& [o, c] : bumped.relations["own'"])
      (o == "george" ? george_cars : bill_cars).push_back(c);
    if (testing::pick(rng, 0, 1) == 0 && !george_cars.empty()) {
      Entity c = george_cars[static_cast<size_t>(
          testing::pick(rng, 0, static_cast<int>(george_cars.size()) - 1))];
      speeds[c] += testing::pick(rng, 1, 10);
      bool after = evaluate(wra.form, bumped);
      CHECK_FALSE((before && !after));  // raising George never goes true -> false
    } else if (!bill_cars.empty()) {
      Entity c = bill_cars[static_cast<size_t>(
          testing::pick(rng, 0, static_cast<int>(bill_cars.size()) - 1))];
      speeds[c] += testing::pick(rng, 1, 10);
      bool after = evaluate(wra.form, bumped);
      CHECK_FALSE((!before && after));  // raising Bill never goes false -> true
    }
  }
}

TEST_CASE("accessibility separates the two car referents") {
  Reading wra = reading_of("George owns a faster car than Bill", ConstructionTag::Wra);
  AccessibilityReport rep = accessibility(wra);
  std::vector<ReferentInfo> entities;
  for (const ReferentInfo& r : rep.referents) entities.push_back(r);
  REQUIRE(entities.size() == 2);
  CHECK(entities[0].accessible);
  CHECK(entities[0].restrictor.find("own' g*") != std::string::npos);
  CHECK_FALSE(entities[1].accessible);
  CHECK(entities[1].restrictor.find("own' b*") != std::string::npos);
  CHECK(entities[1].position.find("antecedent") != std::string::npos);
}

TEST_CASE("accessibility on a plain clause lists the single referent") {
  Reading plain = reading_of("George owns a fast car", ConstructionTag::Plain);
  AccessibilityReport rep = accessibility(plain);
  REQUIRE(rep.referents.size() == 1);
  CHECK(rep.referents[0].accessible);
}

TEST_CASE("the complement referent of a wide-scope universal stays inaccessible") {
  Reading univ = reading_of("George has a faster car than every policeman",
                            ConstructionTag::Wra);
  AccessibilityReport rep = accessibility(univ);
  size_t accessible = 0, inaccessible = 0;
  for (const ReferentInfo& r : rep.referents)
    (r.accessible ? accessible : inaccessible)++;
  CHECK(accessible == 1);
  CHECK(inaccessible == 1);
}

TEST_CASE("the disjunctive sentence splits across the fixture models") {
  auto rs = compose_all(parse_one("George owns a faster car than Bill or Richard",
                                  ConstructionTag::Wra), sem());
  REQUIRE(rs.size() == 2);
  // rs[0] narrow (beats both), rs[1] wide (beats at least one)
  auto m3 = check_reading_pair(rs, load_model("m3.json"));
  CHECK(m3 == std::vector<bool>{false, true});
  auto m4 = check_reading_pair(rs, load_model("m4.json"));
  CHECK(m4 == std::vector<bool>{true, true});
  auto m5 = check_reading_pair(rs, load_model("m5.json"));
  CHECK(m5 == std::vector<bool>{false, false});
}
