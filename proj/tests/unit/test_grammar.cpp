#include "compsem/grammar.hpp"
#include "compsem/lf.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

#include "doctest.h"

using namespace compsem;

namespace {

const Lexicon& lex() {
  static const Lexicon lx = Lexicon::builtin();
  return lx;
}

std::vector<std::string> corpus_lines() {
  std::ifstream in(std::string(COMPSEM_DATA_DIR) + "/corpus.txt");
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

bool has_tag(const std::vector<SurfaceTree>& trees, ConstructionTag tag) {
  return std::any_of(trees.begin(), trees.end(), [&](const SurfaceTree& t) {
    return classify_construction(t) == tag;
  });
}

}  // namespace

TEST_CASE("every corpus sentence has at least one analysis") {
  for (const std::string& s : corpus_lines()) {
    CAPTURE(s);
    CHECK_FALSE(parse(s, lex()).empty());
  }
}

TEST_CASE("attachment ambiguity: referential complements get both analyses") {
  auto trees = parse("George owns a faster car than Bill", lex());
  CHECK(trees.size() == 2);
  CHECK(has_tag(trees, ConstructionTag::Wra));
  CHECK(has_tag(trees, ConstructionTag::Nra));
  CHECK(print_bracketing(trees[0]) ==
        "[IP [NP George] owns [NP [NP a [N' faster car]] [PP than [NP Bill]]]]");
  CHECK(print_bracketing(trees[1]) ==
        "[IP [NP George] owns [NP [NP a [N' faster car]] [PP than [SC WH [NP Bill]]]]]");
}

TEST_CASE("predicative and complement-free analyses") {
  auto pred = parse("George is richer than Bill", lex());
  REQUIRE(pred.size() == 1);
  CHECK(classify_construction(pred[0]) == ConstructionTag::Pred);
  CHECK(print_bracketing(pred[0]) ==
        "[IP [NP George] is [AP [AP richer] [PP than [SC WH [NP Bill]]]]]");

  auto plain = parse("George owns a faster car", lex());
  REQUIRE(plain.size() == 1);
  CHECK(classify_construction(plain[0]) == ConstructionTag::Plain);
}

TEST_CASE("post-nominal comparatives stay inside the N'") {
  auto trees = parse("a building higher than the ET", lex());
  REQUIRE(trees.size() == 1);
  CHECK(classify_construction(trees[0]) == ConstructionTag::Pred);
  CHECK(print_bracketing(trees[0]) ==
        "[NP a [N' [N' building] [AP [AP higher] [PP than [SC WH [NP the ET]]]]]]");
}

TEST_CASE("multi-word lexemes and case folding") {
  auto trees = parse("George owns at least two faster cars than Bill", lex());
  CHECK(has_tag(trees, ConstructionTag::Wra));
  auto bmw = parse("George owns a faster car than this BMW", lex());
  CHECK(bmw.size() == 2);
  auto every_bmw = parse("George owns a faster car than every BMW", lex());
  CHECK(has_tag(every_bmw, ConstructionTag::Nra));
}

TEST_CASE("topicalized comparative NPs parse with a bound trace") {
  auto trees = parse("A faster car than Bill, George owns indeed", lex());
  REQUIRE_FALSE(trees.empty());
  const SurfaceTree& t = trees[0];
  CHECK(t.kids.size() == 2);
  CHECK(t.kids[0].index == "1");
  CHECK(print_bracketing(t) ==
        "[IP [NP [NP A [N' faster car]] [PP than [NP Bill]]]_1 "
        "[IP [NP George] owns t_1 indeed]]");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("George owns a zeppelin", lex()), UnknownWordError);
  CHECK_THROWS_AS(parse("owns George than", lex()), NoParseError);
  CHECK_THROWS_AS(parse(std::vector<std::string>{}, lex()), NoParseError);
}

TEST_CASE("bracketing round-trips for every corpus parse") {
  for (const std::string& s : corpus_lines()) {
    CAPTURE(s);
    for (const SurfaceTree& t : parse(s, lex())) {
      std::string printed = print_bracketing(t);
      SurfaceTree back = read_bracketing(printed, lex());
      CHECK(back == t);
      CHECK(print_bracketing(back) == printed);
    }
  }
}

TEST_CASE("construction tags satisfy their shape invariants") {
  for (const std::string& s : corpus_lines()) {
    for (const SurfaceTree& t : parse(s, lex())) {
      ConstructionTag tag = classify_construction(t);
      if (tag == ConstructionTag::Wra || tag == ConstructionTag::Nra) {
        // [NP [NP Det [N' A N]] [PP than X]]
        const SynTree* host = nullptr;
        std::function<void(const SynTree&)> walk = [&](const SynTree& n) {
          if (n.tag == tag && !host) host = &n;
          for (const SynTree& k : n.kids) walk(k);
        };
        walk(t);
        REQUIRE(host);
        REQUIRE(host->kids.size() == 2);
        CHECK(host->kids[0].cat == Cat::NP);
        CHECK(host->kids[1].cat == Cat::PP);
        const SynTree& obj = host->kids[1].kids[1];
        if (tag == ConstructionTag::Wra) CHECK(obj.cat == Cat::NP);
        if (tag == ConstructionTag::Nra) {
          CHECK(obj.cat == Cat::SC);
          CHECK(obj.kids[0].cat == Cat::WH);
        }
      }
    }
  }
}

TEST_CASE("lexicon file matches the built-in fragment") {
  Lexicon from_file = Lexicon::load_file(std::string(COMPSEM_DATA_DIR) + "/lexicon.tsv");
  CHECK(from_file == lex());
  CHECK(Lexicon::load_text(lex().to_text()) == lex());
}

TEST_CASE("lexicon loader rejects malformed lines") {
  CHECK_THROWS_AS(Lexicon::load_text("justoneword\n"), LexiconError);
  CHECK_THROWS_AS(Lexicon::load_text("a\tDet\ta\tclass=strange\n"), LexiconError);
}
