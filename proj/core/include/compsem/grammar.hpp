#pragma once

#include "compsem/term.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace compsem {

enum class WordCat { ProperName, Det, CardDet, N, A, V, Copula, CompParticle, Coord, Adv };
enum class DetClass { None, Indefinite, Cardinal, Definite, Universal, Npi };

struct LexEntry {
  std::vector<std::string> forms;  // lowercased words of the lexeme
  WordCat cat = WordCat::N;
  std::string sem_key;
  DetClass det_class = DetClass::None;
  CardKind card_kind = CardKind::AtLeast;
  unsigned card_n = 0;
  std::string dimension;     // gradable adjectives carry their measure dimension
  bool comparative = false;  // -er form
  bool attributive = false;  // adjective constant takes the head-noun property
  bool operator==(const LexEntry&) const = default;
};

struct UnknownWordError : std::runtime_error {
  explicit UnknownWordError(const std::string& word_)
      : std::runtime_error("unknown word: " + word_), word(word_) {}
  std::string word;
};

struct NoParseError : std::runtime_error {
  explicit NoParseError(const std::string& what_)
      : std::runtime_error("no parse: " + what_) {}
};

struct LexiconError : std::runtime_error {
  explicit LexiconError(const std::string& what_)
      : std::runtime_error("lexicon: " + what_) {}
};

// Immutable after construction; lookups are longest-match over lowercased
// token streams, so multi-word lexemes ("this bmw", "at least two") win over
// their prefixes.
class Lexicon {
 public:
  static Lexicon builtin();
  static Lexicon load_file(const std::string& path);
  static Lexicon load_text(const std::string& text);
  std::string to_text() const;  // form<TAB>category<TAB>semantic-key<TAB>attributes

  const std::vector<LexEntry>& entries() const { return entries_; }
  const LexEntry* match(const std::vector<std::string>& tokens, size_t pos,
                        size_t* matched_len) const;
  bool operator==(const Lexicon&) const = default;

 private:
  std::vector<LexEntry> entries_;
};

enum class Cat { IP, NP, Nbar, AP, PP, CP, SC, Det, N, A, V, P, C, Adv, Copula, Coord, WH, Trace };
enum class ConstructionTag { None, Wra, Nra, Pred, Plain };

// Labelled constituent tree. Leaves carry the surface form (original casing)
// and their lexicon entry; traces and the WH operator are index-bearing
// leaves. The construction tag sits on the comparative-hosting node.
struct SynTree {
  Cat cat = Cat::IP;
  std::string word;
  LexEntry lex;
  std::string index;  // "", "1", "2", "i", "j"
  ConstructionTag tag = ConstructionTag::None;
  std::vector<SynTree> kids;
  bool is_leaf() const { return kids.empty(); }
  bool operator==(const SynTree&) const = default;
};

using SurfaceTree = SynTree;

std::vector<std::string> tokenize(const std::string& sentence);

// All structurally valid analyses, ordered WRA < NRA < PRED < PLAIN.
// Comparative complements yield both the NP-adjoined (WRA) and the
// small-clause (NRA) attachment; post-nominal comparatives yield the
// N'-internal reduced-relative analysis only.
std::vector<SurfaceTree> parse(const std::vector<std::string>& words, const Lexicon& lexicon);
std::vector<SurfaceTree> parse(const std::string& sentence, const Lexicon& lexicon);

ConstructionTag classify_construction(const SurfaceTree& tree);

std::string print_bracketing(const SynTree& tree);
SynTree read_bracketing(const std::string& text, const Lexicon& lexicon);

std::string cat_name(Cat c);
std::string tag_name(ConstructionTag t);

}  // namespace compsem
