#include "compsem/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace compsem {

// ------------------------------------------------------------------- lexicon

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string cat_word(WordCat c) {
  switch (c) {
    case WordCat::ProperName: return "ProperName";
    case WordCat::Det: return "Det";
    case WordCat::CardDet: return "CardDet";
    case WordCat::N: return "N";
    case WordCat::A: return "A";
    case WordCat::V: return "V";
    case WordCat::Copula: return "Copula";
    case WordCat::CompParticle: return "CompParticle";
    case WordCat::Coord: return "Coord";
    case WordCat::Adv: return "Adv";
  }
  return "?";
}

WordCat word_cat(const std::string& s) {
  if (s == "ProperName") return WordCat::ProperName;
  if (s == "Det") return WordCat::Det;
  if (s == "CardDet") return WordCat::CardDet;
  if (s == "N") return WordCat::N;
  if (s == "A") return WordCat::A;
  if (s == "V") return WordCat::V;
  if (s == "Copula") return WordCat::Copula;
  if (s == "CompParticle") return WordCat::CompParticle;
  if (s == "Coord") return WordCat::Coord;
  if (s == "Adv") return WordCat::Adv;
  throw LexiconError("unknown category '" + s + "'");
}

std::string det_class_word(DetClass c) {
  switch (c) {
    case DetClass::None: return "none";
    case DetClass::Indefinite: return "indefinite";
    case DetClass::Cardinal: return "cardinal";
    case DetClass::Definite: return "definite";
    case DetClass::Universal: return "universal";
    case DetClass::Npi: return "npi";
  }
  return "?";
}

DetClass det_class(const std::string& s) {
  if (s == "indefinite") return DetClass::Indefinite;
  if (s == "cardinal") return DetClass::Cardinal;
  if (s == "definite") return DetClass::Definite;
  if (s == "universal") return DetClass::Universal;
  if (s == "npi") return DetClass::Npi;
  throw LexiconError("unknown determiner class '" + s + "'");
}

LexEntry entry(const std::string& forms, WordCat cat, const std::string& key) {
  LexEntry e;
  e.forms = split_ws(lower(forms));
  e.cat = cat;
  e.sem_key = key;
  return e;
}

LexEntry det(const std::string& forms, const std::string& key, DetClass cls) {
  LexEntry e = entry(forms, WordCat::Det, key);
  e.det_class = cls;
  return e;
}

LexEntry card_det(const std::string& forms, const std::string& key, CardKind k, unsigned n) {
  LexEntry e = entry(forms, WordCat::CardDet, key);
  e.det_class = DetClass::Cardinal;
  e.card_kind = k;
  e.card_n = n;
  return e;
}

LexEntry adj(const std::string& form, const std::string& key, const std::string& dim,
             bool comparative, bool attributive) {
  LexEntry e = entry(form, WordCat::A, key);
  e.dimension = dim;
  e.comparative = comparative;
  e.attributive = attributive;
  return e;
}

}  // namespace

Lexicon Lexicon::builtin() {
  Lexicon lx;
  auto& es = lx.entries_;
  es.push_back(entry("george", WordCat::ProperName, "g*"));
  es.push_back(entry("bill", WordCat::ProperName, "b*"));
  es.push_back(entry("richard", WordCat::ProperName, "r*"));
  es.push_back(entry("this bmw", WordCat::ProperName, "bmw*"));
  es.push_back(entry("the et", WordCat::ProperName, "et*"));
  es.push_back(det("a", "a", DetClass::Indefinite));
  es.push_back(det("the", "the", DetClass::Definite));
  es.push_back(det("every", "every", DetClass::Universal));
  es.push_back(det("any", "any", DetClass::Npi));
  es.push_back(card_det("at least two", "at_least_two", CardKind::AtLeast, 2));
  es.push_back(card_det("at most one", "at_most_one", CardKind::AtMost, 1));
  es.push_back(entry("car", WordCat::N, "car'"));
  es.push_back(entry("cars", WordCat::N, "car'"));
  es.push_back(entry("policeman", WordCat::N, "policeman'"));
  es.push_back(entry("policemen", WordCat::N, "policeman'"));
  es.push_back(entry("professor", WordCat::N, "professor'"));
  es.push_back(entry("professors", WordCat::N, "professor'"));
  es.push_back(entry("building", WordCat::N, "building'"));
  es.push_back(entry("buildings", WordCat::N, "building'"));
  es.push_back(entry("bmw", WordCat::N, "bmw'"));
  es.push_back(entry("bmws", WordCat::N, "bmw'"));
  es.push_back(adj("fast", "fast'", "speed", false, true));
  es.push_back(adj("faster", "fast'", "speed", true, true));
  es.push_back(adj("rich", "rich'", "wealth", false, false));
  es.push_back(adj("richer", "rich'", "wealth", true, false));
  es.push_back(adj("high", "high'", "height", false, false));
  es.push_back(adj("higher", "high'", "height", true, false));
  es.push_back(entry("owns", WordCat::V, "own'"));
  es.push_back(entry("own", WordCat::V, "own'"));
  es.push_back(entry("has", WordCat::V, "has'"));
  es.push_back(entry("is", WordCat::Copula, "is"));
  es.push_back(entry("than", WordCat::CompParticle, "than"));
  es.push_back(entry("or", WordCat::Coord, "or"));
  es.push_back(entry("indeed", WordCat::Adv, "indeed"));
  return lx;
}

Lexicon Lexicon::load_text(const std::string& text) {
  Lexicon lx;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() < 3)
      throw LexiconError("line " + std::to_string(lineno) + ": expected at least 3 tab-separated fields");
    LexEntry e;
    e.forms = split_ws(lower(cols[0]));
    e.cat = word_cat(cols[1]);
    e.sem_key = cols[2];
    if (cols.size() >= 4 && !cols[3].empty()) {
      std::istringstream attrs(cols[3]);
      std::string kv;
      while (std::getline(attrs, kv, ',')) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos)
          throw LexiconError("line " + std::to_string(lineno) + ": bad attribute '" + kv + "'");
        std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
        if (k == "class") e.det_class = det_class(v);
        else if (k == "kind") e.card_kind = v == "atmost" ? CardKind::AtMost : CardKind::AtLeast;
        else if (k == "n") e.card_n = static_cast<unsigned>(std::stoul(v));
        else if (k == "dim") e.dimension = v;
        else if (k == "comparative") e.comparative = v == "yes";
        else if (k == "attributive") e.attributive = v == "yes";
        else throw LexiconError("line " + std::to_string(lineno) + ": unknown attribute '" + k + "'");
      }
    }
    lx.entries_.push_back(std::move(e));
  }
  return lx;
}

Lexicon Lexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_text(buf.str());
}

std::string Lexicon::to_text() const {
  std::ostringstream out;
  for (const LexEntry& e : entries_) {
    std::string forms;
    for (size_t i = 0; i < e.forms.size(); ++i) {
      if (i) forms += ' ';
      forms += e.forms[i];
    }
    std::vector<std::string> attrs;
    if (e.det_class != DetClass::None) attrs.push_back("class=" + det_class_word(e.det_class));
    if (e.card_n > 0) {
      attrs.push_back(std::string("kind=") + (e.card_kind == CardKind::AtMost ? "atmost" : "atleast"));
      attrs.push_back("n=" + std::to_string(e.card_n));
    }
    if (!e.dimension.empty()) attrs.push_back("dim=" + e.dimension);
    if (e.comparative) attrs.push_back("comparative=yes");
    if (e.attributive) attrs.push_back("attributive=yes");
    out << forms << '\t' << cat_word(e.cat) << '\t' << e.sem_key << '\t';
    for (size_t i = 0; i < attrs.size(); ++i) {
      if (i) out << ',';
      out << attrs[i];
    }
    out << '\n';
  }
  return out.str();
}

const LexEntry* Lexicon::match(const std::vector<std::string>& tokens, size_t pos,
                               size_t* matched_len) const {
  const LexEntry* best = nullptr;
  size_t best_len = 0;
  for (const LexEntry& e : entries_) {
    if (e.forms.empty() || e.forms.size() > tokens.size() - pos) continue;
    bool ok = true;
    for (size_t i = 0; i < e.forms.size(); ++i)
      if (e.forms[i] != tokens[pos + i]) { ok = false; break; }
    if (ok && e.forms.size() > best_len) {
      best = &e;
      best_len = e.forms.size();
    }
  }
  if (best && matched_len) *matched_len = best_len;
  return best;
}

// ----------------------------------------------------------------- tokenizer

std::vector<std::string> tokenize(const std::string& sentence) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : sentence) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '.' ||
        c == '!' || c == '?') {
      if (!cur.empty()) { out.push_back(cur); cur.clear(); }
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// -------------------------------------------------------------------- parser

namespace {

struct Seg {
  LexEntry lex;
  std::string surface;
};

std::vector<Seg> segment(const std::vector<std::string>& words, const Lexicon& lx) {
  std::vector<std::string> lowered;
  lowered.reserve(words.size());
  for (const std::string& w : words) lowered.push_back(lower(w));
  std::vector<Seg> segs;
  size_t pos = 0;
  while (pos < words.size()) {
    size_t len = 0;
    const LexEntry* e = lx.match(lowered, pos, &len);
    if (!e) throw UnknownWordError(words[pos]);
    std::string surface;
    for (size_t i = 0; i < len; ++i) {
      if (i) surface += ' ';
      surface += words[pos + i];
    }
    segs.push_back({*e, std::move(surface)});
    pos += len;
  }
  return segs;
}

SynTree leaf(Cat c, const Seg& s) {
  SynTree t;
  t.cat = c;
  t.word = s.surface;
  t.lex = s.lex;
  return t;
}

SynTree node(Cat c, std::vector<SynTree> kids) {
  SynTree t;
  t.cat = c;
  t.kids = std::move(kids);
  return t;
}

SynTree name_np(const Seg& s) {
  SynTree t;
  t.cat = Cat::NP;
  t.word = s.surface;
  t.lex = s.lex;
  return t;
}

SynTree wh_leaf(const std::string& index = "") {
  SynTree t;
  t.cat = Cat::WH;
  t.index = index;
  return t;
}

SynTree trace_leaf(const std::string& index) {
  SynTree t;
  t.cat = Cat::Trace;
  t.index = index;
  return t;
}

using Segs = std::vector<Seg>;

bool is_det(const Seg& s) {
  return s.lex.cat == WordCat::Det || s.lex.cat == WordCat::CardDet;
}

// All NP analyses of segs[lo, hi).
std::vector<SynTree> parse_np(const Segs& segs, size_t lo, size_t hi) {
  std::vector<SynTree> out;
  if (lo >= hi) return out;
  size_t len = hi - lo;
  if (len == 1 && segs[lo].lex.cat == WordCat::ProperName) {
    out.push_back(name_np(segs[lo]));
    return out;
  }
  if (len == 3 && segs[lo].lex.cat == WordCat::ProperName &&
      segs[lo + 1].lex.cat == WordCat::Coord &&
      segs[lo + 2].lex.cat == WordCat::ProperName) {
    out.push_back(node(Cat::NP, {name_np(segs[lo]), leaf(Cat::Coord, segs[lo + 1]),
                                 name_np(segs[lo + 2])}));
    return out;
  }
  if (!is_det(segs[lo])) return out;
  Cat det_cat = Cat::Det;
  SynTree d = leaf(det_cat, segs[lo]);
  // locate a comparative particle inside the NP, if any
  size_t than = hi;
  for (size_t k = lo + 1; k < hi; ++k)
    if (segs[k].lex.cat == WordCat::CompParticle) { than = k; break; }
  if (than == hi) {
    if (len == 2 && segs[lo + 1].lex.cat == WordCat::N) {
      out.push_back(node(Cat::NP, {d, node(Cat::Nbar, {leaf(Cat::N, segs[lo + 1])})}));
    } else if (len == 3 && segs[lo + 1].lex.cat == WordCat::A &&
               segs[lo + 2].lex.cat == WordCat::N) {
      out.push_back(node(Cat::NP, {d, node(Cat::Nbar, {leaf(Cat::A, segs[lo + 1]),
                                                       leaf(Cat::N, segs[lo + 2])})}));
    }
    return out;
  }
  std::vector<SynTree> comps = parse_np(segs, than + 1, hi);
  if (comps.empty()) return out;
  SynTree thanleaf = leaf(Cat::P, segs[than]);
  if (than == lo + 3 && segs[lo + 1].lex.cat == WordCat::A &&
      segs[lo + 1].lex.comparative && segs[lo + 2].lex.cat == WordCat::N) {
    // prenominal comparative: both attachments of the complement
    SynTree inner = node(Cat::NP, {d, node(Cat::Nbar, {leaf(Cat::A, segs[lo + 1]),
                                                       leaf(Cat::N, segs[lo + 2])})});
    for (const SynTree& comp : comps) {
      out.push_back(node(Cat::NP, {inner, node(Cat::PP, {thanleaf, comp})}));
      out.push_back(node(Cat::NP, {inner, node(Cat::PP, {thanleaf,
                         node(Cat::SC, {wh_leaf(), comp})})}));
    }
  } else if (than == lo + 3 && segs[lo + 1].lex.cat == WordCat::N &&
             segs[lo + 2].lex.cat == WordCat::A && segs[lo + 2].lex.comparative) {
    // post-nominal reduced relative: complement stays inside the AP
    for (const SynTree& comp : comps) {
      SynTree ap = node(Cat::AP, {node(Cat::AP, {leaf(Cat::A, segs[lo + 2])}),
                                  node(Cat::PP, {thanleaf, node(Cat::SC, {wh_leaf(), comp})})});
      out.push_back(node(Cat::NP, {d, node(Cat::Nbar, {node(Cat::Nbar, {leaf(Cat::N, segs[lo + 1])}),
                                                       ap})}));
    }
  }
  return out;
}

// Predicative AP: A(-er) than NP.
std::vector<SynTree> parse_pred_ap(const Segs& segs, size_t lo, size_t hi) {
  std::vector<SynTree> out;
  if (hi - lo < 3) return out;
  if (segs[lo].lex.cat != WordCat::A || !segs[lo].lex.comparative) return out;
  if (segs[lo + 1].lex.cat != WordCat::CompParticle) return out;
  for (const SynTree& comp : parse_np(segs, lo + 2, hi)) {
    out.push_back(node(Cat::AP, {node(Cat::AP, {leaf(Cat::A, segs[lo])}),
                                 node(Cat::PP, {leaf(Cat::P, segs[lo + 1]),
                                                node(Cat::SC, {wh_leaf(), comp})})}));
  }
  return out;
}

// Tag assignment is recomputed from shape so that parsing and bracket reading
// agree byte for byte.
void assign_tags(SynTree& t, bool inside_comparative_np = false) {
  t.tag = ConstructionTag::None;
  bool comparative_outer = false;
  if (t.cat == Cat::NP && t.kids.size() == 2 && t.kids[0].cat == Cat::NP &&
      t.kids[1].cat == Cat::PP && t.kids[1].kids.size() == 2) {
    const SynTree& obj = t.kids[1].kids[1];
    if (obj.cat == Cat::NP) t.tag = ConstructionTag::Wra;
    else if (obj.cat == Cat::SC) t.tag = ConstructionTag::Nra;
    comparative_outer = t.tag != ConstructionTag::None;
  } else if (t.cat == Cat::AP && t.kids.size() == 2 && t.kids[0].cat == Cat::AP &&
             t.kids[1].cat == Cat::PP) {
    t.tag = ConstructionTag::Pred;
  } else if (t.cat == Cat::NP && t.kids.size() == 2 && t.kids[0].cat == Cat::Det &&
             t.kids[1].cat == Cat::Nbar && !inside_comparative_np) {
    const SynTree& nb = t.kids[1];
    bool lexical_only = std::all_of(nb.kids.begin(), nb.kids.end(),
                                    [](const SynTree& k) { return k.is_leaf(); });
    bool has_gradable = std::any_of(nb.kids.begin(), nb.kids.end(), [](const SynTree& k) {
      return k.cat == Cat::A && !k.lex.dimension.empty();
    });
    if (lexical_only && has_gradable) t.tag = ConstructionTag::Plain;
  }
  for (size_t i = 0; i < t.kids.size(); ++i)
    assign_tags(t.kids[i], comparative_outer && i == 0);
}

int tag_rank(ConstructionTag t) {
  switch (t) {
    case ConstructionTag::Wra: return 0;
    case ConstructionTag::Nra: return 1;
    case ConstructionTag::Pred: return 2;
    case ConstructionTag::Plain: return 3;
    case ConstructionTag::None: return 4;
  }
  return 5;
}

}  // namespace

namespace {

const SynTree* find_tagged(const SynTree& t) {
  if (t.tag != ConstructionTag::None) return &t;
  for (const SynTree& k : t.kids)
    if (const SynTree* p = find_tagged(k)) return p;
  return nullptr;
}

}  // namespace

ConstructionTag classify_construction(const SurfaceTree& tree) {
  const SynTree* p = find_tagged(tree);
  return p ? p->tag : ConstructionTag::Plain;
}

std::vector<SurfaceTree> parse(const std::vector<std::string>& words, const Lexicon& lx) {
  if (words.empty()) throw NoParseError("empty sentence");
  Segs segs = segment(words, lx);
  size_t n = segs.size();
  std::vector<SurfaceTree> out;

  for (size_t p = 0; p < n; ++p) {
    if (segs[p].lex.cat == WordCat::Copula) {
      for (const SynTree& s : parse_np(segs, 0, p))
        for (const SynTree& a : parse_pred_ap(segs, p + 1, n))
          out.push_back(node(Cat::IP, {s, leaf(Cat::Copula, segs[p]), a}));
    }
    if (segs[p].lex.cat == WordCat::V) {
      size_t hi = n;
      bool adv = n > p + 1 && segs[n - 1].lex.cat == WordCat::Adv;
      if (adv) hi = n - 1;
      // canonical transitive clause
      for (const SynTree& s : parse_np(segs, 0, p))
        for (const SynTree& o : parse_np(segs, p + 1, hi)) {
          std::vector<SynTree> kids = {s, leaf(Cat::V, segs[p]), o};
          if (adv) kids.push_back(leaf(Cat::Adv, segs[n - 1]));
          out.push_back(node(Cat::IP, std::move(kids)));
        }
      // topicalized object: NP_1 [ NP V t_1 ]
      size_t thi = adv ? n - 1 : n;
      if (thi == p + 1) {
        for (size_t q = 1; q < p; ++q)
          for (const SynTree& o : parse_np(segs, 0, q))
            for (const SynTree& s : parse_np(segs, q, p)) {
              SynTree fronted = o;
              fronted.index = "1";
              std::vector<SynTree> inner = {s, leaf(Cat::V, segs[p]), trace_leaf("1")};
              if (adv) inner.push_back(leaf(Cat::Adv, segs[n - 1]));
              out.push_back(node(Cat::IP, {fronted, node(Cat::IP, std::move(inner))}));
            }
      }
    }
  }
  if (out.empty()) out = parse_np(segs, 0, n);  // bare NP input
  if (out.empty()) throw NoParseError("no analysis covers the input");
  for (SynTree& t : out) assign_tags(t);
  std::stable_sort(out.begin(), out.end(), [](const SynTree& a, const SynTree& b) {
    return tag_rank(classify_construction(a)) < tag_rank(classify_construction(b));
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SurfaceTree> parse(const std::string& sentence, const Lexicon& lx) {
  return parse(tokenize(sentence), lx);
}

// ------------------------------------------------------------------ printing

std::string cat_name(Cat c) {
  switch (c) {
    case Cat::IP: return "IP";
    case Cat::NP: return "NP";
    case Cat::Nbar: return "N'";
    case Cat::AP: return "AP";
    case Cat::PP: return "PP";
    case Cat::CP: return "CP";
    case Cat::SC: return "SC";
    case Cat::Det: return "Det";
    case Cat::N: return "N";
    case Cat::A: return "A";
    case Cat::V: return "V";
    case Cat::P: return "P";
    case Cat::C: return "C";
    case Cat::Adv: return "Adv";
    case Cat::Copula: return "Copula";
    case Cat::Coord: return "Coord";
    case Cat::WH: return "WH";
    case Cat::Trace: return "Trace";
  }
  return "?";
}

std::string tag_name(ConstructionTag t) {
  switch (t) {
    case ConstructionTag::None: return "NONE";
    case ConstructionTag::Wra: return "WRA";
    case ConstructionTag::Nra: return "NRA";
    case ConstructionTag::Pred: return "PRED";
    case ConstructionTag::Plain: return "PLAIN";
  }
  return "?";
}

namespace {

void print_impl(const SynTree& t, std::string& out) {
  if (t.cat == Cat::Trace) {
    out += "t_" + t.index;
    return;
  }
  if (t.cat == Cat::WH) {
    out += t.index.empty() ? "WH" : "WH_" + t.index;
    return;
  }
  if (t.cat == Cat::C) {
    out += "C";
    return;
  }
  if (t.is_leaf() && t.cat == Cat::NP) {
    out += "[NP " + t.word + "]";
    if (!t.index.empty()) out += "_" + t.index;
    return;
  }
  if (t.is_leaf()) {
    out += t.word;
    return;
  }
  out += "[" + cat_name(t.cat);
  for (const SynTree& k : t.kids) {
    out += ' ';
    print_impl(k, out);
  }
  out += "]";
  if (!t.index.empty()) out += "_" + t.index;
}

}  // namespace

std::string print_bracketing(const SynTree& tree) {
  std::string out;
  print_impl(tree, out);
  return out;
}

// ------------------------------------------------------------ bracket reader

namespace {

struct BracketParser {
  const std::string& s;
  const Lexicon& lx;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  std::string word() {
    size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
           s[i] != '[' && s[i] != ']')
      ++i;
    return s.substr(start, i - start);
  }

  std::string read_index() {
    // an optional _idx glued to the previous token
    if (i < s.size() && s[i] == '_') {
      ++i;
      return word();
    }
    return "";
  }

  Cat label_cat(const std::string& label) {
    if (label == "IP") return Cat::IP;
    if (label == "NP") return Cat::NP;
    if (label == "N'") return Cat::Nbar;
    if (label == "AP") return Cat::AP;
    if (label == "PP") return Cat::PP;
    if (label == "CP") return Cat::CP;
    if (label == "SC") return Cat::SC;
    throw NoParseError("unknown bracket label '" + label + "'");
  }

  Cat leaf_cat(WordCat w) {
    switch (w) {
      case WordCat::Det:
      case WordCat::CardDet: return Cat::Det;
      case WordCat::N: return Cat::N;
      case WordCat::A: return Cat::A;
      case WordCat::V: return Cat::V;
      case WordCat::Copula: return Cat::Copula;
      case WordCat::CompParticle: return Cat::P;
      case WordCat::Coord: return Cat::Coord;
      case WordCat::Adv: return Cat::Adv;
      case WordCat::ProperName: return Cat::NP;
    }
    throw NoParseError("unexpected leaf category");
  }

  // Consumes a run of bare words starting at the current position and emits
  // leaves, re-merging multi-word lexemes.
  void words_to_leaves(std::vector<std::string>& pending, std::vector<SynTree>& kids) {
    std::vector<std::string> lowered;
    for (const std::string& w : pending) lowered.push_back(lower(w));
    size_t pos = 0;
    while (pos < pending.size()) {
      const std::string& w = pending[pos];
      if (w.rfind("t_", 0) == 0) {
        kids.push_back(trace_leaf(w.substr(2)));
        ++pos;
        continue;
      }
      if (w == "WH" || w.rfind("WH_", 0) == 0) {
        kids.push_back(wh_leaf(w.size() > 3 ? w.substr(3) : ""));
        ++pos;
        continue;
      }
      if (w == "C") {
        SynTree c;
        c.cat = Cat::C;
        kids.push_back(c);
        ++pos;
        continue;
      }
      size_t len = 0;
      const LexEntry* e = lx.match(lowered, pos, &len);
      if (!e) throw UnknownWordError(w);
      std::string surface;
      for (size_t k = 0; k < len; ++k) {
        if (k) surface += ' ';
        surface += pending[pos + k];
      }
      Seg seg{*e, surface};
      kids.push_back(leaf(leaf_cat(e->cat), seg));
      pos += len;
    }
    pending.clear();
  }

  SynTree bracket() {
    skip_ws();
    if (i >= s.size() || s[i] != '[') throw NoParseError("expected '['");
    ++i;
    std::string label = word();
    Cat c = label_cat(label);
    std::vector<SynTree> kids;
    std::vector<std::string> pending;
    while (true) {
      skip_ws();
      if (i >= s.size()) throw NoParseError("unterminated bracket");
      if (s[i] == ']') {
        ++i;
        words_to_leaves(pending, kids);
        break;
      }
      if (s[i] == '[') {
        words_to_leaves(pending, kids);
        kids.push_back(bracket());
        continue;
      }
      pending.push_back(word());
    }
    std::string idx = read_index();
    // a one-word NP bracket is a name leaf
    if (c == Cat::NP && kids.size() == 1 && kids[0].is_leaf() &&
        kids[0].cat == Cat::NP && kids[0].index.empty()) {
      SynTree t = kids[0];
      t.index = idx;
      return t;
    }
    SynTree t = node(c, std::move(kids));
    t.index = idx;
    return t;
  }
};

}  // namespace

SynTree read_bracketing(const std::string& text, const Lexicon& lexicon) {
  BracketParser bp{text, lexicon};
  SynTree t = bp.bracket();
  bp.skip_ws();
  if (bp.i != text.size()) throw NoParseError("trailing input after bracketing");
  assign_tags(t);
  return t;
}

}  // namespace compsem
