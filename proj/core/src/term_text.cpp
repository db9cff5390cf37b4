#include "compsem/term_text.hpp"

#include <cctype>
#include <set>
#include <vector>

namespace compsem {

// -------------------------------------------------------------------- printer

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '*';
}

void print_impl(const Term& t, std::set<std::string>& bound, std::string& out) {
  switch (t.kind()) {
    case TermKind::Var:
      out += t.name();
      if (!bound.count(t.name())) {
        out += ':';
        out += t.var_type().to_string();
      }
      return;
    case TermKind::Const:
      out += t.name();
      return;
    case TermKind::App:
      out += '(';
      print_impl(t.fn(), bound, out);
      out += ' ';
      print_impl(t.arg(), bound, out);
      out += ')';
      return;
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Implies:
    case TermKind::Greater: {
      const char* op = t.kind() == TermKind::And       ? " & "
                       : t.kind() == TermKind::Or      ? " | "
                       : t.kind() == TermKind::Implies ? " -> "
                                                       : " > ";
      out += '(';
      print_impl(t.lhs(), bound, out);
      out += op;
      print_impl(t.rhs(), bound, out);
      out += ')';
      return;
    }
    case TermKind::Not:
      out += "(~ ";
      print_impl(t.operand(), bound, out);
      out += ')';
      return;
    default:
      break;
  }
  // binders
  const char* kw = nullptr;
  switch (t.kind()) {
    case TermKind::Lam: kw = "lam"; break;
    case TermKind::Forall: kw = "forall"; break;
    case TermKind::Exists: kw = "exists"; break;
    case TermKind::Iota: kw = "iota"; break;
    case TermKind::Card:
      kw = t.card_kind() == CardKind::AtLeast ? "atleast" : "atmost";
      break;
    default:
      throw std::logic_error("print_term: unknown kind");
  }
  out += '(';
  out += kw;
  if (t.kind() == TermKind::Card) {
    out += ' ';
    out += std::to_string(t.card_n());
  }
  out += ' ';
  out += t.bound_name();
  out += ':';
  out += t.var_type().to_string();
  out += " . ";
  bool already = bound.count(t.bound_name()) > 0;
  bound.insert(t.bound_name());
  print_impl(t.body(), bound, out);
  if (!already) bound.erase(t.bound_name());
  out += ')';
}

}  // namespace

std::string print_term(const Term& term) {
  std::string out;
  std::set<std::string> bound;
  print_impl(term, bound, out);
  return out;
}

std::string print_type(const SemType& type) { return type.to_string(); }

// --------------------------------------------------------------------- lexer

namespace {

enum class TokType { LParen, RParen, Dot, Colon, Amp, Bar, Arrow, Tilde, Gt, Name, Number, End };

struct Tok {
  TokType type;
  std::string text;
  unsigned num = 0;
  size_t pos = 0;
};

std::vector<Tok> lex(std::string_view s) {
  std::vector<Tok> toks;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    size_t at = i;
    switch (c) {
      case '(': toks.push_back({TokType::LParen, "(", 0, at}); ++i; continue;
      case ')': toks.push_back({TokType::RParen, ")", 0, at}); ++i; continue;
      case '.': toks.push_back({TokType::Dot, ".", 0, at}); ++i; continue;
      case ':': toks.push_back({TokType::Colon, ":", 0, at}); ++i; continue;
      case '&': toks.push_back({TokType::Amp, "&", 0, at}); ++i; continue;
      case '|': toks.push_back({TokType::Bar, "|", 0, at}); ++i; continue;
      case '~': toks.push_back({TokType::Tilde, "~", 0, at}); ++i; continue;
      case '>': toks.push_back({TokType::Gt, ">", 0, at}); ++i; continue;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          toks.push_back({TokType::Arrow, "->", 0, at});
          i += 2;
          continue;
        }
        throw TermSyntaxError("stray '-'", at);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned n = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        n = n * 10 + static_cast<unsigned>(s[i] - '0');
        ++i;
      }
      toks.push_back({TokType::Number, std::string(s.substr(at, i - at)), n, at});
      continue;
    }
    if (name_start(c)) {
      while (i < s.size() && name_char(s[i])) ++i;
      toks.push_back({TokType::Name, std::string(s.substr(at, i - at)), 0, at});
      continue;
    }
    throw TermSyntaxError(std::string("unexpected character '") + c + "'", at);
  }
  toks.push_back({TokType::End, "", 0, s.size()});
  return toks;
}

bool is_keyword(const std::string& n) {
  return n == "lam" || n == "forall" || n == "exists" || n == "atleast" ||
         n == "atmost" || n == "iota";
}

// ------------------------------------------------------------------- parser

class Parser {
 public:
  Parser(std::vector<Tok> toks, const Signature& sig)
      : toks_(std::move(toks)), sig_(sig) {}

  Term parse_term() {
    Term t = expr();
    expect(TokType::End, "end of input");
    return t;
  }

  SemType parse_only_type() {
    SemType ty = type();
    expect(TokType::End, "end of input");
    return ty;
  }

 private:
  const Tok& peek() const { return toks_[i_]; }
  Tok next() { return toks_[i_++]; }
  void expect(TokType t, const char* what) {
    if (peek().type != t)
      throw TermSyntaxError(std::string("expected ") + what, peek().pos);
    next();
  }

  SemType type_prim() {
    if (peek().type == TokType::LParen) {
      next();
      SemType ty = type();
      expect(TokType::RParen, ")");
      return ty;
    }
    if (peek().type == TokType::Name) {
      Tok tk = next();
      if (tk.text == "e") return SemType::e();
      if (tk.text == "d") return SemType::d();
      if (tk.text == "t") return SemType::t();
      throw TermSyntaxError("unknown base type '" + tk.text + "'", tk.pos);
    }
    throw TermSyntaxError("expected a type", peek().pos);
  }

  SemType type() {
    SemType lhs = type_prim();
    if (peek().type == TokType::Arrow) {
      next();
      return SemType::arrow(lhs, type());
    }
    return lhs;
  }

  Term expr() { return implies_level(); }

  Term implies_level() {
    Term l = or_level();
    if (peek().type == TokType::Arrow) {
      next();
      return Term::implies(std::move(l), implies_level());
    }
    return l;
  }

  Term or_level() {
    Term l = and_level();
    while (peek().type == TokType::Bar) {
      next();
      l = Term::disj(std::move(l), and_level());
    }
    return l;
  }

  Term and_level() {
    Term l = cmp_level();
    while (peek().type == TokType::Amp) {
      next();
      l = Term::conj(std::move(l), cmp_level());
    }
    return l;
  }

  Term cmp_level() {
    Term l = unary_level();
    if (peek().type == TokType::Gt) {
      next();
      return Term::greater(std::move(l), unary_level());
    }
    return l;
  }

  Term unary_level() {
    if (peek().type == TokType::Tilde) {
      next();
      return Term::neg(unary_level());
    }
    return app_level();
  }

  Term app_level() {
    Term t = primary();
    while (peek().type == TokType::LParen ||
           (peek().type == TokType::Name && !is_keyword(peek().text))) {
      t = Term::app(std::move(t), primary());
    }
    return t;
  }

  Term binder(const Tok& kw) {
    unsigned n = 0;
    CardKind ck = CardKind::AtLeast;
    bool is_card = kw.text == "atleast" || kw.text == "atmost";
    if (is_card) {
      if (peek().type != TokType::Number)
        throw TermSyntaxError("expected a count after '" + kw.text + "'", peek().pos);
      n = next().num;
      ck = kw.text == "atleast" ? CardKind::AtLeast : CardKind::AtMost;
    }
    if (peek().type != TokType::Name)
      throw TermSyntaxError("expected a variable name", peek().pos);
    Tok nm = next();
    expect(TokType::Colon, "':'");
    SemType ty = type();
    expect(TokType::Dot, "'.'");
    scope_.emplace_back(nm.text, ty);
    Term body = expr();
    scope_.pop_back();
    Term v = Term::var(nm.text, ty);
    if (kw.text == "lam") return Term::lam(v, std::move(body));
    if (kw.text == "forall") return Term::forall(v, std::move(body));
    if (kw.text == "exists") return Term::exists(v, std::move(body));
    if (kw.text == "iota") return Term::iota(v, std::move(body));
    return Term::card(ck, n, v, std::move(body));
  }

  Term primary() {
    if (peek().type == TokType::LParen) {
      next();
      Term t = expr();
      expect(TokType::RParen, "')'");
      return t;
    }
    if (peek().type == TokType::Name) {
      Tok nm = next();
      if (is_keyword(nm.text)) return binder(nm);
      if (peek().type == TokType::Colon) {
        next();
        SemType ty = type();
        return Term::var(nm.text, ty);
      }
      for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
        if (it->first == nm.text) return Term::var(nm.text, it->second);
      auto sit = sig_.find(nm.text);
      if (sit != sig_.end()) return Term::constant(nm.text, sit->second);
      throw TermSyntaxError("unknown name '" + nm.text + "'", nm.pos);
    }
    throw TermSyntaxError("expected a term", peek().pos);
  }

  std::vector<Tok> toks_;
  size_t i_ = 0;
  const Signature& sig_;
  std::vector<std::pair<std::string, SemType>> scope_;
};

}  // namespace

Term read_term(std::string_view text, const Signature& constants) {
  Parser p(lex(text), constants);
  return p.parse_term();
}

SemType read_type(std::string_view text) {
  static const Signature empty{};
  Parser p(lex(text), empty);
  return p.parse_only_type();
}

}  // namespace compsem
