#include "il/parse.hpp"

#include <cctype>
#include <vector>

namespace il {

namespace {

enum class Tok {
  Var,
  Top,
  Bot,
  Neg,
  And,
  Or,
  Imp,
  Box,
  Dia,
  Rhd,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool starts_with(const std::string &s, std::size_t i, const char *pat) {
  for (std::size_t j = 0; pat[j]; ++j)
    if (i + j >= s.size() || s[i + j] != pat[j]) return false;
  return true;
}

std::vector<Token> lex(const std::string &s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t pos, std::size_t len,
                  std::string text = "") {
    out.push_back({k, std::move(text), pos});
    i = pos + len;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (starts_with(s, i, "->")) { push(Tok::Imp, i, 2); continue; }
    if (starts_with(s, i, "|>")) { push(Tok::Rhd, i, 2); continue; }
    if (starts_with(s, i, "[]")) { push(Tok::Box, i, 2); continue; }
    if (starts_with(s, i, "<>")) { push(Tok::Dia, i, 2); continue; }
    if (starts_with(s, i, "#t")) { push(Tok::Top, i, 2); continue; }
    if (starts_with(s, i, "#f")) { push(Tok::Bot, i, 2); continue; }
    if (starts_with(s, i, "¬")) { push(Tok::Neg, i, 2); continue; }
    if (starts_with(s, i, "∧")) { push(Tok::And, i, 3); continue; }
    if (starts_with(s, i, "∨")) { push(Tok::Or, i, 3); continue; }
    if (starts_with(s, i, "→")) { push(Tok::Imp, i, 3); continue; }
    if (starts_with(s, i, "□")) { push(Tok::Box, i, 3); continue; }
    if (starts_with(s, i, "◇")) { push(Tok::Dia, i, 3); continue; }
    if (starts_with(s, i, "▷")) { push(Tok::Rhd, i, 3); continue; }
    switch (c) {
    case '~': case '!': push(Tok::Neg, i, 1); continue;
    case '&': push(Tok::And, i, 1); continue;
    case '|': push(Tok::Or, i, 1); continue;
    case '(': push(Tok::LParen, i, 1); continue;
    case ')': push(Tok::RParen, i, 1); continue;
    default: break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      std::string word = s.substr(i, j - i);
      if (word == "box") push(Tok::Box, i, 3);
      else if (word == "dia") push(Tok::Dia, i, 3);
      else if (word == "top") push(Tok::Top, i, 3);
      else if (word == "bot") push(Tok::Bot, i, 3);
      else push(Tok::Var, i, j - i, word);
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = imp_level();
    expect(Tok::End, "end of input");
    return f;
  }

private:
  const Token &peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool eat(Tok k) {
    if (peek().kind == k) { ++pos_; return true; }
    return false;
  }
  void expect(Tok k, const char *what) {
    if (!eat(k))
      throw ParseError(std::string("expected ") + what, peek().pos);
  }

  Formula imp_level() {
    Formula l = rhd_level();
    if (eat(Tok::Imp)) return imp(l, imp_level());
    return l;
  }

  Formula rhd_level() {
    Formula l = or_level();
    if (eat(Tok::Rhd)) {
      Formula r = or_level();
      if (peek().kind == Tok::Rhd)
        throw ParseError("|> is non-associative; parenthesize the chain",
                         peek().pos);
      return rhd(l, r);
    }
    return l;
  }

  Formula or_level() {
    Formula l = and_level();
    while (eat(Tok::Or)) l = disj(l, and_level());
    return l;
  }

  Formula and_level() {
    Formula l = unary_level();
    while (eat(Tok::And)) l = conj(l, unary_level());
    return l;
  }

  Formula unary_level() {
    const Token &t = peek();
    switch (t.kind) {
    case Tok::Neg: ++pos_; return neg(unary_level());
    case Tok::Box: ++pos_; return box(unary_level());
    case Tok::Dia: ++pos_; return dia(unary_level());
    case Tok::Var: ++pos_; return var(t.text);
    case Tok::Top: ++pos_; return top();
    case Tok::Bot: ++pos_; return bot();
    case Tok::LParen: {
      ++pos_;
      Formula f = imp_level();
      expect(Tok::RParen, "')'");
      return f;
    }
    default:
      throw ParseError("expected a formula", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Precedence levels for printing; higher binds tighter.
int prec_of(const Formula &f) {
  if (is_dia(f)) return 5;
  switch (f->kind()) {
  case Kind::Imp: return 1;
  case Kind::Rhd: return 2;
  case Kind::Or: return 3;
  case Kind::And: return 4;
  case Kind::Neg: case Kind::Box: return 5;
  default: return 6;
  }
}

void print_rec(const Formula &f, int ctx, std::string &out) {
  int p = prec_of(f);
  bool parens = p < ctx;
  if (parens) out += '(';
  if (is_dia(f)) {
    out += "<>";
    print_rec(dia_operand(f), 5, out);
  } else {
    switch (f->kind()) {
    case Kind::Var: out += f->name(); break;
    case Kind::Top: out += "#t"; break;
    case Kind::Bot: out += "#f"; break;
    case Kind::Neg:
      out += '~';
      print_rec(f->left(), 5, out);
      break;
    case Kind::Box:
      out += "[]";
      print_rec(f->left(), 5, out);
      break;
    case Kind::And:
      print_rec(f->left(), 4, out);
      out += " & ";
      print_rec(f->right(), 5, out);
      break;
    case Kind::Or:
      print_rec(f->left(), 3, out);
      out += " | ";
      print_rec(f->right(), 4, out);
      break;
    case Kind::Rhd:
      print_rec(f->left(), 3, out);
      out += " |> ";
      print_rec(f->right(), 3, out);
      break;
    case Kind::Imp:
      print_rec(f->left(), 2, out);
      out += " -> ";
      print_rec(f->right(), 1, out);
      break;
    }
  }
  if (parens) out += ')';
}

} // namespace

Formula parse(const std::string &text) { return Parser(lex(text)).run(); }

std::string print(const Formula &f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

} // namespace il
