// parser.hpp — text parsers for ELP programs and EHT formulas.
//
// Program grammar (UTF-8, newline-agnostic, '%' starts a line comment):
//
//   program  ::= { rule }
//   rule     ::= head "."                      (fact)
//              | head ":-" body "."
//              | ":-" [ body ] "."             (constraint)
//              | ":-wv" body "."               (world-view construct)
//   head     ::= objlit { "or" objlit }
//   body     ::= element { "," element }
//   element  ::= "not" "not" objlit
//              | "not" modal objlit
//              | "not" objlit
//              | modal objlit
//              | objlit
//   modal    ::= "K" | "M" | "KHAT"
//   objlit   ::= [ "~" ] ident
//   ident    ::= [a-z][A-Za-z0-9_]*            ('or' 'not' 'bot' 'top' reserved)
//
// Formula grammar (precedence loosest to tightest; -> and <-> right-assoc):
//
//   formula  ::= impl { "<->" impl }
//   impl     ::= disj [ "->" impl ]
//   disj     ::= conj { "|" conj }
//   conj     ::= unary { "&" unary }
//   unary    ::= "-" unary | "K" unary | "KHAT" unary | primary
//   primary  ::= ident | "bot" | "top" | "(" formula ")"

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "elp/syntax.hpp"

namespace elp {
namespace detail {

struct Token {
  enum class Kind {
    Ident,    // lowercase identifier
    Modal,    // K M KHAT
    KwOr,
    KwNot,
    KwBot,
    KwTop,
    Tilde,
    Comma,
    Dot,
    Arrow,     // :-
    WvArrow,   // :-wv
    Neg,       // -
    AndOp,     // &
    OrOp,      // |
    ImpliesOp, // ->
    IffOp,     // <->
    LParen,
    RParen,
    End,
  };
  Kind kind;
  std::string text;
  int line = 1, col = 1;
};

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  Lexer(std::string_view src, bool formula_mode) : src_(src), formula_(formula_mode) {
    next();
  }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    next();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.col);
  }

 private:
  void next() {
    skip_ws();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_ = {Token::Kind::End, "", line_, col_};
      return;
    }
    char c = src_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string w = word();
      if (w == "or" && !formula_) tok_.kind = Token::Kind::KwOr;
      else if (w == "not" && !formula_) tok_.kind = Token::Kind::KwNot;
      else if (w == "bot") tok_.kind = Token::Kind::KwBot;
      else if (w == "top") tok_.kind = Token::Kind::KwTop;
      else if (w == "or" || w == "not")
        throw ParseError("reserved word '" + w + "' cannot be used as an atom", tok_.line, tok_.col);
      else tok_.kind = Token::Kind::Ident;
      tok_.text = w;
      return;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::string w = word();
      if (w == "K" || w == "KHAT" || (!formula_ && w == "M")) {
        tok_.kind = Token::Kind::Modal;
        tok_.text = w;
        return;
      }
      throw ParseError("unknown token '" + w + "'" +
                           (formula_ && w == "M" ? " (M is not a formula operator; use -K-)" : ""),
                       tok_.line, tok_.col);
    }
    switch (c) {
      case '~': advance(); tok_ = {Token::Kind::Tilde, "~", tok_.line, tok_.col}; return;
      case ',': advance(); tok_ = {Token::Kind::Comma, ",", tok_.line, tok_.col}; return;
      case '.': advance(); tok_ = {Token::Kind::Dot, ".", tok_.line, tok_.col}; return;
      case '(': advance(); tok_ = {Token::Kind::LParen, "(", tok_.line, tok_.col}; return;
      case ')': advance(); tok_ = {Token::Kind::RParen, ")", tok_.line, tok_.col}; return;
      case '&': advance(); tok_ = {Token::Kind::AndOp, "&", tok_.line, tok_.col}; return;
      case '|': advance(); tok_ = {Token::Kind::OrOp, "|", tok_.line, tok_.col}; return;
      case ':':
        if (at(1) == '-') {
          advance(); advance();
          // ":-wv" only when 'wv' is glued to the arrow and ends there
          if (at(0) == 'w' && at(1) == 'v' && !ident_char(at(2))) {
            advance(); advance();
            tok_ = {Token::Kind::WvArrow, ":-wv", tok_.line, tok_.col};
          } else {
            tok_ = {Token::Kind::Arrow, ":-", tok_.line, tok_.col};
          }
          return;
        }
        throw ParseError("stray ':'", line_, col_);
      case '<':
        if (at(1) == '-' && at(2) == '>') {
          advance(); advance(); advance();
          tok_ = {Token::Kind::IffOp, "<->", tok_.line, tok_.col};
          return;
        }
        throw ParseError("stray '<'", line_, col_);
      case '-':
        if (at(1) == '>') {
          advance(); advance();
          tok_ = {Token::Kind::ImpliesOp, "->", tok_.line, tok_.col};
          return;
        }
        advance();
        tok_ = {Token::Kind::Neg, "-", tok_.line, tok_.col};
        return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }
  }

  std::string word() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
    return std::string(src_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  char at(std::size_t off) const {
    return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  bool formula_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

// ── program parsing ─────────────────────────────────────────────────────────

class ProgramParser {
 public:
  explicit ProgramParser(std::string_view src) : lex_(src, false) {}

  Program parse() {
    Program prog;
    while (lex_.peek().kind != Token::Kind::End) prog.rules.push_back(rule());
    return prog;
  }

 private:
  Rule rule() {
    Rule r;
    if (lex_.peek().kind == Token::Kind::WvArrow) {
      lex_.take();
      r.wv_flag = true;
      r.body = body();
      for (const auto& e : r.body)
        if (!is_subjective(e))
          lex_.fail("world-view construct body must consist of subjective literals");
      expect(Token::Kind::Dot, "'.'");
      return r;
    }
    if (lex_.peek().kind == Token::Kind::Arrow) {
      lex_.take();
      if (lex_.peek().kind != Token::Kind::Dot) r.body = body();
      expect(Token::Kind::Dot, "'.'");
      return r;
    }
    r.head = head();
    if (lex_.peek().kind == Token::Kind::Arrow) {
      lex_.take();
      r.body = body();
    }
    expect(Token::Kind::Dot, "'.'");
    return r;
  }

  std::vector<ObjectiveLiteral> head() {
    std::vector<ObjectiveLiteral> out;
    out.push_back(head_literal());
    while (lex_.peek().kind == Token::Kind::KwOr) {
      lex_.take();
      out.push_back(head_literal());
    }
    return out;
  }

  ObjectiveLiteral head_literal() {
    if (lex_.peek().kind == Token::Kind::Modal)
      lex_.fail("subjective literal in head (heads are objective-only)");
    if (lex_.peek().kind == Token::Kind::KwNot)
      lex_.fail("default negation in head (not in the rule grammar)");
    return objective_literal();
  }

  std::vector<BodyElement> body() {
    std::vector<BodyElement> out;
    out.push_back(element());
    while (lex_.peek().kind == Token::Kind::Comma) {
      lex_.take();
      out.push_back(element());
    }
    return out;
  }

  BodyElement element() {
    int nots = 0;
    while (lex_.peek().kind == Token::Kind::KwNot) {
      lex_.take();
      ++nots;
    }
    if (lex_.peek().kind == Token::Kind::Modal) {
      if (nots > 1) lex_.fail("nested default negation on a subjective literal");
      ExtendedSubjectiveLiteral g;
      g.negated = nots == 1;
      std::string m = lex_.take().text;
      g.subj.modality = m == "K" ? Modality::K : m == "M" ? Modality::M : Modality::KHat;
      g.subj.lit = objective_literal();
      return g;
    }
    if (nots > 2) lex_.fail("default negation deeper than 'not not'");
    ExtendedObjectiveLiteral e;
    e.naf_depth = nots;
    e.lit = objective_literal();
    return e;
  }

  ObjectiveLiteral objective_literal() {
    bool neg = false;
    if (lex_.peek().kind == Token::Kind::Tilde) {
      lex_.take();
      neg = true;
      if (lex_.peek().kind == Token::Kind::Tilde) lex_.fail("double strong negation");
    }
    if (lex_.peek().kind == Token::Kind::KwBot || lex_.peek().kind == Token::Kind::KwTop)
      lex_.fail("reserved word '" + lex_.peek().text + "' cannot be used as an atom");
    if (lex_.peek().kind != Token::Kind::Ident)
      lex_.fail("expected an atom (lowercase identifier), found '" + lex_.peek().text + "'");
    return {lex_.take().text, neg};
  }

  void expect(Token::Kind k, const std::string& what) {
    if (lex_.peek().kind != k)
      lex_.fail("expected " + what + ", found '" +
                (lex_.peek().kind == Token::Kind::End ? "end of input" : lex_.peek().text) + "'");
    lex_.take();
  }

  Lexer lex_;
};

// ── formula parsing ─────────────────────────────────────────────────────────

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view src) : lex_(src, true) {}

  FormulaPtr parse() {
    FormulaPtr f = iff();
    if (lex_.peek().kind != Token::Kind::End)
      lex_.fail("unexpected trailing input '" + lex_.peek().text + "'");
    return f;
  }

 private:
  FormulaPtr iff() {
    FormulaPtr l = impl();
    if (lex_.peek().kind == Token::Kind::IffOp) {
      lex_.take();
      return f_iff(l, iff());
    }
    return l;
  }

  FormulaPtr impl() {
    FormulaPtr l = disj();
    if (lex_.peek().kind == Token::Kind::ImpliesOp) {
      lex_.take();
      return f_implies(l, impl());
    }
    return l;
  }

  FormulaPtr disj() {
    FormulaPtr l = conj();
    while (lex_.peek().kind == Token::Kind::OrOp) {
      lex_.take();
      l = f_or(l, conj());
    }
    return l;
  }

  FormulaPtr conj() {
    FormulaPtr l = unary();
    while (lex_.peek().kind == Token::Kind::AndOp) {
      lex_.take();
      l = f_and(l, unary());
    }
    return l;
  }

  FormulaPtr unary() {
    switch (lex_.peek().kind) {
      case Token::Kind::Neg: lex_.take(); return f_neg(unary());
      case Token::Kind::Modal: {
        std::string m = lex_.take().text;
        return m == "K" ? f_k(unary()) : f_khat(unary());
      }
      default: return primary();
    }
  }

  FormulaPtr primary() {
    switch (lex_.peek().kind) {
      case Token::Kind::KwBot: lex_.take(); return f_bottom();
      case Token::Kind::KwTop: lex_.take(); return f_top();
      case Token::Kind::Ident: return f_atom(lex_.take().text);
      case Token::Kind::LParen: {
        lex_.take();
        FormulaPtr f = iff();
        if (lex_.peek().kind != Token::Kind::RParen) lex_.fail("expected ')'");
        lex_.take();
        return f;
      }
      case Token::Kind::End: lex_.fail("unexpected end of input");
      default: lex_.fail("expected a formula, found '" + lex_.peek().text + "'");
    }
  }

  Lexer lex_;
};

}  // namespace detail

inline Program parse_program(std::string_view text) {
  return detail::ProgramParser(text).parse();
}

inline FormulaPtr parse_eht_formula(std::string_view text) {
  return detail::FormulaParser(text).parse();
}

}  // namespace elp
