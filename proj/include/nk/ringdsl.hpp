#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nk/rational.hpp"

#include "nk/algebra.hpp"

namespace nk {

// Parse failure in the ring description language, with the byte offset of the
// offending token.
struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(size_t p, const std::string& msg)
      : std::runtime_error("parse error at position " + std::to_string(p) + ": " + msg), pos(p) {}
};

// Result of parsing `ring Q[x,y] / (y^2 - x^3) weights x=2 y=3`.  The
// quotient and weights clauses are optional.
struct RingDescription {
  std::vector<std::string> vars;
  std::vector<Poly<Rat>> relations;
  std::vector<int> weights;  // one per variable, or empty when unspecified
};

namespace ringdsl_detail {

struct Token {
  enum Kind { Ident, Int, Sym, End } kind;
  std::string text;
  size_t pos;
};

inline std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isalpha(c) || s[i] == '_') {
      size_t j = i + 1;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), i});
      i = j;
    } else if (std::isdigit(c)) {
      size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Int, s.substr(i, j - i), i});
      i = j;
    } else if (std::string("[]()+-*^/=,").find(s[i]) != std::string::npos) {
      out.push_back({Token::Sym, std::string(1, s[i]), i});
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + s[i] + "'");
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  RingDescription run() {
    Token kw = next();
    if (!(kw.kind == Token::Ident && kw.text == "ring"))
      throw ParseError(kw.pos, "expected 'ring'");
    Token f = next();
    if (!(f.kind == Token::Ident && f.text == "Q"))
      throw ParseError(f.pos, "only the coefficient field Q is supported");
    expect_sym("[");
    for (;;) {
      Token v = next();
      if (v.kind != Token::Ident) throw ParseError(v.pos, "expected a variable name");
      if (std::find(D_.vars.begin(), D_.vars.end(), v.text) != D_.vars.end())
        throw ParseError(v.pos, "duplicate variable '" + v.text + "'");
      D_.vars.push_back(v.text);
      Token t = next();
      if (t.kind == Token::Sym && t.text == ",") continue;
      if (t.kind == Token::Sym && t.text == "]") break;
      throw ParseError(t.pos, "expected ',' or ']' in the variable list");
    }
    if (at_sym("/")) {
      next();
      expect_sym("(");
      for (;;) {
        D_.relations.push_back(expr());
        Token t = next();
        if (t.kind == Token::Sym && t.text == ",") continue;
        if (t.kind == Token::Sym && t.text == ")") break;
        throw ParseError(t.pos, "expected ',' or ')' in the relation list");
      }
    }
    if (peek().kind == Token::Ident && peek().text == "weights") {
      Token kw2 = next();
      std::vector<int> w(D_.vars.size(), -1);
      bool any = false;
      while (peek().kind == Token::Ident) {
        Token v = next();
        auto it = std::find(D_.vars.begin(), D_.vars.end(), v.text);
        if (it == D_.vars.end())
          throw ParseError(v.pos, "unknown variable '" + v.text + "' in weights");
        expect_sym("=");
        Token n = next();
        if (n.kind != Token::Int) throw ParseError(n.pos, "expected an integer weight");
        size_t idx = static_cast<size_t>(it - D_.vars.begin());
        if (w[idx] != -1) throw ParseError(v.pos, "duplicate weight for '" + v.text + "'");
        w[idx] = small_int(n);
        any = true;
      }
      if (!any) throw ParseError(kw2.pos, "expected at least one weight assignment");
      for (size_t i = 0; i < w.size(); ++i)
        if (w[i] == -1)
          throw ParseError(kw2.pos, "missing weight for variable '" + D_.vars[i] + "'");
      D_.weights.assign(w.begin(), w.end());
    }
    Token end = next();
    if (end.kind != Token::End) throw ParseError(end.pos, "unexpected trailing input");
    return std::move(D_);
  }

 private:
  std::vector<Token> toks_;
  size_t k_ = 0;
  RingDescription D_;

  const Token& peek() const { return toks_[k_]; }
  Token next() {
    Token t = toks_[k_];
    if (t.kind != Token::End) ++k_;
    return t;
  }
  bool at_sym(const std::string& s) const {
    return peek().kind == Token::Sym && peek().text == s;
  }
  void expect_sym(const std::string& s) {
    Token t = next();
    if (!(t.kind == Token::Sym && t.text == s))
      throw ParseError(t.pos, "expected '" + s + "'");
  }
  int small_int(const Token& t) {
    if (t.text.size() > 9) throw ParseError(t.pos, "integer too large");
    return std::stoi(t.text);
  }
  int nv() const { return static_cast<int>(D_.vars.size()); }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  Poly<Rat> expr() {
    bool neg = false;
    if (at_sym("+") || at_sym("-")) neg = next().text == "-";
    Poly<Rat> acc = term();
    if (neg) acc = Rat(-1) * acc;
    while (at_sym("+") || at_sym("-")) {
      bool minus = next().text == "-";
      Poly<Rat> t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  // term := factor (['*'] factor)*   with implicit multiplication
  Poly<Rat> term() {
    Poly<Rat> acc = factor();
    for (;;) {
      if (at_sym("*")) {
        next();
        acc = acc * factor();
      } else if (starts_factor(peek())) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  static bool starts_factor(const Token& t) {
    return t.kind == Token::Ident || t.kind == Token::Int ||
           (t.kind == Token::Sym && t.text == "(");
  }

  // factor := atom ['^' integer]
  Poly<Rat> factor() {
    Poly<Rat> base = atom();
    if (at_sym("^")) {
      next();
      Token e = next();
      if (e.kind != Token::Int)
        throw ParseError(e.pos, "expected a nonnegative integer exponent");
      base = base.pow(small_int(e));
    }
    return base;
  }

  Poly<Rat> atom() {
    Token t = next();
    if (t.kind == Token::Int) return Poly<Rat>::constant(nv(), Rat(t.text));
    if (t.kind == Token::Ident) {
      auto it = std::find(D_.vars.begin(), D_.vars.end(), t.text);
      if (it == D_.vars.end()) throw ParseError(t.pos, "unknown variable '" + t.text + "'");
      return Poly<Rat>::variable(nv(), static_cast<int>(it - D_.vars.begin()));
    }
    if (t.kind == Token::Sym && t.text == "(") {
      Poly<Rat> e = expr();
      Token c = next();
      if (!(c.kind == Token::Sym && c.text == ")")) throw ParseError(c.pos, "expected ')'");
      return e;
    }
    if (t.kind == Token::Sym && t.text == "-") return Rat(-1) * factor();
    throw ParseError(t.pos, "expected a number, a variable, or '('");
  }
};

}  // namespace ringdsl_detail

inline RingDescription parse_ring(const std::string& src) {
  return ringdsl_detail::Parser(src).run();
}

// Parse and build the algebra in one step.  Algebra construction can throw
// std::invalid_argument on top of ParseError, e.g. for relations that are not
// homogeneous for the declared weights.
inline std::shared_ptr<Algebra<Rat>> ring_from_text(const std::string& src) {
  RingDescription D = parse_ring(src);
  return std::make_shared<Algebra<Rat>>(D.vars, D.relations, MonomialOrder::degrevlex(),
                                        D.weights);
}

}  // namespace nk
