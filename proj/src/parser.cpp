#include "ffgcd/parser.hpp"

#include <cctype>

namespace ffgcd {

namespace {

struct Token {
  enum Kind { Number, Ident, Op, End } kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  void expect(const std::string& op) {
    if (tok_.kind != Token::Op || tok_.text != op)
      throw ParseError("expected '" + op + "' near '" + tok_.text + "'");
    advance();
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::End, ""};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Token::Number, s_.substr(i_, j - i_)};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Token::Ident, s_.substr(i_, j - i_)};
      i_ = j;
      return;
    }
    static const std::string ops = "+-*/^();,";
    if (ops.find(c) == std::string::npos)
      throw ParseError(std::string("unexpected character '") + c + "'");
    tok_ = {Token::Op, std::string(1, c)};
    ++i_;
  }

  const std::string& s_;
  size_t i_ = 0;
  Token tok_;
};

// Evaluates directly into MvPoly; division is only defined by K-constants and
// negative powers only of K-constants.
class ExprParser {
 public:
  ExprParser(Lexer& lx, size_t nvars, bool allow_T) : lx_(lx), n_(nvars), allow_T_(allow_T) {}

  MvPoly expr() {
    MvPoly acc = term();
    while (lx_.peek().kind == Token::Op && (lx_.peek().text == "+" || lx_.peek().text == "-")) {
      std::string op = lx_.take().text;
      MvPoly rhs = term();
      acc = op == "+" ? acc + rhs : acc - rhs;
    }
    return acc;
  }

 private:
  size_t arity() const { return n_ + (allow_T_ ? 1 : 0); }

  MvPoly term() {
    MvPoly acc = factor();
    while (lx_.peek().kind == Token::Op && (lx_.peek().text == "*" || lx_.peek().text == "/")) {
      std::string op = lx_.take().text;
      MvPoly rhs = factor();
      if (op == "*") {
        acc = acc * rhs;
      } else {
        if (!rhs.is_constant()) throw ParseError("division by a non-constant polynomial");
        K d = rhs.constant_value();
        if (d.is_zero()) throw ParseError("division by zero");
        acc = acc.scaled(d.inverse());
      }
    }
    return acc;
  }

  MvPoly factor() {
    if (lx_.peek().kind == Token::Op && lx_.peek().text == "-") {
      lx_.take();
      return -factor();
    }
    MvPoly base = atom();
    if (lx_.peek().kind == Token::Op && lx_.peek().text == "^") {
      lx_.take();
      long e = exponent();
      if (e >= 0) return base.pow(static_cast<unsigned>(e));
      if (!base.is_constant()) throw ParseError("negative power of a non-constant polynomial");
      K b = base.constant_value();
      if (b.is_zero()) throw ParseError("negative power of zero");
      return MvPoly(arity(), b.pow(e));
    }
    return base;
  }

  long exponent() {
    bool neg = false;
    bool paren = false;
    if (lx_.peek().kind == Token::Op && lx_.peek().text == "(") {
      lx_.take();
      paren = true;
    }
    if (lx_.peek().kind == Token::Op && lx_.peek().text == "-") {
      lx_.take();
      neg = true;
    }
    if (lx_.peek().kind != Token::Number) throw ParseError("expected integer exponent");
    long v = std::stol(lx_.take().text);
    if (paren) lx_.expect(")");
    return neg ? -v : v;
  }

  MvPoly atom() {
    Token t = lx_.take();
    if (t.kind == Token::Number) {
      Rat q;
      if (q.set_str(t.text, 10) != 0) throw ParseError("bad number '" + t.text + "'");
      return MvPoly(arity(), K(q));
    }
    if (t.kind == Token::Ident) {
      if (t.text == "t") return MvPoly(arity(), K::t());
      if (allow_T_ && t.text == "T") return MvPoly::variable(arity(), 0);
      if (t.text.size() >= 2 && t.text[0] == 'x') {
        size_t idx = 0;
        try {
          idx = std::stoul(t.text.substr(1));
        } catch (...) {
          throw ParseError("unknown symbol '" + t.text + "'");
        }
        if (idx < 1 || idx > n_)
          throw ParseError("variable '" + t.text + "' out of range (n = " + std::to_string(n_) +
                           ")");
        return MvPoly::variable(arity(), (allow_T_ ? 1 : 0) + idx - 1);
      }
      throw ParseError("unknown symbol '" + t.text + "'");
    }
    if (t.kind == Token::Op && t.text == "(") {
      MvPoly inner = expr();
      lx_.expect(")");
      return inner;
    }
    throw ParseError("unexpected token '" + t.text + "'");
  }

  Lexer& lx_;
  size_t n_;
  bool allow_T_;
};

void expect_end(Lexer& lx) {
  if (lx.peek().kind != Token::End) throw ParseError("trailing input near '" + lx.peek().text + "'");
}

}  // namespace

K parse_element(const std::string& s) {
  Lexer lx(s);
  MvPoly p = ExprParser(lx, 0, false).expr();
  expect_end(lx);
  return p.constant_value();
}

MvPoly parse_mvpoly(const std::string& s, size_t nvars) {
  Lexer lx(s);
  MvPoly p = ExprParser(lx, nvars, false).expr();
  expect_end(lx);
  return p;
}

MvPoly parse_T_poly(const std::string& s) {
  Lexer lx(s);
  MvPoly p = ExprParser(lx, 0, true).expr();
  expect_end(lx);
  return p;
}

ClosedPoint parse_place(const std::string& s) {
  {
    Lexer probe(s);
    if (probe.peek().kind == Token::Ident && probe.peek().text == "inf")
      return ClosedPoint::infinity();
  }
  K e = parse_element(s);
  if (e.is_zero() || !e.den().is_one())
    throw ParseError("place must be 'inf' or a monic irreducible polynomial: " + s);
  return ClosedPoint::finite(e.num());
}

PlaceSet parse_places(const std::string& s) {
  std::vector<ClosedPoint> pts;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      std::string piece = s.substr(start, i - start);
      if (piece.find_first_not_of(" \t") != std::string::npos) pts.push_back(parse_place(piece));
      start = i + 1;
    }
  }
  return PlaceSet(std::move(pts));
}

std::vector<std::pair<MvPoly, K>> parse_exp_pairs(const std::string& s) {
  std::vector<std::pair<MvPoly, K>> out;
  Lexer lx(s);
  while (lx.peek().kind != Token::End) {
    lx.expect("(");
    // scan the raw text of B up to the top-level ';'
    MvPoly B = ExprParser(lx, 0, true).expr();
    lx.expect(";");
    MvPoly beta = ExprParser(lx, 0, false).expr();
    lx.expect(")");
    K b = beta.constant_value();
    if (b.is_zero()) throw ParseError("exponential polynomial: beta must be nonzero");
    // B parsed with arity 1 (T), beta with arity 0
    out.emplace_back(B, b);
    if (lx.peek().kind == Token::Op && lx.peek().text == ",") lx.take();
  }
  return out;
}

}  // namespace ffgcd
