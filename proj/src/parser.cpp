#include "signfree/expr.hpp"
#include "signfree/units.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace signfree::expr {

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("syntax error at column " + std::to_string(position + 1) + ": " + what), position_(position) {}

EvalError::EvalError(std::size_t position, const std::string& what)
    : std::runtime_error("error at column " + std::to_string(position + 1) + ": " + what), position_(position) {}

namespace {

enum class Tok { Number, Ident, Punct, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_digit = [&](std::size_t k) { return k < src.size() && std::isdigit(static_cast<unsigned char>(src[k])); };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(i)) {
      while (is_digit(i)) ++i;
      if (i < src.size() && src[i] == '.') {
        ++i;
        if (!is_digit(i)) throw ParseError(i, "malformed literal: expected digits after '.'");
        while (is_digit(i)) ++i;
      }
      out.push_back({Tok::Number, std::string(src.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
    } else if (std::string_view("{}[](),;+-*/^").find(ch) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, ch), start});
      ++i;
    } else {
      throw ParseError(start, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

std::optional<Function> function_named(std::string_view s) {
  if (s == "reduce") return Function::Reduce;
  if (s == "norm") return Function::Norm;
  if (s == "normsq") return Function::NormSq;
  if (s == "conj") return Function::Conj;
  if (s == "tocomplex") return Function::ToComplex;
  if (s == "rowsums") return Function::RowSums;
  if (s == "chars") return Function::Chars;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    if (peek().type != Tok::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[idx_]; }
  const Token& next() { return tokens_[idx_++]; }

  bool accept(std::string_view punct) {
    if (peek().type == Tok::Punct && peek().text == punct) {
      ++idx_;
      return true;
    }
    return false;
  }

  void expect(std::string_view punct) {
    if (!accept(punct)) {
      const Token& t = peek();
      throw ParseError(t.pos, "expected '" + std::string(punct) + "' but found " +
                                  (t.type == Tok::End ? std::string("end of input") : "'" + t.text + "'"));
    }
  }

  static NodePtr make(std::size_t pos, auto data) {
    auto n = std::make_unique<Node>();
    n->position = pos;
    n->data = std::move(data);
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (peek().type == Tok::Punct && (peek().text == "+" || peek().text == "-")) {
      const Token op = next();
      lhs = make(op.pos, Binary{op.text[0], std::move(lhs), term()});
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (peek().type == Tok::Punct && (peek().text == "*" || peek().text == "/")) {
      const Token op = next();
      lhs = make(op.pos, Binary{op.text[0], std::move(lhs), unary()});
    }
    return lhs;
  }

  NodePtr unary() {
    if (peek().type == Tok::Punct && peek().text == "-") {
      const std::size_t pos = next().pos;
      return make(pos, Unary{unary()});
    }
    return factor();
  }

  NodePtr factor() {
    NodePtr base = atom();
    if (peek().type == Tok::Punct && peek().text == "^") {
      const std::size_t pos = next().pos;
      const Token& t = next();
      if (t.type != Tok::Number || t.text.find('.') != std::string::npos) {
        throw ParseError(t.pos, "exponent must be a nonnegative integer");
      }
      unsigned long long n = 0;
      for (char ch : t.text) {
        n = n * 10 + static_cast<unsigned>(ch - '0');
        if (n > std::numeric_limits<unsigned>::max()) throw ParseError(t.pos, "exponent too large");
      }
      return make(pos, Power{std::move(base), static_cast<unsigned>(n)});
    }
    return base;
  }

  NodePtr atom() {
    const Token t = next();
    switch (t.type) {
      case Tok::Number:
        return make(t.pos, Number{Rational::parse(t.text)});
      case Tok::Ident:
        return ident(t);
      case Tok::Punct:
        if (t.text == "(") {
          NodePtr inner = expr();
          expect(")");
          return inner;
        }
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
      case Tok::End:
        break;
    }
    throw ParseError(t.pos, "unexpected end of input");
  }

  NodePtr ident(const Token& t) {
    if (peek().type == Tok::Punct && peek().text == "{") {
      if (t.text == "p") return literal(t.pos, Kind::Pair);
      if (t.text == "t") return literal(t.pos, Kind::Triple);
      if (t.text == "m") return literal(t.pos, Kind::Matrix);
      throw ParseError(t.pos, "unknown literal prefix '" + t.text + "'");
    }
    if (auto fn = function_named(t.text)) {
      expect("(");
      NodePtr arg = expr();
      expect(")");
      return make(t.pos, Call{*fn, std::move(arg)});
    }
    if (t.text == "sqrt3" || unit_from_token(t.text)) return make(t.pos, Name{t.text});
    throw ParseError(t.pos, "unknown name '" + t.text + "'");
  }

  NodePtr literal(std::size_t pos, Kind kind) {
    expect("{");
    Literal lit{kind, {}};
    if (kind == Kind::Matrix) {
      for (int r = 0; r < 3; ++r) {
        if (r > 0) expect(";");
        expect("[");
        for (int s = 0; s < 3; ++s) {
          if (s > 0) expect(",");
          lit.parts.push_back(expr());
        }
        expect("]");
      }
    } else {
      const int n = kind == Kind::Pair ? 2 : 3;
      for (int k = 0; k < n; ++k) {
        if (k > 0) expect(",");
        lit.parts.push_back(expr());
      }
    }
    expect("}");
    return make(pos, std::move(lit));
  }

  std::vector<Token> tokens_;
  std::size_t idx_ = 0;
};

}  // namespace

Expression parse(std::string_view text) {
  Parser p(text);
  return Expression{p.parse_all(), std::string(text)};
}

}  // namespace signfree::expr
