#include "pathalg/expression.hpp"

#include <cctype>

#include "pathalg/error.hpp"

namespace pathalg {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

class Parser {
 public:
  Parser(const ContextPtr& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  AlgebraElement parse() {
    AlgebraElement e = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool factor_ahead() {
    char c = peek();
    return c == '(' || ident_start(c);
  }

  AlgebraElement expr() {
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    AlgebraElement acc = term();
    if (negate) acc = -acc;
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      AlgebraElement t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  AlgebraElement term() {
    Scalar coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      has_coeff = true;
      if (peek() == '*') ++pos_;
    }
    if (!factor_ahead()) fail(has_coeff ? "expected a factor after the coefficient" : "expected a term");
    AlgebraElement acc = factor();
    while (factor_ahead()) acc = multiply(acc, factor());
    if (has_coeff) acc *= coeff;
    return acc;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Scalar rational() {
    skip_ws();
    mpz_class num(digits());
    mpz_class den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t at = pos_;
      den = mpz_class(digits());
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
    }
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }

  AlgebraElement factor() {
    if (peek() == '(') {
      ++pos_;
      AlgebraElement inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    std::string id(text_.substr(start, pos_ - start));
    bool starred = false;
    if (peek() == '*') {
      starred = true;
      ++pos_;
    }
    const Graph& g = ctx_->graph();
    if (auto v = g.find_vertex(id)) return AlgebraElement::vertex(ctx_, *v);
    if (auto e = g.find_edge(id)) {
      if (starred) {
        if (!ctx_->allows_star())
          throw Error(ErrorCode::StarInPathMode, "'" + id + "*' is not available in the path algebra");
        return AlgebraElement::ghost(ctx_, *e);
      }
      return AlgebraElement::edge(ctx_, *e);
    }
    throw Error(ErrorCode::UnknownIdentifier, "'" + id + "' at column " + std::to_string(start + 1) +
                                                  " is neither a vertex nor an edge");
  }

  const ContextPtr& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_expression(const ContextPtr& ctx, std::string_view text) {
  return Parser(ctx, text).parse();
}

}  // namespace pathalg
