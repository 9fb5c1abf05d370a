#include "algd/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <utility>

#include "algd/error.hpp"

namespace algd {

Value Value::of(Poly p) {
  Value v;
  v.kind = Kind::Scalar;
  v.scalar = std::move(p);
  return v;
}

Value Value::of(Multivector m) {
  Value v;
  v.kind = Kind::Multi;
  v.mv = std::move(m);
  return v;
}

Value Value::of(Form f) {
  Value v;
  v.kind = Kind::FormVal;
  v.form = std::move(f);
  return v;
}

namespace {

struct Token {
  enum class Type { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen,
                    RParen, End };
  Type type = Type::End;
  std::int64_t num = 0;
  std::string text;
  int line = 1;
  int col = 1;
};

std::vector<Token> lex(const std::string& text, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    int col = static_cast<int>(i) + 1;
    if (ch == ' ' || ch == '\t') {
      ++i;
      continue;
    }
    Token tok;
    tok.line = line;
    tok.col = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::int64_t value = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        int digit = text[i] - '0';
        if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10)
          throw OverflowError("integer literal does not fit in 64 bits");
        value = value * 10 + digit;
        ++i;
      }
      tok.type = Token::Type::Num;
      tok.num = value;
      out.push_back(tok);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        ++i;
      tok.type = Token::Type::Ident;
      tok.text = text.substr(start, i - start);
      out.push_back(tok);
      continue;
    }
    switch (ch) {
      case '+': tok.type = Token::Type::Plus; break;
      case '-': tok.type = Token::Type::Minus; break;
      case '*': tok.type = Token::Type::Star; break;
      case '/': tok.type = Token::Type::Slash; break;
      case '^': tok.type = Token::Type::Caret; break;
      case '(': tok.type = Token::Type::LParen; break;
      case ')': tok.type = Token::Type::RParen; break;
      default:
        throw SyntaxError(line, col,
                          std::string("unexpected character '") + ch + "'");
    }
    ++i;
    out.push_back(tok);
  }
  Token end;
  end.line = line;
  end.col = static_cast<int>(text.size()) + 1;
  out.push_back(end);
  return out;
}

Multivector promote_mv(const Poly& p, int rank) {
  return Multivector::make(rank, {{IndexTuple{}, p}});
}

Form promote_form(const Poly& p, int rank) {
  return Form::make(rank, {{IndexTuple{}, p}});
}

Value negate(Value v) {
  switch (v.kind) {
    case Value::Kind::Scalar: v.scalar = -v.scalar; break;
    case Value::Kind::Multi: v.mv = -v.mv; break;
    case Value::Kind::FormVal: v.form = -v.form; break;
  }
  return v;
}

Value add(const Value& a, const Value& b, bool subtract, const Token& op) {
  auto mix = [&]() {
    return SyntaxError(op.line, op.col,
                       "cannot combine a multivector with a form");
  };
  if (a.kind == Value::Kind::Scalar && b.kind == Value::Kind::Scalar)
    return Value::of(subtract ? a.scalar - b.scalar : a.scalar + b.scalar);
  if (a.kind == Value::Kind::FormVal || b.kind == Value::Kind::FormVal) {
    if (a.kind == Value::Kind::Multi || b.kind == Value::Kind::Multi)
      throw mix();
    Form fa = a.kind == Value::Kind::Scalar
                  ? promote_form(a.scalar, b.form.rank())
                  : a.form;
    Form fb = b.kind == Value::Kind::Scalar
                  ? promote_form(b.scalar, fa.rank())
                  : b.form;
    return Value::of(subtract ? fa - fb : fa + fb);
  }
  Multivector ma = a.kind == Value::Kind::Scalar
                       ? promote_mv(a.scalar, b.mv.rank())
                       : a.mv;
  Multivector mb = b.kind == Value::Kind::Scalar
                       ? promote_mv(b.scalar, ma.rank())
                       : b.mv;
  return Value::of(subtract ? ma - mb : ma + mb);
}

Value mul(const Value& a, const Value& b, const Token& op) {
  if (a.kind == Value::Kind::Scalar && b.kind == Value::Kind::Scalar)
    return Value::of(a.scalar * b.scalar);
  if (a.kind == Value::Kind::Scalar) {
    if (b.kind == Value::Kind::Multi) return Value::of(b.mv.scaled(a.scalar));
    return Value::of(b.form.scaled(a.scalar));
  }
  if (b.kind == Value::Kind::Scalar) {
    if (a.kind == Value::Kind::Multi) return Value::of(a.mv.scaled(b.scalar));
    return Value::of(a.form.scaled(b.scalar));
  }
  if (a.kind != b.kind)
    throw SyntaxError(op.line, op.col,
                      "cannot combine a multivector with a form");
  if (a.kind == Value::Kind::Multi) return Value::of(wedge(a.mv, b.mv));
  return Value::of(wedge(a.form, b.form));
}

Value power(const Value& a, const Value& b, const Token& op) {
  if (a.kind == Value::Kind::Scalar && b.kind == Value::Kind::Scalar) {
    if (!b.scalar.is_constant())
      throw SyntaxError(op.line, op.col, "exponent must be an integer constant");
    Rational e = b.scalar.constant_value();
    if (e.den() != 1 ||
        e.num() > std::numeric_limits<int>::max() ||
        e.num() < std::numeric_limits<int>::min())
      throw SyntaxError(op.line, op.col, "exponent must be an integer constant");
    return Value::of(a.scalar.pow(static_cast<int>(e.num())));
  }
  return mul(a, b, op);
}

class Parser {
public:
  Parser(std::vector<Token> tokens, const SymbolTable& syms)
      : tokens_(std::move(tokens)), syms_(syms) {}

  Value run() {
    Value v = parse_expr();
    const Token& t = peek();
    if (t.type != Token::Type::End)
      throw SyntaxError(t.line, t.col, "unexpected trailing input");
    return v;
  }

private:
  std::vector<Token> tokens_;
  const SymbolTable& syms_;
  std::size_t pos_ = 0;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  Value parse_expr() {
    Value v = parse_term();
    while (peek().type == Token::Type::Plus ||
           peek().type == Token::Type::Minus) {
      Token op = take();
      Value rhs = parse_term();
      v = add(v, rhs, op.type == Token::Type::Minus, op);
    }
    return v;
  }

  Value parse_term() {
    Value v = parse_unary();
    while (peek().type == Token::Type::Star) {
      Token op = take();
      Value rhs = parse_unary();
      v = mul(v, rhs, op);
    }
    return v;
  }

  Value parse_unary() {
    if (peek().type == Token::Type::Minus) {
      take();
      return negate(parse_unary());
    }
    return parse_power();
  }

  Value parse_power() {
    Value v = parse_primary();
    while (peek().type == Token::Type::Caret) {
      Token op = take();
      Value rhs = parse_primary();
      v = power(v, rhs, op);
    }
    return v;
  }

  Value parse_primary() {
    const Token& t = peek();
    if (t.type == Token::Type::Num) {
      Token first = take();
      if (peek().type == Token::Type::Slash) {
        Token slash = take();
        if (peek().type != Token::Type::Num)
          throw SyntaxError(slash.line, slash.col,
                            "expected a denominator after '/'");
        Token second = take();
        if (second.num == 0)
          throw DivisionByZeroError("rational literal with denominator 0");
        return Value::of(Poly(Rational(first.num, second.num)));
      }
      return Value::of(Poly(Rational(first.num)));
    }
    if (t.type == Token::Type::Ident) {
      Token id = take();
      return resolve(id);
    }
    if (t.type == Token::Type::LParen) {
      take();
      Value v = parse_expr();
      const Token& close = peek();
      if (close.type != Token::Type::RParen)
        throw SyntaxError(close.line, close.col, "expected ')'");
      take();
      return v;
    }
    throw SyntaxError(t.line, t.col, "expected an expression");
  }

  Value resolve(const Token& id) {
    const std::string& name = id.text;
    if (std::find(syms_.scalars.begin(), syms_.scalars.end(), name) !=
        syms_.scalars.end())
      return Value::of(Poly::variable(name));
    auto bit = std::find(syms_.basis.begin(), syms_.basis.end(), name);
    if (bit != syms_.basis.end()) {
      int r = static_cast<int>(bit - syms_.basis.begin()) + 1;
      int rank = static_cast<int>(syms_.basis.size());
      return Value::of(Multivector::make(rank, {{IndexTuple{r}, Poly(1)}}));
    }
    if (name.size() > 3 && name.compare(0, 3, "eps") == 0 &&
        std::all_of(name.begin() + 3, name.end(), [](unsigned char c) {
          return std::isdigit(c) != 0;
        })) {
      int r = 0;
      for (std::size_t i = 3; i < name.size(); ++i) {
        if (r > 1000) break;
        r = r * 10 + (name[i] - '0');
      }
      if (r >= 1 && r <= syms_.rank)
        return Value::of(Form::make(syms_.rank, {{IndexTuple{r}, Poly(1)}}));
    }
    auto it = syms_.bindings.find(name);
    if (it != syms_.bindings.end()) return it->second;
    throw UnknownIdentifierError(id.line, id.col, name,
                                 "unknown identifier " + name);
  }
};

}  // namespace

Value eval_expression(const std::string& text, const SymbolTable& syms,
                      int line) {
  return Parser(lex(text, line), syms).run();
}

Poly expect_scalar(const Value& v) {
  if (v.kind == Value::Kind::Scalar) return v.scalar;
  if (v.kind == Value::Kind::Multi && v.mv.is_homogeneous(0))
    return v.mv.component({});
  if (v.kind == Value::Kind::FormVal && v.form.is_homogeneous(0))
    return v.form.component({});
  throw DegreeError("expected a scalar expression");
}

Multivector expect_multivector(const Value& v, int rank) {
  if (v.kind == Value::Kind::Scalar) return promote_mv(v.scalar, rank);
  if (v.kind == Value::Kind::FormVal) {
    if (v.form.is_homogeneous(0)) return promote_mv(v.form.component({}), rank);
    throw DegreeError("expected a multivector, found a form");
  }
  if (v.mv.rank() != rank && !v.mv.is_zero())
    throw RankMismatchError("multivector rank does not match this chart");
  if (v.mv.is_zero()) return Multivector::make(rank, {});
  return v.mv;
}

Form expect_form(const Value& v, int rank) {
  if (v.kind == Value::Kind::Scalar) return promote_form(v.scalar, rank);
  if (v.kind == Value::Kind::Multi) {
    if (v.mv.is_homogeneous(0)) return promote_form(v.mv.component({}), rank);
    throw DegreeError("expected a form, found a multivector");
  }
  if (v.form.rank() != rank && !v.form.is_zero())
    throw RankMismatchError("form rank does not match this chart");
  if (v.form.is_zero()) return Form::make(rank, {});
  return v.form;
}

Section expect_section(const Value& v, int rank) {
  Multivector mv = expect_multivector(v, rank);
  if (!mv.is_homogeneous(1))
    throw DegreeError("expected a degree-1 section expression");
  return Section(mv);
}

}  // namespace algd
