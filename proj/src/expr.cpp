#include "pfeq/expr.hpp"

#include <cctype>

namespace pfeq {

namespace {

struct Token {
  enum class Type { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Type type;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    size_t pos = i_;
    if (i_ >= s_.size()) return {Token::Type::End, "", pos};
    char c = s_[i_];
    switch (c) {
      case '+': ++i_; return {Token::Type::Plus, "+", pos};
      case '-': ++i_; return {Token::Type::Minus, "-", pos};
      case '*': ++i_; return {Token::Type::Star, "*", pos};
      case '/': ++i_; return {Token::Type::Slash, "/", pos};
      case '^': ++i_; return {Token::Type::Caret, "^", pos};
      case '(': ++i_; return {Token::Type::LParen, "(", pos};
      case ')': ++i_; return {Token::Type::RParen, ")", pos};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      Token t{Token::Type::Integer, s_.substr(i_, j - i_), pos};
      i_ = j;
      return t;
    }
    // identifiers: ASCII letters/underscore, or the UTF-8 greek aliases
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
        static_cast<unsigned char>(c) >= 0x80) {
      size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' ||
              static_cast<unsigned char>(s_[j]) >= 0x80))
        ++j;
      Token t{Token::Type::Ident, canonical_var(s_.substr(i_, j - i_)), pos};
      i_ = j;
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) { advance(); }

  ExprPtr parse() {
    ExprPtr e = expression();
    expect(Token::Type::End, "trailing input");
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void expect(Token::Type t, const char* what) {
    if (cur_.type != t) throw ParseError(std::string("expected ") + what, cur_.pos);
  }

  static ExprPtr node(Expr::Kind k, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args = std::move(args);
    return e;
  }

  ExprPtr expression() {
    ExprPtr e = term();
    while (cur_.type == Token::Type::Plus || cur_.type == Token::Type::Minus) {
      Expr::Kind k = cur_.type == Token::Type::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      advance();
      e = node(k, {e, term()});
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (cur_.type == Token::Type::Star || cur_.type == Token::Type::Slash) {
      Expr::Kind k = cur_.type == Token::Type::Star ? Expr::Kind::Mul : Expr::Kind::Div;
      advance();
      e = node(k, {e, factor()});
    }
    return e;
  }

  ExprPtr factor() {
    if (cur_.type == Token::Type::Minus) {
      advance();
      return node(Expr::Kind::Neg, {factor()});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (cur_.type != Token::Type::Caret) return base;
    advance();
    bool neg = false;
    bool parens = false;
    if (cur_.type == Token::Type::LParen) {
      parens = true;
      advance();
    }
    if (cur_.type == Token::Type::Minus) {
      neg = true;
      advance();
    }
    expect(Token::Type::Integer, "integer exponent");
    Int e(cur_.text);
    advance();
    if (parens) {
      expect(Token::Type::RParen, "')'");
      advance();
    }
    auto n = std::make_shared<Expr>();
    n->kind = Expr::Kind::Pow;
    n->value = neg ? Int(-e) : e;
    n->args = {base};
    return n;
  }

  ExprPtr atom() {
    switch (cur_.type) {
      case Token::Type::Integer: {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Integer;
        e->value = Int(cur_.text);
        advance();
        return e;
      }
      case Token::Type::Ident: {
        std::string name = cur_.text;
        size_t pos = cur_.pos;
        advance();
        if (name == "sqrt") {
          if (cur_.type != Token::Type::LParen)
            throw ParseError("expected '(' after sqrt", pos);
          advance();
          ExprPtr arg = expression();
          expect(Token::Type::RParen, "')'");
          advance();
          return node(Expr::Kind::Sqrt, {arg});
        }
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Variable;
        e->name = name;
        return e;
      }
      case Token::Type::LParen: {
        advance();
        ExprPtr e = expression();
        expect(Token::Type::RParen, "')'");
        advance();
        return e;
      }
      default:
        throw ParseError("expected integer, identifier or '('", cur_.pos);
    }
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

std::string canonical_var(const std::string& name) {
  if (name == "\xce\xbb") return "l";  // lambda
  if (name == "\xce\xb6") return "z";  // zeta
  return name;
}

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

namespace {

template <class K>
K eval_expr(const ExprPtr& e, const std::string& var, bool allow_var, bool allow_sqrt);

template <class K>
K eval_pow(const ExprPtr& e, const std::string& var, bool allow_var, bool allow_sqrt) {
  K base = eval_expr<K>(e->args[0], var, allow_var, allow_sqrt);
  if (!e->value.fits_sint_p()) throw ParseError("exponent too large", 0);
  long n = e->value.get_si();
  bool invert = n < 0;
  unsigned long u = invert ? -n : n;
  K acc(1), b = base;
  while (u) {
    if (u & 1) acc = K(acc * b);
    if (u >>= 1) b = K(b * b);
  }
  if (invert) {
    if (is_zero(acc)) throw MathError("division by zero (negative power of zero)");
    return K(K(1) / acc);
  }
  return acc;
}

template <class K>
K eval_expr(const ExprPtr& e, const std::string& var, bool allow_var, bool allow_sqrt) {
  switch (e->kind) {
    case Expr::Kind::Integer: return K(Rational(e->value));
    case Expr::Kind::Variable:
      if (!allow_var || e->name != canonical_var(var))
        throw ParseError("unknown identifier '" + e->name + "'", 0);
      if constexpr (std::is_same_v<K, RatFunc>) {
        return RatFunc::variable();
      } else {
        throw ParseError("variable not allowed here", 0);
      }
    case Expr::Kind::Sqrt: {
      if constexpr (std::is_same_v<K, QuadExt>) {
        if (!allow_sqrt) throw ParseError("sqrt not allowed here", 0);
        QuadExt arg = eval_expr<QuadExt>(e->args[0], var, allow_var, allow_sqrt);
        if (!arg.is_rational()) throw ParseError("nested sqrt is not supported", 0);
        Rational r = arg.a;
        // sqrt(p/q) = sqrt(p*q)/q
        return QuadExt(Rational(0), Rational(1, r.get_den()),
                       Int(r.get_num() * r.get_den()).get_si());
      } else {
        throw ParseError("sqrt not allowed here", 0);
      }
    }
    case Expr::Kind::Add:
      return K(eval_expr<K>(e->args[0], var, allow_var, allow_sqrt) +
               eval_expr<K>(e->args[1], var, allow_var, allow_sqrt));
    case Expr::Kind::Sub:
      return K(eval_expr<K>(e->args[0], var, allow_var, allow_sqrt) -
               eval_expr<K>(e->args[1], var, allow_var, allow_sqrt));
    case Expr::Kind::Mul:
      return K(eval_expr<K>(e->args[0], var, allow_var, allow_sqrt) *
               eval_expr<K>(e->args[1], var, allow_var, allow_sqrt));
    case Expr::Kind::Div: {
      K den = eval_expr<K>(e->args[1], var, allow_var, allow_sqrt);
      if (is_zero(den)) throw MathError("division by zero");
      return K(eval_expr<K>(e->args[0], var, allow_var, allow_sqrt) / den);
    }
    case Expr::Kind::Neg: {
      K v = eval_expr<K>(e->args[0], var, allow_var, allow_sqrt);
      return K(-v);
    }
    case Expr::Kind::Pow: return eval_pow<K>(e, var, allow_var, allow_sqrt);
  }
  throw ParseError("malformed expression", 0);
}

}  // namespace

RatFunc expr_to_ratfunc(const ExprPtr& e, const std::string& var) {
  return eval_expr<RatFunc>(e, var, true, false);
}

Rational expr_to_rational(const ExprPtr& e) {
  QuadExt v = eval_expr<QuadExt>(e, "", false, false);
  return v.rational_value();
}

QuadExt expr_to_quadext(const ExprPtr& e) { return eval_expr<QuadExt>(e, "", false, true); }

RatFunc parse_ratfunc(const std::string& text, const std::string& var) {
  return expr_to_ratfunc(parse_expr(text), var);
}

Rational parse_rational(const std::string& text) { return expr_to_rational(parse_expr(text)); }

QuadExt parse_quadext(const std::string& text) { return expr_to_quadext(parse_expr(text)); }

void integer_normalized(const RatFunc& f, Poly& n, Poly& d) {
  Int l(1);
  for (const Rational& c : f.num().coeffs()) l = lcm(l, c.get_den());
  for (const Rational& c : f.den().coeffs()) l = lcm(l, c.get_den());
  Rational scale(l);
  n = f.num() * scale;
  d = f.den() * scale;
  Int g(0);
  for (const Rational& c : n.coeffs()) g = gcd(g, c.get_num());
  for (const Rational& c : d.coeffs()) g = gcd(g, c.get_num());
  if (sgn(g) != 0) {
    Rational gi(g);
    n = n.scaled_by_inverse(gi);
    d = d.scaled_by_inverse(gi);
  }
  if (!d.is_zero_poly() && sgn(d.leading()) < 0) {
    n = -n;
    d = -d;
  }
}

std::string poly_str(const Poly& p, const std::string& var) {
  if (p.is_zero_poly()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p.coeff(i);
    if (is_zero(c)) continue;
    Rational a(abs(c));
    bool neg = sgn(c) < 0;
    std::string term;
    if (i == 0) {
      term = a.get_str();
    } else {
      std::string v = var + (i > 1 ? "^" + std::to_string(i) : "");
      term = (a == 1) ? v : a.get_str() + "*" + v;
    }
    if (first) {
      out = (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string ratfunc_str(const RatFunc& f, const std::string& var) {
  Poly n, d;
  integer_normalized(f, n, d);
  if (d.degree() == 0 && d.coeff(0) == 1) return poly_str(n, var);
  return "(" + poly_str(n, var) + ")/(" + poly_str(d, var) + ")";
}

std::string ratfunc_latex(const RatFunc& f, const std::string& var) {
  Poly n, d;
  integer_normalized(f, n, d);
  auto term_latex = [&](const Poly& p) {
    std::string s = poly_str(p, var);
    std::string out;
    for (char c : s) {
      if (c == '*') continue;  // implicit multiplication in latex
      out += c;
    }
    return out;
  };
  if (d.degree() == 0 && d.coeff(0) == 1) return term_latex(n);
  return "\\frac{" + term_latex(n) + "}{" + term_latex(d) + "}";
}

}  // namespace pfeq
