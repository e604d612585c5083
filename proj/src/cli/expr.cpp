#include "sliceq/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "sliceq/errors.hpp"

namespace sliceq {

ExprPtr Expr::literal(const Quaternion& v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Literal;
  e->value = v;
  return e;
}

ExprPtr Expr::variable() {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Variable;
  return e;
}

ExprPtr Expr::unary(Kind kind, ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(operand);
  return e;
}

ExprPtr Expr::binary(Kind kind, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr Expr::power(ExprPtr base, int exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pow;
  e->lhs = std::move(base);
  e->exponent = exponent;
  return e;
}

bool equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Literal: return a.value == b.value;
    case Expr::Kind::Variable: return true;
    case Expr::Kind::Pow: return a.exponent == b.exponent && equal(*a.lhs, *b.lhs);
    case Expr::Kind::Neg:
    case Expr::Kind::Conj:
    case Expr::Kind::Sym:
    case Expr::Kind::Inv: return equal(*a.lhs, *b.lhs);
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
  return false;
}

namespace {

constexpr int kMaxExponent = 256;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ExprPtr parse() {
    skip();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "empty expression");
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(pos_, "unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    if (pos_ >= s_.size()) throw SyntaxError(pos_, what + ", found end of input");
    throw SyntaxError(pos_, what + ", found '" + std::string(1, s_[pos_]) + "'");
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (accept('+')) {
        e = Expr::binary(Expr::Kind::Add, e, term());
      } else if (accept('-')) {
        e = Expr::binary(Expr::Kind::Sub, e, term());
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    while (accept('*')) e = Expr::binary(Expr::Kind::Mul, e, unary());
    return e;
  }

  ExprPtr unary() {
    if (accept('-')) return Expr::unary(Expr::Kind::Neg, unary());
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip();
    const std::size_t start = pos_;
    int n = 0;
    const auto res = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), n);
    if (res.ec == std::errc::result_out_of_range) throw SyntaxError(start, "exponent out of range");
    if (res.ec != std::errc() || s_[pos_] == '+' || s_[pos_] == '-') fail("expected an integer exponent");
    pos_ = static_cast<std::size_t>(res.ptr - s_.data());
    if (n > kMaxExponent) throw SyntaxError(start, "exponent larger than " + std::to_string(kMaxExponent));
    return Expr::power(base, negative ? -n : n);
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  ExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("expected an operand");
    const char c = s_[pos_];
    if (c == '(') {
      if (auto lit = grouped_literal()) return lit;
      ++pos_;
      ExprPtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      const std::string_view word = s_.substr(start, pos_ - start);
      if (word == "q") return Expr::variable();
      if (word == "i") return Expr::literal(kI);
      if (word == "j") return Expr::literal(kJ);
      if (word == "k") return Expr::literal(kK);
      Expr::Kind kind;
      if (word == "conj") {
        kind = Expr::Kind::Conj;
      } else if (word == "sym") {
        kind = Expr::Kind::Sym;
      } else if (word == "inv") {
        kind = Expr::Kind::Inv;
      } else if (word == "neg") {
        kind = Expr::Kind::Neg;
      } else {
        throw SyntaxError(start, "unknown name '" + std::string(word) + "'");
      }
      if (!accept('(')) fail("expected '(' after " + std::string(word));
      ExprPtr arg = expr();
      if (!accept(')')) fail("expected ')'");
      return Expr::unary(kind, arg);
    }
    fail("expected an operand");
  }

  // "(a+bi-cj+dk)" in the quaternion text form is a single literal.
  ExprPtr grouped_literal() {
    const std::size_t close = s_.find(')', pos_ + 1);
    if (close == std::string_view::npos) return nullptr;
    const std::string_view body = s_.substr(pos_ + 1, close - pos_ - 1);
    if (body.find_first_of("(q") != std::string_view::npos) return nullptr;
    try {
      const Quaternion v = parse_quaternion(body);
      pos_ = close + 1;
      return Expr::literal(v);
    } catch (const SyntaxError&) {
      return nullptr;
    }
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    double v = 0.0;
    const auto res = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (res.ec != std::errc() || !std::isfinite(v)) throw SyntaxError(start, "malformed number");
    pos_ = static_cast<std::size_t>(res.ptr - s_.data());
    if (pos_ < s_.size() && (s_[pos_] == 'i' || s_[pos_] == 'j' || s_[pos_] == 'k') &&
        (pos_ + 1 == s_.size() || !ident_char(s_[pos_ + 1]))) {
      const char unit = s_[pos_++];
      return Expr::literal(unit == 'i' ? Quaternion(0, v, 0, 0) : unit == 'j' ? Quaternion(0, 0, v, 0) : Quaternion(0, 0, 0, v));
    }
    return Expr::literal(Quaternion(v));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string literal_text(const Quaternion& v) {
  const int nonzero = (v.x0 != 0.0) + (v.x1 != 0.0) + (v.x2 != 0.0) + (v.x3 != 0.0);
  const bool single = nonzero <= 1 && v.x0 >= 0.0 && v.x1 >= 0.0 && v.x2 >= 0.0 && v.x3 >= 0.0;
  const std::string body = to_string(v);
  return single ? body : "(" + body + ")";
}

// Keeps "(1 + 2i)" from reading back as the single literal 1+2i.
std::string additive_operand(const Expr& e) {
  return e.kind == Expr::Kind::Literal ? "(" + to_string(e.value) + ")" : print(e);
}

const char* function_name(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::Conj: return "conj";
    case Expr::Kind::Sym: return "sym";
    case Expr::Kind::Inv: return "inv";
    default: return "neg";
  }
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal: return literal_text(e.value);
    case Expr::Kind::Variable: return "q";
    case Expr::Kind::Neg: return "neg(" + print(*e.lhs) + ")";
    case Expr::Kind::Conj:
    case Expr::Kind::Sym:
    case Expr::Kind::Inv: return std::string(function_name(e.kind)) + "(" + print(*e.lhs) + ")";
    case Expr::Kind::Add: return "(" + additive_operand(*e.lhs) + " + " + additive_operand(*e.rhs) + ")";
    case Expr::Kind::Sub: return "(" + additive_operand(*e.lhs) + " - " + additive_operand(*e.rhs) + ")";
    case Expr::Kind::Mul: return "(" + print(*e.lhs) + " * " + print(*e.rhs) + ")";
    case Expr::Kind::Pow: return "(" + print(*e.lhs) + ")^" + std::to_string(e.exponent);
  }
  return "";
}

QRational as_rational(const Value& v) {
  if (const auto* p = std::get_if<QPolynomial>(&v)) return QRational(*p);
  return std::get<QRational>(v);
}

Quaternion eval(const Value& v, const Quaternion& q) {
  if (const auto* p = std::get_if<QPolynomial>(&v)) return eval(*p, q);
  return eval(std::get<QRational>(v), q);
}

Value lower(const Expr& e) {
  auto both_poly = [](const Value& a, const Value& b) {
    return std::holds_alternative<QPolynomial>(a) && std::holds_alternative<QPolynomial>(b);
  };
  switch (e.kind) {
    case Expr::Kind::Literal: return QPolynomial::constant(e.value);
    case Expr::Kind::Variable: return QPolynomial::variable();
    case Expr::Kind::Neg: {
      const Value a = lower(*e.lhs);
      if (const auto* p = std::get_if<QPolynomial>(&a)) return -*p;
      return negate(std::get<QRational>(a));
    }
    case Expr::Kind::Conj: {
      const Value a = lower(*e.lhs);
      if (const auto* p = std::get_if<QPolynomial>(&a)) return regular_conj(*p);
      const auto& r = std::get<QRational>(a);
      return QRational::normalize(regular_conj(r.numerator()), r.denominator());
    }
    case Expr::Kind::Sym: {
      const Value a = lower(*e.lhs);
      if (const auto* p = std::get_if<QPolynomial>(&a)) return QPolynomial(symmetrize(*p));
      const auto& r = std::get<QRational>(a);
      return QRational::normalize(QPolynomial(symmetrize(r.numerator())), r.denominator() * r.denominator());
    }
    case Expr::Kind::Inv: return reciprocal(as_rational(lower(*e.lhs)));
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      const Value a = lower(*e.lhs);
      const Value b = lower(*e.rhs);
      const bool sub = e.kind == Expr::Kind::Sub;
      if (both_poly(a, b)) {
        const auto& pa = std::get<QPolynomial>(a);
        const auto& pb = std::get<QPolynomial>(b);
        return sub ? pa - pb : pa + pb;
      }
      return sub ? subtract(as_rational(a), as_rational(b)) : add(as_rational(a), as_rational(b));
    }
    case Expr::Kind::Mul: {
      const Value a = lower(*e.lhs);
      const Value b = lower(*e.rhs);
      if (both_poly(a, b)) return star_mul(std::get<QPolynomial>(a), std::get<QPolynomial>(b));
      return star_mul(as_rational(a), as_rational(b));
    }
    case Expr::Kind::Pow: {
      const Value a = lower(*e.lhs);
      if (e.exponent >= 0) {
        if (const auto* p = std::get_if<QPolynomial>(&a)) return star_pow(*p, e.exponent);
        return star_pow(std::get<QRational>(a), e.exponent);
      }
      return star_pow(as_rational(a), e.exponent);
    }
  }
  throw InvalidArgument("unknown expression node");
}

}  // namespace sliceq
