#include "qcore/eta.hpp"

#include <cctype>
#include <limits>

namespace qcore {

namespace {

EtaExprPtr node(EtaExpr e) { return std::make_shared<const EtaExpr>(std::move(e)); }

}  // namespace

EtaExprPtr eta_fk(long long k) {
  if (k < 1) throw std::invalid_argument("f_k requires k >= 1");
  return node({EtaExpr::Kind::fk, k, 0, nullptr, nullptr});
}

EtaExprPtr eta_pochhammer(long long a, long long b) {
  if (a < 1 || b < a) throw std::invalid_argument("P(a,b) requires 1 <= a <= b");
  return node({EtaExpr::Kind::pochhammer, a, b, nullptr, nullptr});
}

EtaExprPtr eta_rr() { return node({EtaExpr::Kind::rr, 0, 0, nullptr, nullptr}); }
EtaExprPtr eta_q() { return node({EtaExpr::Kind::q, 0, 0, nullptr, nullptr}); }
EtaExprPtr eta_literal(long long v) { return node({EtaExpr::Kind::literal, v, 0, nullptr, nullptr}); }

EtaExprPtr eta_add(EtaExprPtr l, EtaExprPtr r) {
  return node({EtaExpr::Kind::add, 0, 0, std::move(l), std::move(r)});
}
EtaExprPtr eta_sub(EtaExprPtr l, EtaExprPtr r) {
  return node({EtaExpr::Kind::sub, 0, 0, std::move(l), std::move(r)});
}
EtaExprPtr eta_mul(EtaExprPtr l, EtaExprPtr r) {
  return node({EtaExpr::Kind::mul, 0, 0, std::move(l), std::move(r)});
}
EtaExprPtr eta_div(EtaExprPtr l, EtaExprPtr r) {
  return node({EtaExpr::Kind::div, 0, 0, std::move(l), std::move(r)});
}
EtaExprPtr eta_pow(EtaExprPtr base, long long e) {
  return node({EtaExpr::Kind::pow, e, 0, std::move(base), nullptr});
}
EtaExprPtr eta_subst(EtaExprPtr inner, long long k) {
  if (k < 1) throw std::invalid_argument("sub(e,k) requires k >= 1");
  return node({EtaExpr::Kind::subst, k, 0, std::move(inner), nullptr});
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  EtaExprPtr run() {
    auto e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  EtaExprPtr expr() {
    auto lhs = term();
    for (;;) {
      skip_ws();
      if (consume('+')) {
        lhs = eta_add(std::move(lhs), term());
      } else if (consume('-')) {
        lhs = eta_sub(std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  EtaExprPtr term() {
    auto lhs = factor();
    for (;;) {
      skip_ws();
      if (consume('*')) {
        lhs = eta_mul(std::move(lhs), factor());
      } else if (consume('/')) {
        lhs = eta_div(std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  // "^" binds tighter than unary minus and is non-associative.
  EtaExprPtr factor() {
    skip_ws();
    if (consume('-')) return eta_sub(eta_literal(0), factor());
    auto b = base();
    skip_ws();
    if (consume('^')) {
      const long long e = sint();
      skip_ws();
      if (peek() == '^') {
        throw ParseError("'^' is non-associative; parenthesize power towers", pos_);
      }
      return eta_pow(std::move(b), e);
    }
    return b;
  }

  EtaExprPtr base() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t start = pos_;
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (c == 'f') {
      ++pos_;
      const long long k = uint_lit("expected integer after 'f'");
      if (k < 1) throw ParseError("f index must be >= 1", start);
      return eta_fk(k);
    }
    if (c == 'R') {
      ++pos_;
      return eta_rr();
    }
    if (c == 'q') {
      ++pos_;
      return eta_q();
    }
    if (c == 'P') {
      ++pos_;
      expect('(');
      const long long a = uint_lit("expected integer");
      expect(',');
      const long long b = uint_lit("expected integer");
      expect(')');
      if (a < 1 || b < a) throw ParseError("P(a,b) requires 1 <= a <= b", start);
      return eta_pochhammer(a, b);
    }
    if (s_.substr(pos_).rfind("sub", 0) == 0) {
      pos_ += 3;
      expect('(');
      auto inner = expr();
      expect(',');
      const long long k = uint_lit("expected integer");
      expect(')');
      if (k < 1) throw ParseError("sub(e,k) requires k >= 1", start);
      return eta_subst(std::move(inner), k);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return eta_literal(uint_lit("expected integer"));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  long long sint() {
    skip_ws();
    const bool neg = consume('-');
    const long long v = uint_lit("expected integer exponent");
    return neg ? -v : v;
  }

  long long uint_lit(const char* what) {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      throw ParseError(what, pos_);
    }
    const std::size_t start = pos_;
    unsigned long long acc = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const unsigned digit = static_cast<unsigned>(s_[pos_] - '0');
      if (acc > (static_cast<unsigned long long>(std::numeric_limits<long long>::max()) - digit) / 10) {
        throw ParseError("integer literal overflow", start);
      }
      acc = acc * 10 + digit;
      ++pos_;
    }
    return static_cast<long long>(acc);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (!consume(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

int precedence(EtaExpr::Kind k) {
  switch (k) {
    case EtaExpr::Kind::add:
    case EtaExpr::Kind::sub:
      return 1;
    case EtaExpr::Kind::mul:
    case EtaExpr::Kind::div:
      return 2;
    case EtaExpr::Kind::pow:
      return 3;
    default:
      return 4;
  }
}

void render(const EtaExpr& e, std::string& out) {
  const auto child = [&out](const EtaExpr& c, int min_prec) {
    if (precedence(c.kind) < min_prec) {
      out += '(';
      render(c, out);
      out += ')';
    } else {
      render(c, out);
    }
  };
  switch (e.kind) {
    case EtaExpr::Kind::fk:
      out += 'f';
      out += std::to_string(e.value);
      return;
    case EtaExpr::Kind::pochhammer:
      out += "P(" + std::to_string(e.value) + "," + std::to_string(e.value2) + ")";
      return;
    case EtaExpr::Kind::rr:
      out += 'R';
      return;
    case EtaExpr::Kind::q:
      out += 'q';
      return;
    case EtaExpr::Kind::literal:
      out += std::to_string(e.value);
      return;
    case EtaExpr::Kind::add:
      child(*e.left, 1);
      out += " + ";
      child(*e.right, 2);
      return;
    case EtaExpr::Kind::sub:
      child(*e.left, 1);
      out += " - ";
      child(*e.right, 2);
      return;
    case EtaExpr::Kind::mul:
      child(*e.left, 2);
      out += "*";
      child(*e.right, 3);
      return;
    case EtaExpr::Kind::div:
      child(*e.left, 2);
      out += "/";
      child(*e.right, 3);
      return;
    case EtaExpr::Kind::pow:
      child(*e.left, 4);
      out += "^";
      out += std::to_string(e.value);
      return;
    case EtaExpr::Kind::subst:
      out += "sub(";
      render(*e.left, out);
      out += "," + std::to_string(e.value) + ")";
      return;
  }
}

}  // namespace

EtaExprPtr parse_expr(std::string_view text) { return Parser(text).run(); }

std::string to_string(const EtaExpr& e) {
  std::string out;
  render(e, out);
  return out;
}

}  // namespace qcore
