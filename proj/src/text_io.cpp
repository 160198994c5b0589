// Canonical text for RatFunc and its parser.
//
//   3/2*r^2*s - r^(1/2)*a^(-1) + 1
//   (r^2 - s^2)/(r - s)        -- only ever printed reduced: r + s
//
// Terms appear in decreasing grlex order, so the rendering of a canonical
// value is unique and parse(str(x)) == x.

#include <cctype>
#include <sstream>

#include "qaff/rational_function.hpp"

namespace qaff {

namespace {

void render_exponent(std::ostream& os, Var v, std::int32_t units) {
  Rational e(units, lattice_of(v));
  e.canonicalize();
  if (e == 1) return;
  if (e.get_den() == 1 && sgn(e) > 0) {
    os << '^' << e.get_num().get_str();
  } else {
    os << "^(" << e.get_str() << ')';
  }
}

// Monomial without sign; coefficient magnitude printed only when != 1.
void render_term(std::ostream& os, const Term& t) {
  const Rational c = abs(t.coeff);
  bool first = true;
  if (c != 1 || t.exp.is_zero()) {
    os << c.get_str();
    first = false;
  }
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (t.exp.e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    const Var v = static_cast<Var>(i);
    os << var_name(v);
    render_exponent(os, v, t.exp.e[i]);
  }
}

std::string wrap(const LaurentPoly& p) {
  std::string s = to_string(p);
  return p.size() > 1 ? "(" + s + ")" : s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class integer() {
    if (!peek_digit()) fail("expected integer");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  RatFunc term() {
    RatFunc v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Rational exponent() {
    if (eat('(')) {
      const bool neg = eat('-');
      Rational e(integer());
      if (eat('/')) {
        mpz_class d = integer();
        if (d == 0) fail("zero exponent denominator");
        e /= Rational(d);
      }
      if (!eat(')')) fail("expected ')'");
      return neg ? Rational(-e) : e;
    }
    const bool neg = eat('-');
    Rational e(integer());
    return neg ? Rational(-e) : e;
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!eat('^')) return base;
    const Rational e = exponent();
    try {
      return base.pow(e);
    } catch (const DivisionByZero&) {
      fail("negative power of zero");
    } catch (const LatticeOverflow& err) {
      fail(err.what());
    }
  }

  RatFunc atom() {
    if (eat('(')) {
      RatFunc v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (peek_digit()) return RatFunc(Rational(integer()));
    skip();
    if (pos_ < text_.size()) {
      const char c = text_[pos_];
      for (std::size_t i = 0; i < kNumVars; ++i) {
        const Var v = static_cast<Var>(i);
        if (var_name(v)[0] == c) {
          ++pos_;
          return RatFunc::var(v);
        }
      }
    }
    fail("expected number, indeterminate or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (first) {
      if (sgn(t.coeff) < 0) os << '-';
    } else {
      os << (sgn(t.coeff) < 0 ? " - " : " + ");
    }
    render_term(os, t);
    first = false;
  }
  return os.str();
}

std::string RatFunc::str() const {
  if (den_.is_one()) return to_string(num_);
  return wrap(num_) + "/" + wrap(den_);
}

RatFunc RatFunc::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace qaff
