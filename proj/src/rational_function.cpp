#include "qaff/rational_function.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace qaff {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames{"r", "s", "a", "b", "c", "q"};

bool grlex_greater(const Term& x, const Term& y) { return grlex_less(y.exp, x.exp); }

// Sorts, merges equal exponents and drops zero coefficients.
void normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), grlex_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  terms = std::move(out);
}

// Merge of two sorted term lists with the second scaled by sign.
std::vector<Term> merge(const std::vector<Term>& x, const std::vector<Term>& y, int sign) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && grlex_less(y[j].exp, x[i].exp))) {
      out.push_back(x[i++]);
    } else if (i == x.size() || grlex_less(x[i].exp, y[j].exp)) {
      out.push_back(y[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = sign < 0 ? Rational(x[i].coeff - y[j].coeff) : Rational(x[i].coeff + y[j].coeff);
      if (sgn(c) != 0) out.push_back(Term{x[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::int32_t to_units(Var v, const Rational& e) {
  Rational u = e * lattice_of(v);
  if (u.get_den() != 1) {
    throw LatticeOverflow("exponent " + e.get_str() + " of " + std::string(var_name(v)) +
                          " is not a multiple of 1/" + std::to_string(lattice_of(v)));
  }
  return static_cast<std::int32_t>(u.get_num().get_si());
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

bool Exponents::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
}

std::int64_t Exponents::weight() const {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    w += static_cast<std::int64_t>(e[i]) * (kLattice / lattice_of(static_cast<Var>(i)));
  }
  return w;
}

Exponents operator+(const Exponents& x, const Exponents& y) {
  Exponents out;
  for (std::size_t i = 0; i < kNumVars; ++i) out.e[i] = x.e[i] + y.e[i];
  return out;
}

Exponents operator-(const Exponents& x, const Exponents& y) {
  Exponents out;
  for (std::size_t i = 0; i < kNumVars; ++i) out.e[i] = x.e[i] - y.e[i];
  return out;
}

bool grlex_less(const Exponents& x, const Exponents& y) {
  const auto wx = x.weight();
  const auto wy = y.weight();
  if (wx != wy) return wx < wy;
  return x.e < y.e;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back(Term{Exponents{}, c});
}

LaurentPoly LaurentPoly::monomial(const Rational& c, const Exponents& e) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_.push_back(Term{e, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  normalize_terms(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp.is_zero() && terms_[0].coeff == 1;
}

Exponents LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Exponents m = terms_[0].exp;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kNumVars; ++i) m.e[i] = std::min(m.e[i], t.exp.e[i]);
  }
  return m;
}

Exponents LaurentPoly::max_exponents() const {
  if (terms_.empty()) return {};
  Exponents m = terms_[0].exp;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kNumVars; ++i) m.e[i] = std::max(m.e[i], t.exp.e[i]);
  }
  return m;
}

bool LaurentPoly::has_negative_exponents() const {
  for (const auto& t : terms_) {
    for (auto x : t.exp.e) {
      if (x < 0) return true;
    }
  }
  return false;
}

bool LaurentPoly::contains(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.exp[v] != 0; });
}

std::int32_t LaurentPoly::degree_in(Var v) const {
  std::int32_t d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.exp[v] > d) d = t.exp[v];
    first = false;
  }
  return d;
}

LaurentPoly LaurentPoly::coeff_in(Var v, std::int32_t d) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[v] == d) {
      Term u = t;
      u.exp[v] = 0;
      out.push_back(std::move(u));
    }
  }
  // Removing one coordinate can reorder terms.
  return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::shifted(const Exponents& by) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp = t.exp + by;
  // A common shift preserves grlex order.
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

LaurentPoly operator-(const LaurentPoly& x) {
  LaurentPoly p = x;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (y.is_monomial()) {
    LaurentPoly p = x.shifted(y.lead().exp);
    return p *= y.lead().coeff;
  }
  if (x.is_monomial()) return y * x;
  std::vector<Term> out;
  out.reserve(x.size() * y.size());
  for (const auto& s : x.terms_) {
    for (const auto& t : y.terms_) out.push_back(Term{s.exp + t.exp, s.coeff * t.coeff});
  }
  return LaurentPoly::from_terms(std::move(out));
}

bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (!(x.terms_[i].exp == y.terms_[i].exp) || x.terms_[i].coeff != y.terms_[i].coeff) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}

RatFunc::RatFunc(LaurentPoly p) : num_(std::move(p)), den_(Rational(1)) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den, bool canonical)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!canonical) canonicalize();
}

RatFunc RatFunc::fraction(LaurentPoly num, LaurentPoly den) {
  return RatFunc(std::move(num), std::move(den), false);
}

RatFunc RatFunc::var(Var v, const Rational& exponent) {
  Exponents e;
  e[v] = to_units(v, exponent);
  return RatFunc(LaurentPoly::monomial(Rational(1), e));
}

RatFunc RatFunc::monomial(const Rational& coeff, const Rational& er, const Rational& es,
                          const Rational& ea) {
  Exponents e;
  e[Var::r] = to_units(Var::r, er);
  e[Var::s] = to_units(Var::s, es);
  e[Var::a] = to_units(Var::a, ea);
  return RatFunc(LaurentPoly::monomial(coeff, e));
}

void RatFunc::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(Rational(1));
    return;
  }
  if (den_.is_monomial()) {
    const Term& d = den_.lead();
    Exponents neg = Exponents{} - d.exp;
    num_ = num_.shifted(neg);
    num_ *= Rational(1 / d.coeff);
    den_ = LaurentPoly(Rational(1));
    return;
  }
  const Exponents m = den_.min_exponents();
  if (!m.is_zero()) {
    const Exponents neg = Exponents{} - m;
    den_ = den_.shifted(neg);
    num_ = num_.shifted(neg);
  }
  LaurentPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    auto qn = divide_exact(num_, g);
    auto qd = divide_exact(den_, g);
    if (!qn || !qd) throw NotPolynomial("gcd does not divide its arguments");
    num_ = std::move(*qn);
    den_ = std::move(*qd);
    // Quotients of monomial-free polynomials by monomial-free factors stay
    // monomial-free, but the Laurent quotient may carry a unit shift.
    const Exponents md = den_.min_exponents();
    if (!md.is_zero()) {
      const Exponents neg = Exponents{} - md;
      den_ = den_.shifted(neg);
      num_ = num_.shifted(neg);
    }
  }
  const Rational lc = den_.lead().coeff;
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw Error("constant_value() on non-constant " + str());
  return num_.is_zero() ? Rational(0) : num_.lead().coeff;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return RatFunc(den_, num_, false);
}

RatFunc RatFunc::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  if (is_monomial()) {
    const Term& t = num_.lead();
    Exponents e;
    for (std::size_t i = 0; i < kNumVars; ++i) e.e[i] = t.exp.e[i] * static_cast<std::int32_t>(n);
    Rational c;
    mpz_pow_ui(c.get_num_mpz_t(), t.coeff.get_num_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(c.get_den_mpz_t(), t.coeff.get_den_mpz_t(), static_cast<unsigned long>(n));
    c.canonicalize();
    return RatFunc(LaurentPoly::monomial(c, e));
  }
  RatFunc result(1);
  RatFunc base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

RatFunc RatFunc::pow(const Rational& e) const {
  if (e.get_den() == 1) return pow(e.get_num().get_si());
  if (!is_monomial() || num_.lead().coeff != 1) {
    throw LatticeOverflow("fractional power " + e.get_str() + " of non-monomial " + str());
  }
  Exponents out;
  const Exponents& in = num_.lead().exp;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    Rational u = Rational(in.e[i]) * e;
    if (u.get_den() != 1) {
      throw LatticeOverflow("power " + e.get_str() + " of " + str() + " leaves the exponent lattice");
    }
    out.e[i] = static_cast<std::int32_t>(u.get_num().get_si());
  }
  return RatFunc(LaurentPoly::monomial(Rational(1), out));
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    *this = RatFunc(num_ + o.num_, den_, false);
    return *this;
  }
  if (o.den_.is_one()) {
    // n/d + p = (n + p d)/d stays reduced.
    num_ += o.num_ * den_;
    return *this;
  }
  if (den_.is_one()) {
    LaurentPoly n = num_ * o.den_ + o.num_;
    num_ = std::move(n);
    den_ = o.den_;
    return *this;
  }
  // Henrici: with d1 = g*d1', d2 = g*d2', the sum n/(g*d1'*d2') can only
  // share factors with g.
  LaurentPoly g = gcd(den_, o.den_);
  if (g.is_constant()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = LaurentPoly(Rational(1));
    return *this;
  }
  const LaurentPoly d1 = *divide_exact(den_, g);
  const LaurentPoly d2 = *divide_exact(o.den_, g);
  LaurentPoly n = num_ * d2 + o.num_ * d1;
  if (n.is_zero()) return *this = RatFunc();
  LaurentPoly h = gcd(n, g);
  LaurentPoly gg = g;
  if (!h.is_constant()) {
    n = *divide_exact(n, h);
    gg = *divide_exact(g, h);
  }
  LaurentPoly d = gg * d1 * d2;
  const Rational lc = d.lead().coeff;
  if (lc != 1) {
    const Rational inv = 1 / lc;
    n *= inv;
    d *= inv;
  }
  *this = RatFunc(std::move(n), std::move(d), true);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (o.is_monomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (is_monomial()) {
    LaurentPoly n = num_ * o.num_;
    num_ = std::move(n);
    den_ = o.den_;
    return *this;
  }
  // Cross-cancel: gcd(n1, d2) and gcd(n2, d1) are the only common factors.
  LaurentPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_one()) {
    LaurentPoly g = gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = *divide_exact(n1, g);
      d2 = *divide_exact(d2, g);
    }
  }
  if (!d1.is_one()) {
    LaurentPoly g = gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = *divide_exact(n2, g);
      d1 = *divide_exact(d1, g);
    }
  }
  LaurentPoly d = d1 * d2;
  LaurentPoly n = n1 * n2;
  const Rational lc = d.lead().coeff;
  if (lc != 1) {
    const Rational inv = 1 / lc;
    n *= inv;
    d *= inv;
  }
  if (d.is_monomial()) {
    *this = RatFunc(std::move(n), std::move(d), false);
  } else {
    *this = RatFunc(std::move(n), std::move(d), true);
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero("division of " + str() + " by zero");
  return *this *= o.inverse();
}

RatFunc operator-(const RatFunc& x) {
  RatFunc y = x;
  y.num_ = -y.num_;
  return y;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.str(); }

// ---------------------------------------------------------------------------
// quantum numbers

RatFunc quantum_int(long n, const RatFunc& x, const RatFunc& y) {
  if (n == 0) return RatFunc(0);
  if (n < 0) return -quantum_int(-n, x, y) / (x * y).pow(-n);
  RatFunc sum;
  RatFunc xp = x.pow(n - 1);
  const RatFunc ratio = y / x;
  for (long j = 0; j < n; ++j) {
    sum += xp;
    xp *= ratio;
  }
  return sum;
}

RatFunc gauss_binom(long m, long k, const RatFunc& x, const RatFunc& y) {
  if (k < 0 || k > m) throw IndexOutOfRange("gauss_binom requires 0 <= k <= m");
  auto factorial = [&](long t) {
    RatFunc f(1);
    for (long j = 1; j <= t; ++j) f *= quantum_int(j, x, y);
    return f;
  };
  const RatFunc num = factorial(m);
  const RatFunc den = factorial(k) * factorial(m - k);
  if (num.is_laurent() && den.is_laurent()) {
    auto q = divide_exact(num.num(), den.num());
    if (!q) throw NotPolynomial("[" + std::to_string(m) + ";" + std::to_string(k) + "] is not a polynomial");
    return RatFunc(std::move(*q));
  }
  RatFunc q = num / den;
  if (!q.is_laurent()) throw NotPolynomial("gaussian binomial is not a polynomial: " + q.str());
  return q;
}

// ---------------------------------------------------------------------------
// substitution

namespace {

RatFunc image_power(const RatFunc& img, Var v, std::int32_t units) {
  const int lat = lattice_of(v);
  if (units % lat == 0) return img.pow(static_cast<long>(units / lat));
  if (!img.is_monomial() || img.num().lead().coeff != 1) {
    throw LatticeOverflow("fractional power of " + std::string(var_name(v)) +
                          " under a non-monomial substitution");
  }
  return img.pow(frac(units, lat));
}

RatFunc substitute_poly(const LaurentPoly& p, const Substitution& map) {
  // Terms are grouped by exponent of each substituted variable through a
  // power cache; the polynomials here are small.
  std::array<std::vector<std::pair<std::int32_t, RatFunc>>, kNumVars> cache;
  auto power = [&](std::size_t i, std::int32_t units) -> const RatFunc& {
    for (const auto& [u, val] : cache[i]) {
      if (u == units) return val;
    }
    cache[i].emplace_back(units, image_power(*map.image[i], static_cast<Var>(i), units));
    return cache[i].back().second;
  };
  RatFunc total;
  LaurentPoly untouched;
  for (const auto& t : p.terms()) {
    Exponents kept = t.exp;
    RatFunc factor(t.coeff);
    bool touched = false;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (map.image[i] && t.exp.e[i] != 0) {
        factor *= power(i, t.exp.e[i]);
        kept.e[i] = 0;
        touched = true;
      }
    }
    if (!touched) {
      untouched += LaurentPoly::monomial(t.coeff, t.exp);
    } else {
      total += factor * RatFunc(LaurentPoly::monomial(Rational(1), kept));
    }
  }
  return total + RatFunc(untouched);
}

}  // namespace

RatFunc substitute(const RatFunc& x, const Substitution& map) {
  const RatFunc n = substitute_poly(x.num(), map);
  const RatFunc d = substitute_poly(x.den(), map);
  if (d.is_zero()) {
    throw SpecializationPole("denominator of " + x.str() + " vanishes under the substitution");
  }
  return n / d;
}

}  // namespace qaff
