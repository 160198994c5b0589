// Exact division and gcd in Q[r^±, s^±, a^±, b^±, c^±, q^±].
//
// gcd works on polynomials after stripping monomial factors: exponents are
// compressed by their per-variable gcd, then a primitive PRS runs in the
// variable of smallest degree with contents computed recursively.

#include <algorithm>
#include <numeric>

#include "qaff/rational_function.hpp"

namespace qaff {

namespace {

LaurentPoly strip_monomial(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p.shifted(Exponents{} - p.min_exponents());
}

// Integer coefficients with content 1 and positive leading coefficient.
LaurentPoly primitive_z(LaurentPoly p) {
  if (p.is_zero()) return p;
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(p.lead().coeff) < 0) scale = -scale;
  p *= scale;
  return p;
}

LaurentPoly normalize(const LaurentPoly& p) { return primitive_z(strip_monomial(p)); }

LaurentPoly one() { return LaurentPoly(Rational(1)); }

Exponents scale_exponents(const Exponents& e, const std::array<std::int32_t, kNumVars>& g, bool down) {
  Exponents out;
  for (std::size_t i = 0; i < kNumVars; ++i) out.e[i] = down ? e.e[i] / g[i] : e.e[i] * g[i];
  return out;
}

LaurentPoly rescale(const LaurentPoly& p, const std::array<std::int32_t, kNumVars>& g, bool down) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(Term{scale_exponents(t.exp, g, down), t.coeff});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly monomial_in(Var v, std::int32_t d) {
  Exponents e;
  e[v] = d;
  return LaurentPoly::monomial(Rational(1), e);
}

LaurentPoly gcd_poly(const LaurentPoly& f, const LaurentPoly& g);

// gcd of the coefficients of p viewed as a polynomial in v.
LaurentPoly content_in(const LaurentPoly& p, Var v) {
  std::vector<std::int32_t> degrees;
  for (const auto& t : p.terms()) degrees.push_back(t.exp[v]);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  LaurentPoly c;
  for (auto d : degrees) {
    c = c.is_zero() ? normalize(p.coeff_in(v, d)) : gcd_poly(c, p.coeff_in(v, d));
    if (c.is_constant()) return one();
  }
  return c;
}

LaurentPoly leading_coeff_in(const LaurentPoly& p, Var v) { return p.coeff_in(v, p.degree_in(v)); }

// Pseudo-remainder of a by b in v (both polynomials in v).
LaurentPoly prem(LaurentPoly a, const LaurentPoly& b, Var v) {
  const std::int32_t db = b.degree_in(v);
  const LaurentPoly lb = leading_coeff_in(b, v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const std::int32_t da = a.degree_in(v);
    const LaurentPoly la = leading_coeff_in(a, v);
    a = lb * a - la * monomial_in(v, da - db) * b;
  }
  return a;
}

// Dense univariate image: every variable other than v evaluated at pt.
std::vector<Rational> evaluate_except(const LaurentPoly& p, Var v, const std::array<long, kNumVars>& pt) {
  std::vector<Rational> out(static_cast<std::size_t>(p.degree_in(v)) + 1);
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (static_cast<Var>(i) == v || t.exp.e[i] == 0) continue;
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(pt[i]), static_cast<unsigned long>(t.exp.e[i]));
      c *= pw;
    }
    out[static_cast<std::size_t>(t.exp[v])] += c;
  }
  return out;
}

std::size_t univariate_gcd_degree(std::vector<Rational> x, std::vector<Rational> y) {
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  };
  trim(x);
  trim(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    const Rational inv = 1 / y.back();
    while (x.size() >= y.size()) {
      const Rational f = x.back() * inv;
      const std::size_t off = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) x[off + i] -= f * y[i];
      x.pop_back();
      trim(x);
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  return x.empty() ? 0 : x.size() - 1;
}

// Images at points where both leading coefficients in v survive keep the
// degree of the true gcd as a lower bound, so a constant image proves that
// primitive parts are coprime.
bool coprime_by_evaluation(const LaurentPoly& f, const LaurentPoly& g, Var v) {
  static constexpr long kPoints[][kNumVars] = {
      {3, 5, 7, 11, 13, 17}, {2, 9, 4, 5, 19, 3}, {23, 2, 29, 31, 37, 41}};
  for (const auto& p : kPoints) {
    std::array<long, kNumVars> pt{};
    std::copy(std::begin(p), std::end(p), pt.begin());
    auto fx = evaluate_except(f, v, pt);
    auto gx = evaluate_except(g, v, pt);
    if (sgn(fx.back()) == 0 || sgn(gx.back()) == 0) continue;
    return univariate_gcd_degree(std::move(fx), std::move(gx)) == 0;
  }
  return false;
}

LaurentPoly exact_quotient(const LaurentPoly& f, const LaurentPoly& g) {
  auto q = divide_exact(f, g);
  if (!q) throw NotPolynomial("internal: expected exact division");
  return std::move(*q);
}

// Inputs: nonzero polynomials without monomial factors.
LaurentPoly gcd_poly(const LaurentPoly& f0, const LaurentPoly& g0) {
  LaurentPoly f = normalize(f0);
  LaurentPoly g = normalize(g0);
  if (f.is_constant() || g.is_constant()) return one();
  if (f == g) return f;

  std::array<std::int32_t, kNumVars> step{};
  bool compress = false;
  for (const auto* p : {&f, &g}) {
    for (const auto& t : p->terms()) {
      for (std::size_t i = 0; i < kNumVars; ++i) step[i] = std::gcd(step[i], t.exp.e[i]);
    }
  }
  for (auto& x : step) {
    if (x == 0) x = 1;
    if (x != 1) compress = true;
  }
  if (compress) {
    return normalize(rescale(gcd_poly(rescale(f, step, true), rescale(g, step, true)), step, false));
  }

  if (f.size() >= g.size()) {
    if (divide_exact(f, g)) return g;
  } else if (divide_exact(g, f)) {
    return f;
  }

  // Main variable: one appearing in exactly one argument reduces to a content;
  // otherwise the shared variable of least degree.
  std::optional<Var> main;
  std::int32_t best = 0;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const Var v = static_cast<Var>(i);
    const bool in_f = f.contains(v);
    const bool in_g = g.contains(v);
    if (in_f && !in_g) return gcd_poly(content_in(f, v), g);
    if (in_g && !in_f) return gcd_poly(f, content_in(g, v));
    if (in_f && in_g) {
      const std::int32_t d = std::min(f.degree_in(v), g.degree_in(v));
      if (!main || d < best) {
        main = v;
        best = d;
      }
    }
  }
  const Var v = *main;

  const LaurentPoly cf = content_in(f, v);
  const LaurentPoly cg = content_in(g, v);
  const LaurentPoly c = gcd_poly(cf, cg);
  LaurentPoly a = cf.is_constant() ? f : exact_quotient(f, cf);
  LaurentPoly b = cg.is_constant() ? g : exact_quotient(g, cg);
  if (coprime_by_evaluation(a, b, v)) return c;
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree_in(v) == 0) {
      a = one();
      break;
    }
    LaurentPoly rem = prem(a, b, v);
    a = std::move(b);
    if (rem.is_zero()) break;
    const LaurentPoly cr = content_in(rem, v);
    b = primitive_z(cr.is_constant() ? rem : exact_quotient(rem, cr));
  }
  const LaurentPoly ca = a.is_constant() ? one() : content_in(a, v);
  const LaurentPoly pa = ca.is_constant() ? a : exact_quotient(a, ca);
  return normalize(c * pa);
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw DivisionByZero("exact division by zero");
  if (f.is_zero()) return LaurentPoly();
  if (g.is_monomial()) {
    LaurentPoly q = f.shifted(Exponents{} - g.lead().exp);
    q *= Rational(1 / g.lead().coeff);
    return q;
  }
  // Newton polytopes add under multiplication, so every quotient exponent lies
  // in the box [min f - min g, max f - max g]; leaving it means g does not divide.
  const Exponents lo = f.min_exponents() - g.min_exponents();
  const Exponents hi = f.max_exponents() - g.max_exponents();
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (lo.e[i] > hi.e[i]) return std::nullopt;
  }
  const Term& lg = g.lead();
  const Rational inv = 1 / lg.coeff;
  LaurentPoly rem = f;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lr = rem.lead();
    const Exponents e = lr.exp - lg.exp;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e.e[i] < lo.e[i] || e.e[i] > hi.e[i]) return std::nullopt;
    }
    const Rational c = lr.coeff * inv;
    quotient.push_back(Term{e, c});
    rem -= g.shifted(e) * c;
  }
  // Quotient terms come out in strictly decreasing order.
  return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() && g.is_zero()) return LaurentPoly();
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);
  return gcd_poly(f, g);
}

}  // namespace qaff
