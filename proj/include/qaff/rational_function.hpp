#pragma once

// Exact scalars: Laurent polynomials over Q in the indeterminates r, s, a, b,
// c, q and the field of rational functions they generate. r, s and q carry
// exponents in (1/6)Z so that r^(1/2) and r^(1/3) are ordinary monomials.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qaff/errors.hpp"

namespace qaff {

using Rational = mpq_class;

/// p/q in lowest terms (mpq_class(p, q) alone does not reduce).
inline Rational frac(long p, long q) {
  Rational x(p, q);
  x.canonicalize();
  return x;
}

enum class Var : std::uint8_t { r = 0, s, a, b, c, q };

inline constexpr std::size_t kNumVars = 6;
inline constexpr int kLattice = 6;

/// Exponent denominator of each indeterminate (6 for r, s, q; 1 otherwise).
constexpr int lattice_of(Var v) {
  return (v == Var::r || v == Var::s || v == Var::q) ? kLattice : 1;
}
std::string_view var_name(Var v);

/// Exponent vector, stored in lattice units (r^(1/2) is {3, 0, ...}).
struct Exponents {
  std::array<std::int32_t, kNumVars> e{};

  std::int32_t& operator[](Var v) { return e[static_cast<std::size_t>(v)]; }
  std::int32_t operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }

  bool is_zero() const;
  /// Total degree measured in sixths.
  std::int64_t weight() const;

  friend Exponents operator+(const Exponents& x, const Exponents& y);
  friend Exponents operator-(const Exponents& x, const Exponents& y);
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Graded lexicographic order (weight first, then r, s, a, b, c, q).
bool grlex_less(const Exponents& x, const Exponents& y);

struct Term {
  Exponents exp;
  Rational coeff;
};

/// Sparse Laurent polynomial. Terms are kept sorted in decreasing grlex
/// order with nonzero coefficients, so structural equality is equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c);
  static LaurentPoly monomial(const Rational& c, const Exponents& e);
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;

  const Term& lead() const { return terms_.front(); }
  Exponents min_exponents() const;
  Exponents max_exponents() const;
  bool has_negative_exponents() const;
  bool contains(Var v) const;
  std::int32_t degree_in(Var v) const;
  /// Coefficient of v^d (lattice units) with the v-exponent removed.
  LaurentPoly coeff_in(Var v, std::int32_t d) const;
  LaurentPoly shifted(const Exponents& by) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator-(const LaurentPoly& x);
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(LaurentPoly x, const Rational& c) { return x *= c; }
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y);

 private:
  std::vector<Term> terms_;
};

/// Exact quotient f/g in the Laurent ring, or nullopt when g does not divide f.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g);

/// Greatest common divisor up to monomial units: the result has no monomial
/// factor, integer coefficients with gcd 1 and a positive leading coefficient.
LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g);

/// An element of Q(r, s, a, b, c, q).
///
/// Canonical form: num is a Laurent polynomial, den a polynomial with no
/// monomial factor and leading coefficient 1, gcd(num, den) = 1. Two values
/// are equal iff their representations are identical.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(int c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c);                // NOLINT(google-explicit-constructor)
  explicit RatFunc(LaurentPoly p);
  static RatFunc fraction(LaurentPoly num, LaurentPoly den);

  /// v^exponent; throws LatticeOverflow if the exponent leaves v's lattice.
  static RatFunc var(Var v, const Rational& exponent = 1);
  static RatFunc r() { return var(Var::r); }
  static RatFunc s() { return var(Var::s); }
  static RatFunc a() { return var(Var::a); }
  static RatFunc b() { return var(Var::b); }
  static RatFunc c() { return var(Var::c); }
  /// coeff * r^er * s^es * a^ea.
  static RatFunc monomial(const Rational& coeff, const Rational& er, const Rational& es,
                          const Rational& ea = 0);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// Constant value; requires is_constant().
  Rational constant_value() const;

  RatFunc inverse() const;
  RatFunc pow(long n) const;
  /// Rational powers are defined for monomials with coefficient 1 only.
  RatFunc pow(const Rational& e) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc x, const RatFunc& y) { return x += y; }
  friend RatFunc operator-(RatFunc x, const RatFunc& y) { return x -= y; }
  friend RatFunc operator*(RatFunc x, const RatFunc& y) { return x *= y; }
  friend RatFunc operator/(RatFunc x, const RatFunc& y) { return x /= y; }
  friend RatFunc operator-(const RatFunc& x);
  friend bool operator==(const RatFunc& x, const RatFunc& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  std::string str() const;
  static RatFunc parse(std::string_view text);

 private:
  RatFunc(LaurentPoly num, LaurentPoly den, bool canonical);
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& x);
std::string to_string(const LaurentPoly& p);

/// Flat view of a single Laurent monomial coeff * r^exp_r s^exp_s a^exp_a.
struct LaurentMono {
  Rational coeff;
  Rational exp_r;
  Rational exp_s;
  std::int32_t exp_a = 0;

  RatFunc value() const { return RatFunc::monomial(coeff, exp_r, exp_s, exp_a); }
};

/// Two-parameter quantum integer [n] = (x^n - y^n)/(x - y) over the base
/// pair (x, y); [0] = 0 and [-n] = -(xy)^{-n}[n].
RatFunc quantum_int(long n, const RatFunc& x, const RatFunc& y);
inline RatFunc quantum_int(long n) { return quantum_int(n, RatFunc::r(), RatFunc::s()); }

/// [m]!/([k]![m-k]!) over the base pair; throws NotPolynomial if the
/// division leaves a remainder.
RatFunc gauss_binom(long m, long k, const RatFunc& x, const RatFunc& y);
inline RatFunc gauss_binom(long m, long k) { return gauss_binom(m, k, RatFunc::r(), RatFunc::s()); }

/// Images of indeterminates; unset entries map to themselves.
struct Substitution {
  std::array<std::optional<RatFunc>, kNumVars> image;

  Substitution& set(Var v, RatFunc value) {
    image[static_cast<std::size_t>(v)] = std::move(value);
    return *this;
  }
};

/// Homomorphic image; throws SpecializationPole when the denominator vanishes
/// and LatticeOverflow when a fractional power of a non-monomial is needed.
RatFunc substitute(const RatFunc& x, const Substitution& map);

}  // namespace qaff
