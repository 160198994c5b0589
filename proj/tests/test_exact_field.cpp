#include <doctest.h>

#include <cstdlib>

#include "qaff/exact_linalg.hpp"
#include "qaff/trunc_series.hpp"
#include "support.hpp"

using namespace qaff;
using qaff::testing::random_poly;

namespace {

const RatFunc r = RatFunc::r(), s = RatFunc::s(), a = RatFunc::a();

RatFunc random_ratfunc() {
  for (;;) {
    const RatFunc den = random_poly().value();
    if (!den.is_zero()) return random_poly().value() / den;
  }
}

}  // namespace

TEST_CASE("canonical text round-trips and reduces") {
  CHECK(((r * r - s * s) / (r - s)).str() == "r + s");
  CHECK(RatFunc::parse("(r^2 - s^2)/(r - s)") == r + s);
  const RatFunc x = RatFunc::monomial(frac(3, 2), frac(1, 2), frac(-1, 3));
  CHECK(x.str() == "3/2*r^(1/2)*s^(-1/3)");
  CHECK(RatFunc::parse(x.str()) == x);
  for (int k = 0; k < 40; ++k) {
    const RatFunc y = random_ratfunc();
    CHECK(RatFunc::parse(y.str()) == y);
  }
  CHECK_THROWS_AS(RatFunc::parse("r^"), ParseError);
  CHECK_THROWS_AS(RatFunc::parse("(r + s"), ParseError);
}

TEST_CASE("canonical denominators are monic polynomials without monomial factor") {
  const RatFunc x = (r * s) / (2 * r * r * s - 4 * s * s * s);
  CHECK(x.den().lead().coeff == 1);
  CHECK_FALSE(x.den().has_negative_exponents());
  CHECK(x == RatFunc::parse(x.str()));
  CHECK(r / r == RatFunc(1));
  CHECK_THROWS_AS(r / RatFunc(0), DivisionByZero);
}

TEST_CASE("field axioms hold exactly on random triples") {
  for (int k = 0; k < 25; ++k) {
    const RatFunc x = random_ratfunc(), y = random_ratfunc(), z = random_ratfunc();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x - x == RatFunc(0));
    if (!x.is_zero()) CHECK(x * x.inverse() == RatFunc(1));
  }
}

TEST_CASE("arithmetic agrees with direct numeric evaluation") {
  using testing::RawPoly;
  const Rational pr(3, 2), ps(-2, 5), pa(7);
  const Substitution at = testing::numeric_point(pr, ps, pa);
  for (int k = 0; k < 30; ++k) {
    const RawPoly p = random_poly(), q = random_poly(), u = random_poly(), v = random_poly();
    const Rational qv = q.eval(pr, ps, pa), vv = v.eval(pr, ps, pa);
    if (qv == 0 || vv == 0) continue;
    const RatFunc x = p.value() / q.value() + u.value() / v.value();
    const Rational want = p.eval(pr, ps, pa) / qv + u.eval(pr, ps, pa) / vv;
    CHECK(substitute(x, at).constant_value() == want);
    const RatFunc y = (p.value() / q.value()) * (u.value() / v.value());
    CHECK(substitute(y, at).constant_value() == p.eval(pr, ps, pa) * u.eval(pr, ps, pa) / (qv * vv));
  }
}

TEST_CASE("gcd extracts common factors") {
  for (int k = 0; k < 15; ++k) {
    const LaurentPoly g = (random_poly(3, 2).value() + RatFunc(7)).num();
    const LaurentPoly x = random_poly().value().num(), y = random_poly().value().num();
    if (g.is_zero() || x.is_zero() || y.is_zero()) continue;
    const LaurentPoly d = gcd(x * g, y * g);
    CHECK(divide_exact(d, gcd(g, g)).has_value());
    CHECK(divide_exact(x * g, d).has_value());
    CHECK(divide_exact(y * g, d).has_value());
  }
  CHECK_FALSE(divide_exact((r + s).num(), (r - s).num()).has_value());
  CHECK(*divide_exact((r * r - s * s).num(), (r - s).num()) == (r + s).num());
}

TEST_CASE("quantum integers") {
  CHECK(quantum_int(0) == RatFunc(0));
  CHECK(quantum_int(1) == RatFunc(1));
  CHECK(quantum_int(2) == r + s);
  CHECK(quantum_int(3, s, r) == s * s + s * r + r * r);
  for (long n = 0; n <= 12; ++n) CHECK(quantum_int(n) * (r - s) == r.pow(n) - s.pow(n));
  // Sum formula r^{n-1} + r^{n-2}s + ... + s^{n-1} as an independent oracle.
  for (long n = 1; n <= 8; ++n) {
    RatFunc sum;
    for (long j = 0; j < n; ++j) sum += r.pow(n - 1 - j) * s.pow(j);
    CHECK(quantum_int(n) == sum);
  }
}

TEST_CASE("Gaussian binomials") {
  CHECK(gauss_binom(2, 1) == r + s);
  CHECK(gauss_binom(5, 5) == RatFunc(1));
  CHECK(gauss_binom(3, 1) == r * r + r * s + s * s);
  auto fact = [](long m) {
    RatFunc f(1);
    for (long j = 1; j <= m; ++j) f *= quantum_int(j);
    return f;
  };
  for (long m = 0; m <= 8; ++m)
    for (long k = 0; k <= m; ++k) CHECK(gauss_binom(m, k) * fact(k) * fact(m - k) == fact(m));
}

TEST_CASE("substitution") {
  Substitution inv;
  inv.set(Var::s, r.inverse());
  CHECK(substitute(quantum_int(2), inv) == r + r.inverse());
  Substitution eq;
  eq.set(Var::s, r);
  CHECK(substitute(quantum_int(3), eq) == 3 * r * r);
  CHECK_THROWS_AS(substitute((r - s).inverse(), eq), SpecializationPole);
  for (int k = 0; k < 20; ++k) {
    const RatFunc x = random_ratfunc(), y = random_ratfunc();
    try {
      CHECK(substitute(x * y, inv) == substitute(x, inv) * substitute(y, inv));
      CHECK(substitute(x + y, inv) == substitute(x, inv) + substitute(y, inv));
    } catch (const SpecializationPole&) {
    }
  }
  CHECK_THROWS_AS(RatFunc::var(Var::a, frac(1, 2)), LatticeOverflow);
}

TEST_CASE("truncated series") {
  const Series one_minus_z = Series::polynomial({RatFunc(1), RatFunc(-1)}, 3);
  CHECK(one_minus_z.inv() == Series::polynomial({1, 1, 1, 1}, 3));

  const RatFunc c = RatFunc::c();
  const Series cz = Series::polynomial({RatFunc(0), c}, 2);
  CHECK(cz.exp().log() == cz);

  // (1 - a r^{-1} z) / (1 - a s^{-1} z)
  const Series q = linear_factor(a / r, 2) * linear_factor(a / s, 2).inv();
  CHECK(q[1] == a * (s.inverse() - r.inverse()));
  CHECK(q[2] == a * a * s.inverse() * (s.inverse() - r.inverse()));

  for (int k = 0; k < 5; ++k) {
    std::vector<RatFunc> c1{RatFunc(1)}, c0{RatFunc(0)};
    for (int j = 1; j <= 8; ++j) {
      c1.push_back(testing::random_poly(2, 1).value());
      c0.push_back(c1.back());
    }
    const Series x(c1), y(c0);
    CHECK(x.log().exp() == x);
    CHECK(y.exp().log() == y);
    CHECK(x * x.inv() == Series::constant(RatFunc(1), 8));
  }
  CHECK_THROWS_AS(Series::polynomial({RatFunc(2), r}, 3).log(), BadConstantTerm);
  CHECK_THROWS_AS(Series::polynomial({RatFunc(1), r}, 3).exp(), BadConstantTerm);
  CHECK_THROWS_AS(Series::polynomial({RatFunc(0), r}, 3).inv(), BadConstantTerm);
  CHECK_THROWS_AS(one_minus_z + Series::polynomial({1, 1}, 3, SeriesVar::u), MixedSeries);
  CHECK_THROWS_AS(one_minus_z * Series::polynomial({1, 1}, 4), MixedSeries);
  CHECK(to_string(one_minus_z) == "1 - z + O(z^4)");
}

TEST_CASE("series order default reads the environment") {
  ::setenv("QAFF_SERIES_ORDER", "5", 1);
  CHECK(default_series_order() == 5);
  ::setenv("QAFF_SERIES_ORDER", "many", 1);
  CHECK(default_series_order() == kDefaultSeriesOrder);
  ::unsetenv("QAFF_SERIES_ORDER");
  CHECK(default_series_order() == kDefaultSeriesOrder);
}

TEST_CASE("exact linear algebra") {
  Matrix m(3, 3);
  m << r, s, RatFunc(1), RatFunc(0), a, r - s, RatFunc(2), RatFunc(0), s * s;
  const Matrix mi = inverse(m);
  CHECK(equal(Matrix(m * mi), identity(3)));
  Vector x(3);
  x << RatFunc(1), a, r / s;
  CHECK(equal(solve(m, Vector(m * x)), x));
  CHECK(rank(m) == 3);

  Matrix sing(2, 2);
  sing << r, s, 2 * r, 2 * s;
  CHECK(rank(sing) == 1);
  CHECK_THROWS_AS(inverse(sing), NoSolution);
  Vector b(2);
  b << RatFunc(1), RatFunc(0);
  CHECK_THROWS_AS(solve(sing, b), NoSolution);  // inconsistent
  Vector b2(2);
  b2 << r, 2 * r;
  CHECK_THROWS_AS(solve(sing, b2), NoSolution);  // underdetermined

  const auto e = rref(sing);
  CHECK(e.rank() == 1);
  CHECK(e.pivots == std::vector<Eigen::Index>{0});
  CHECK(e.m(0, 0) == RatFunc(1));
  CHECK(e.m(0, 1) == s / r);
}
