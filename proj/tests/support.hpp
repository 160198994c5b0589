#pragma once

// Shared helpers for the unit tests: seeded random values and an independent
// numeric evaluator used as an oracle for the symbolic arithmetic.

#include <random>
#include <vector>

#include "qaff/rational_function.hpp"

namespace qaff::testing {

inline std::mt19937& rng() {
  static std::mt19937 g(20240613u);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// A random Laurent polynomial in r, s, a with small integer data, kept as a
/// term list so the test can evaluate it independently of the library.
struct RawPoly {
  struct T {
    long c;
    int er, es, ea;
  };
  std::vector<T> terms;

  RatFunc value() const {
    RatFunc x;
    for (const auto& t : terms) x += RatFunc::monomial(t.c, t.er, t.es, t.ea);
    return x;
  }
  Rational eval(const Rational& r, const Rational& s, const Rational& a) const {
    auto ipow = [](const Rational& b, int e) {
      Rational out = 1;
      for (int k = 0; k < std::abs(e); ++k) out *= b;
      return e < 0 ? Rational(1 / out) : out;
    };
    Rational out = 0;
    for (const auto& t : terms) out += t.c * ipow(r, t.er) * ipow(s, t.es) * ipow(a, t.ea);
    return out;
  }
};

inline RawPoly random_poly(int max_terms = 3, int max_exp = 2) {
  RawPoly p;
  const int n = uniform(1, max_terms);
  for (int k = 0; k < n; ++k) {
    long c = uniform(-4, 4);
    if (c == 0) c = 1;
    p.terms.push_back({c, uniform(-max_exp, max_exp), uniform(-max_exp, max_exp), uniform(0, 1)});
  }
  return p;
}

inline Substitution numeric_point(const Rational& r, const Rational& s, const Rational& a) {
  Substitution sub;
  sub.set(Var::r, RatFunc(r)).set(Var::s, RatFunc(s)).set(Var::a, RatFunc(a));
  return sub;
}

}  // namespace qaff::testing
