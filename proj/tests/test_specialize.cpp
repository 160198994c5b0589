#include <doctest.h>

#include "qaff/sl2_eval.hpp"
#include "qaff/specialize.hpp"

using namespace qaff;

namespace {

const RatFunc r = RatFunc::r(), s = RatFunc::s(), q = RatFunc::var(Var::q);

Matrix mat2(const RatFunc& x00, const RatFunc& x01, const RatFunc& x10, const RatFunc& x11) {
  Matrix m = zeros(2);
  m(0, 0) = x00;
  m(0, 1) = x01;
  m(1, 0) = x10;
  m(1, 1) = x11;
  return m;
}

}  // namespace

TEST_CASE("map parsing") {
  CHECK(SpecMap::parse("s=r").kind == SpecMap::Kind::SToR);
  for (const char* t : {"s=r^-1", "s=r^(-1)", "s=1/r"}) CHECK(SpecMap::parse(t).kind == SpecMap::Kind::SToRInverse);
  const SpecMap m = SpecMap::parse("r=s^3");
  CHECK(m.kind == SpecMap::Kind::RToSPow);
  CHECK(m.k == 3);
  CHECK(SpecMap::parse(m.str()).k == 3);
  CHECK(SpecMap::parse(SpecMap::s_to_r_inverse().str()).kind == SpecMap::Kind::SToRInverse);
  CHECK_THROWS_AS(SpecMap::parse("r=s"), Unsupported);
  CHECK_THROWS_AS(SpecMap::parse("r=s^1"), Unsupported);
  CHECK_THROWS_AS(SpecMap::parse("t=r"), ParseError);
}

TEST_CASE("specialized A1 tables") {
  const PairingTable t = build_pairing(AffineType::parse("A1"));
  CHECK(equal(specialize_table(t, SpecMap::s_to_r()).entries, mat2(RatFunc(1), RatFunc(1), RatFunc(1), RatFunc(1))));
  CHECK(equal(specialize_table(t, SpecMap::s_to_r_inverse()).entries,
              mat2(r.pow(2L), r.pow(-2L), r.pow(-2L), r.pow(2L))));
  const PairingTable tq = specialize_table(t, SpecMap::r_to_s_pow(3));
  CHECK(equal(tq.entries, mat2(q.pow(2L), q.pow(-2L), q.pow(-2L), q.pow(2L))));
  CHECK(tq.r == q.pow(3L));
  CHECK(tq.s == q);
}

TEST_CASE("r -> s^k in the variable q") {
  // q^2 = r s^{-1} for every admissible k.
  for (int k : {-3, -1, 0, 2, 3, 4, 7}) {
    CAPTURE(k);
    const SpecMap m = SpecMap::r_to_s_pow(k);
    const RatFunc rq = specialize(r, m), sq = specialize(s, m);
    CHECK(rq / sq == q.pow(2L));
    CHECK(rq == sq.pow(static_cast<long>(k)));
  }
  CHECK_THROWS_AS(SpecMap::r_to_s_pow(6).substitution(), LatticeOverflow);
  CHECK_THROWS_AS(SpecMap::r_to_s_pow(1), Unsupported);
}

TEST_CASE("poles are reported") {
  CHECK_THROWS_AS(specialize((r - s).inverse(), SpecMap::s_to_r()), SpecializationPole);
  CHECK_THROWS_AS(specialize((r * s - RatFunc(1)).inverse(), SpecMap::s_to_r_inverse()), SpecializationPole);
  CHECK(specialize(quantum_int(3), SpecMap::s_to_r()) == RatFunc(3) * r.pow(2L));
}

TEST_CASE("s -> r: the classical limit") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const MatrixModule m = specialize_module(build_Vn(n), SpecMap::s_to_r());
    const Matrix e = m.at(GenSymbol::E(1));
    for (int i = 0; i <= n; ++i) {
      CHECK(m.at(GenSymbol::W(1))(i, i) == r.pow(static_cast<long>(n)));
      if (i >= 1) CHECK(e(i - 1, i) == RatFunc(n + 1 - i) * r.pow(static_cast<long>(n - i)));
    }
    CHECK(check_centrality(m).empty());
    for (int d : closure_dimensions(m)) CHECK(d == n + 1);
    const PairingTable t = specialize_table(build_pairing(m.type), SpecMap::s_to_r());
    CHECK(all_passed(check_chevalley(m, t, {1})));
  }
  // The currents' ω(k), k >= 1, all carry a factor r - s.
  const EvalModule em = build_current_eval(2, Shift::Plain, 2);
  for (int k = 1; k <= 2; ++k) CHECK(is_zero(specialize(em.base.at(GenSymbol::Wser(1, k)), SpecMap::s_to_r())));
}

TEST_CASE("s -> r^{-1}: one-parameter relations with q = r") {
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    const MatrixModule m = specialize_module(build_Vn(n), SpecMap::s_to_r_inverse());
    const Matrix K = m.at(GenSymbol::W(1)), Ki = m.at(GenSymbol::W(1, -1));
    const Matrix e = m.at(GenSymbol::E(1)), f = m.at(GenSymbol::F(1));
    CHECK(equal(m.at(GenSymbol::Wp(1)), Ki));
    CHECK(equal(Matrix(K * e * Ki), Matrix(r.pow(2L) * e)));
    CHECK(equal(Matrix(K * f * Ki), Matrix(r.pow(-2L) * f)));
    CHECK(equal(commutator(e, f), Matrix((K - Ki) * (r - r.inverse()).inverse())));
    if (n > 0) CHECK_FALSE(check_centrality(m).empty());
    const PairingTable t = specialize_table(build_pairing(m.type), SpecMap::s_to_r_inverse());
    CHECK(all_passed(check_chevalley(m, t, {1})));
  }
  const MatrixModule aff = specialize_module(build_chevalley_eval(2, Shift::Plain), SpecMap::s_to_r_inverse());
  CHECK(all_passed(check_chevalley(aff, specialize_table(build_pairing(aff.type), SpecMap::s_to_r_inverse()))));
}
