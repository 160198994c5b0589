#include <doctest.h>

#include <algorithm>

#include "qaff/sl2_eval.hpp"

using namespace qaff;

namespace {

const RatFunc r = RatFunc::r(), s = RatFunc::s(), a = RatFunc::a();

MatrixModule trivial_module(const AffineType& type) {
  MatrixModule m;
  m.dim = 1;
  m.type = type;
  for (int i = 0; i < type.size(); ++i) {
    m.set(GenSymbol::E(i), zeros(1));
    m.set(GenSymbol::F(i), zeros(1));
    for (int sg : {1, -1}) {
      m.set(GenSymbol::W(i, sg), identity(1));
      m.set(GenSymbol::Wp(i, sg), identity(1));
    }
  }
  return m;
}

const RelationReport& find(const std::vector<RelationReport>& rs, const std::string& id) {
  auto it = std::find_if(rs.begin(), rs.end(), [&](const auto& x) { return x.relation_id == id; });
  REQUIRE(it != rs.end());
  return *it;
}

bool fails_at(const RelationReport& rep, const std::string& prefix) {
  return std::any_of(rep.failures.begin(), rep.failures.end(),
                     [&](const Failure& f) { return f.instance.rfind(prefix, 0) == 0; });
}

}  // namespace

TEST_CASE("generator symbols round-trip through text") {
  const std::vector<GenSymbol> syms{GenSymbol::E(0),        GenSymbol::F(3),           GenSymbol::W(1, -1),
                                    GenSymbol::Wp(2),       GenSymbol::GammaHalf(-1),  GenSymbol::GammaPrimeHalf(),
                                    GenSymbol::Xp(1, -3),   GenSymbol::Xm(1, 2),       GenSymbol::Aimag(1, -2),
                                    GenSymbol::Wser(1, 4),  GenSymbol::Wpser(1, 3)};
  for (const auto& g : syms) CHECK(GenSymbol::parse(g.str()) == g);
  CHECK(GenSymbol::Wpser(1, 2).str() == "Wpser(1,-2)");
  CHECK_THROWS_AS(GenSymbol::Aimag(1, 0), IndexOutOfRange);
  CHECK_THROWS_AS(GenSymbol::parse("Q(1)"), ParseError);
}

TEST_CASE("negative-order series generators are zero") {
  const EvalModule em = build_current_eval(1, Shift::Plain, 1);
  CHECK(is_zero(em.base.at(GenSymbol::Wser(1, -1))));
  CHECK(is_zero(em.base.at(GenSymbol::Wpser(1, -2))));
  CHECK_THROWS_AS(em.base.at(GenSymbol::Xp(1, 5)), MissingGenerator);
}

TEST_CASE("trivial module satisfies the Chevalley relations of every type") {
  for (const char* name : {"A1", "A4", "B3", "C3", "D5", "E6", "F4", "G2"}) {
    CAPTURE(name);
    const MatrixModule m = trivial_module(AffineType::parse(name));
    CHECK(all_passed(check_chevalley(m)));
  }
}

TEST_CASE("evaluation modules satisfy the Chevalley relations") {
  for (int n = 0; n <= 4; ++n)
    for (Shift sh : {Shift::Plain, Shift::RsInverse}) {
      CAPTURE(n);
      const auto reps = check_chevalley(build_chevalley_eval(n, sh));
      CHECK(all_passed(reps));
      CHECK(find(reps, "R1").instances_checked == 7);
      CHECK(find(reps, "R2").instances_checked == 4);
      CHECK(find(reps, "R3").instances_checked == 4);
      CHECK(find(reps, "R4").instances_checked == 2);
    }
  CHECK(all_passed(check_chevalley(build_Vn(3), build_pairing(AffineType::parse("A1")), {1})));
}

TEST_CASE("doubling e_1 breaks the commutator relation") {
  MatrixModule m = build_chevalley_eval(2, Shift::Plain);
  m.set(GenSymbol::E(1), RatFunc(2) * m.at(GenSymbol::E(1)));
  const auto reps = check_chevalley(m);
  CHECK_FALSE(find(reps, "R3").passed());
  CHECK(fails_at(find(reps, "R3"), "i=1,j=1"));
  CHECK_FALSE(fails_at(find(reps, "R3"), "i=0,j=1"));
}

TEST_CASE("missing generators are reported") {
  MatrixModule m = build_chevalley_eval(1, Shift::Plain);
  m.assign.erase(GenSymbol::F(0));
  CHECK_THROWS_AS(check_chevalley(m), MissingGenerator);
  CHECK_THROWS_AS(check_drinfeld(build_current_eval(1, Shift::Plain, 2).base, 3, 1), WindowTooSmall);
}

TEST_CASE("instance counts match the window combinatorics") {
  for (int K = 1; K <= 3; ++K)
    for (int L = 1; L <= K; ++L) {
      const auto reps = check_drinfeld(build_current_eval(0, Shift::Plain, K).base, K, L);
      long d5 = 0, d7 = 0;
      for (int l = -L; l <= L; ++l)
        for (int k = -K; k <= K; ++k)
          if (l != 0 && std::abs(l + k) <= K + 1) d5 += 2;
      for (int k = -K; k <= K; ++k)
        for (int kp = -K; kp <= K; ++kp)
          if (std::abs(k + kp) <= K) ++d7;
      CHECK(find(reps, "D2").instances_checked == 4L * L * L);
      CHECK(find(reps, "D5").instances_checked == d5);
      CHECK(find(reps, "D6").instances_checked == 2L * (2 * K + 2) * (2 * K + 2));
      CHECK(find(reps, "D7").instances_checked == d7);
      for (const char* id : {"D8_1", "D8_2", "D8_3"}) CHECK(find(reps, id).instances_checked == 0);
    }
}

TEST_CASE("the one-dimensional current module satisfies every current relation") {
  CHECK(all_passed(check_drinfeld(build_current_eval(0, Shift::Plain, 4).base, 4, 4)));
  CHECK(all_passed(check_drinfeld(build_current_eval(0, Shift::RsInverse, 4).base, 4, 4)));
}

TEST_CASE("current relations on evaluation modules") {
  // D1-D4, D6 and D8 hold; D5 and D7 do not with central elements acting trivially.
  for (int n = 1; n <= 3; ++n)
    for (Shift sh : {Shift::Plain, Shift::RsInverse}) {
      CAPTURE(n);
      const auto reps = check_drinfeld(build_current_eval(n, sh, 4).base, 4, 3);
      for (const char* id : {"D1", "D2", "D3", "D4", "D6", "D8_1", "D8_2", "D8_3"}) CHECK(find(reps, id).passed());
      CHECK_FALSE(find(reps, "D5").passed());
      CHECK_FALSE(find(reps, "D7").passed());
      CHECK_FALSE(fails_at(find(reps, "D7"), "i=1,j=1,k=1,k'=0"));
      CHECK_FALSE(fails_at(find(reps, "D7"), "i=1,j=1,k=0,k'=0"));
    }
}

TEST_CASE("minimal witness of the level mismatch") {
  const EvalModule em = build_current_eval(1, Shift::Plain, 2);
  const MatrixModule& m = em.base;
  const Matrix c = commutator(m.at(GenSymbol::Xp(1, 1)), m.at(GenSymbol::Xm(1, -1)));
  const Matrix w = (m.at(GenSymbol::W(1)) - m.at(GenSymbol::Wp(1))) * (r - s).inverse();
  CHECK(equal(c, Matrix((r * s).inverse() * w)));
  CHECK(w(0, 0) == RatFunc(1));
  CHECK(fails_at(find(check_drinfeld(m, 2, 1), "D7"), "i=1,j=1,k=1,k'=-1"));
}

TEST_CASE("commutator of x+(1) and x-(0) is w(1)/(r-s)") {
  const EvalModule em = build_current_eval(1, Shift::RsInverse, 2);
  const Matrix c = commutator(em.base.at(GenSymbol::Xp(1, 1)), em.base.at(GenSymbol::Xm(1, 0)));
  CHECK(equal(c, Matrix(em.base.at(GenSymbol::Wser(1, 1)) * (r - s).inverse())));
}

TEST_CASE("zeroing x+(1) breaks the imaginary ladder") {
  MatrixModule m = build_current_eval(1, Shift::RsInverse, 4).base;
  m.set(GenSymbol::Xp(1, 1), zeros(2));
  const auto reps = check_drinfeld(m, 4, 3);
  CHECK(fails_at(find(reps, "D5"), "i=1,j=1,l=1,k=0"));
}

TEST_CASE("apply_word") {
  const MatrixModule v2 = build_Vn(2);
  const Vector v0 = basis_vector(3, 0);
  CHECK(equal(apply_word(v2, {}, v0), v0));
  CHECK(equal(apply_word(v2, {GenSymbol::F(1)}, v0), basis_vector(3, 1)));
  for (int n = 1; n <= 4; ++n) {
    const MatrixModule v = build_Vn(n);
    const Vector u = basis_vector(n + 1, 0);
    const Vector ef = apply_word(v, {GenSymbol::E(1), GenSymbol::F(1)}, u);
    const Vector fe = apply_word(v, {GenSymbol::F(1), GenSymbol::E(1)}, u);
    CHECK(equal(Vector(ef - fe), Vector(quantum_int(n) * u)));
  }
  const std::vector<GenSymbol> w1{GenSymbol::E(1), GenSymbol::W(1)}, w2{GenSymbol::F(1), GenSymbol::Wp(1, -1)};
  std::vector<GenSymbol> both = w1;
  both.insert(both.end(), w2.begin(), w2.end());
  const Vector v1 = basis_vector(3, 1);
  CHECK(equal(apply_word(v2, both, v1), apply_word(v2, w1, apply_word(v2, w2, v1))));
  CHECK_THROWS_AS(apply_word(v2, {GenSymbol::E(0)}, v0), MissingGenerator);
}
