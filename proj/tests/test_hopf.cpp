#include <doctest.h>

#include "qaff/hopf.hpp"
#include "qaff/sl2_eval.hpp"

using namespace qaff;

namespace {

const RatFunc r = RatFunc::r(), s = RatFunc::s(), a = RatFunc::a(), b = RatFunc::b(), c = RatFunc::c();

Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix out = zeros(static_cast<int>(x.rows() * y.rows()));
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero())
        for (Eigen::Index k = 0; k < y.rows(); ++k)
          for (Eigen::Index l = 0; l < y.cols(); ++l) out(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
  return out;
}

MatrixModule trivial_a1() {
  MatrixModule m;
  m.dim = 1;
  m.type = AffineType::parse("A1");
  for (int i : {0, 1}) {
    m.set(GenSymbol::E(i), zeros(1));
    m.set(GenSymbol::F(i), zeros(1));
    for (int sg : {1, -1}) {
      m.set(GenSymbol::W(i, sg), identity(1));
      m.set(GenSymbol::Wp(i, sg), identity(1));
    }
  }
  for (int sg : {1, -1}) {
    m.set(GenSymbol::GammaHalf(sg), identity(1));
    m.set(GenSymbol::GammaPrimeHalf(sg), identity(1));
  }
  return m;
}

bool same_assignments(const MatrixModule& x, const MatrixModule& y) {
  if (x.assign.size() != y.assign.size()) return false;
  for (const auto& [g, mat] : x.assign)
    if (!y.has(g) || !equal(mat, y.at(g))) return false;
  return true;
}

}  // namespace

TEST_CASE("coproduct against Kronecker products") {
  const MatrixModule v1 = build_chevalley_eval(1, Shift::Plain, a), v2 = build_chevalley_eval(2, Shift::Plain, b);
  const TensorModule t = tensor(v1, v2);
  CHECK(t.dim() == 6);
  for (int i : {0, 1}) {
    const auto at1 = [&](const GenSymbol& g) { return v1.at(g); };
    const auto at2 = [&](const GenSymbol& g) { return v2.at(g); };
    CHECK(equal(t.module.at(GenSymbol::E(i)),
                Matrix(kron(at1(GenSymbol::E(i)), identity(3)) + kron(at1(GenSymbol::W(i)), at2(GenSymbol::E(i))))));
    CHECK(equal(t.module.at(GenSymbol::F(i)),
                Matrix(kron(identity(2), at2(GenSymbol::F(i))) + kron(at1(GenSymbol::F(i)), at2(GenSymbol::Wp(i))))));
    CHECK(equal(t.module.at(GenSymbol::W(i, -1)), kron(at1(GenSymbol::W(i, -1)), at2(GenSymbol::W(i, -1)))));
  }
}

TEST_CASE("small tensor examples") {
  const MatrixModule v1 = build_chevalley_eval(1, Shift::Plain);
  const TensorModule t = tensor(v1, v1);
  const Vector v00 = tensor_vector(basis_vector(2, 0), basis_vector(2, 0));
  const Vector v10 = tensor_vector(basis_vector(2, 1), basis_vector(2, 0));
  CHECK(equal(Vector(t.module.at(GenSymbol::W(1)) * v00), Vector((r * r) * v00)));
  CHECK(equal(Vector(t.module.at(GenSymbol::E(1)) * v10), v00));
  const MatrixModule triv = trivial_a1();
  CHECK(same_assignments(tensor(triv, v1).module, v1));
  CHECK(same_assignments(tensor(v1, triv).module, v1));
}

TEST_CASE("tensor products of evaluation modules are modules") {
  for (int n1 : {1, 2})
    for (int n2 : {1, 2}) {
      CAPTURE(n1);
      CAPTURE(n2);
      const TensorModule t =
          tensor(build_chevalley_eval(n1, Shift::Plain, a), build_chevalley_eval(n2, Shift::RsInverse, b));
      CHECK(all_passed(check_chevalley(t.module)));
      CHECK(check_antipode(t.module).empty());
      const Vector hw = tensor_vector(basis_vector(n1 + 1, 0), basis_vector(n2 + 1, 0));
      CHECK(span_closure(t.module, hw).size() == static_cast<std::size_t>(t.dim()));
    }
}

TEST_CASE("closure at the resonant point is recorded") {
  const MatrixModule v = build_chevalley_eval(1, Shift::Plain, a);
  const TensorModule t = tensor(v, v);
  const auto cl = span_closure(t.module, tensor_vector(basis_vector(2, 0), basis_vector(2, 0)));
  MESSAGE("V_1(a) (x) V_1(a): closure of the top vector has dimension " << cl.size());
  CHECK(span_closure(t.module, Vector(zeros(4).col(0))).empty());
}

TEST_CASE("span closure is reduced and invariant") {
  const TensorModule t = tensor(build_chevalley_eval(1, Shift::Plain, a), build_chevalley_eval(1, Shift::Plain, b));
  const auto rows = span_closure(t.module, tensor_vector(basis_vector(2, 1), basis_vector(2, 1)));
  Eigen::Index last = -1;
  for (const auto& v : rows) {
    Eigen::Index p = 0;
    while (v(p).is_zero()) ++p;
    CHECK(p > last);
    CHECK(v(p).is_one());
    for (const auto& w : rows)
      if (&w != &v) CHECK(w(p).is_zero());
    last = p;
  }
}

TEST_CASE("antipode on single modules and mismatched tensors") {
  for (int n = 0; n <= 3; ++n) CHECK(check_antipode(build_chevalley_eval(n, Shift::Plain)).empty());
  MatrixModule bad = build_chevalley_eval(2, Shift::Plain);
  bad.set(GenSymbol::W(1, -1), identity(3));
  CHECK_FALSE(check_antipode(bad).empty());

  MatrixModule a2 = trivial_a1();
  a2.type = AffineType::parse("A2");
  CHECK_THROWS_AS(tensor(trivial_a1(), a2), TypeMismatch);
  MatrixModule leveled = trivial_a1();
  leveled.set(GenSymbol::GammaHalf(1), RatFunc(2) * identity(1));
  CHECK_THROWS_AS(tensor(leveled, trivial_a1()), TypeMismatch);
}

TEST_CASE("a_sigma twists") {
  const MatrixModule m = build_chevalley_eval(2, Shift::Plain);
  CHECK(same_assignments(twist(m, ASigma{{1, 1}}), m));
  const MatrixModule t = twist(m, ASigma{{-1, 1}});
  CHECK(equal(t.at(GenSymbol::E(0)), Matrix(RatFunc(-1) * m.at(GenSymbol::E(0)))));
  CHECK(equal(t.at(GenSymbol::F(0)), m.at(GenSymbol::F(0))));
  CHECK(equal(t.at(GenSymbol::W(0)), Matrix(RatFunc(-1) * m.at(GenSymbol::W(0)))));
  CHECK(all_passed(check_chevalley(t)));
  const MatrixModule cur = twist(build_current_eval(1, Shift::Plain, 2).base, ASigma{{1, -1}});
  CHECK_FALSE(cur.has(GenSymbol::Xp(1, 0)));
  CHECK(cur.kmax == 0);
}

TEST_CASE("Gamma_2 is the spectral shift a -> c a") {
  const MatrixModule m = build_current_eval(1, Shift::Plain, 2, a).base;
  const MatrixModule shifted = build_current_eval(1, Shift::Plain, 2, c * a).base;
  CHECK(same_assignments(twist(m, Gamma2{}), shifted));
  // Group law.
  CHECK(same_assignments(twist(twist(m, Gamma2{b}), Gamma2{c}), twist(m, Gamma2{b * c})));
  CHECK(same_assignments(twist(m, Gamma2{RatFunc(1)}), m));
}

TEST_CASE("Gamma_1 is an involution matching a -> -a on currents") {
  const MatrixModule m = build_current_eval(2, Shift::RsInverse, 2, a).base;
  const MatrixModule g = twist(m, Gamma1{});
  CHECK(same_assignments(twist(g, Gamma1{}), m));
  const MatrixModule neg = build_current_eval(2, Shift::RsInverse, 2, -a).base;
  for (int k = -2; k <= 2; ++k) {
    CHECK(equal(g.at(GenSymbol::Xp(1, k)), neg.at(GenSymbol::Xp(1, k))));
    CHECK(equal(g.at(GenSymbol::Xm(1, k)), neg.at(GenSymbol::Xm(1, k))));
  }
  CHECK(all_passed(check_chevalley(g)));
}

TEST_CASE("twists require the right generators") {
  CHECK_THROWS_AS(twist(build_chevalley_eval(1, Shift::Plain), Gamma1{}), MissingGenerator);
  CHECK_THROWS_AS(twist(build_chevalley_eval(1, Shift::Plain), Gamma2{}), MissingGenerator);
  CHECK(to_string(Automorphism{Gamma1{}}) == "Gamma1");
}

TEST_CASE("mutations are caught") {
  const MatrixModule m = build_current_eval(1, Shift::Plain, 2).base;
  CHECK_FALSE(all_passed(check_chevalley(mutate(m, "e1"))));
  CHECK_FALSE(all_passed(check_chevalley(mutate(m, "omega"))));
  const auto base = check_drinfeld(m, 2, 1), bad = check_drinfeld(mutate(m, "xplus"), 2, 1);
  std::size_t nb = 0, nm = 0;
  for (const auto& x : base) nb += x.failures.size();
  for (const auto& x : bad) nm += x.failures.size();
  CHECK(nm > nb);
  CHECK_THROWS_AS(mutate(m, "nothing"), Unsupported);
}
