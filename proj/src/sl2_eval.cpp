#include "qaff/sl2_eval.hpp"

#include "qaff/trunc_series.hpp"

namespace qaff {

namespace {

const RatFunc& r() {
  static const RatFunc v = RatFunc::r();
  return v;
}
const RatFunc& s() {
  static const RatFunc v = RatFunc::s();
  return v;
}

Matrix diag_pow(const Matrix& d, long k) {
  Matrix out = Matrix::Zero(d.rows(), d.cols());
  for (Eigen::Index i = 0; i < d.rows(); ++i) out(i, i) = d(i, i).pow(k);
  return out;
}

void assign_gammas(MatrixModule& m) {
  for (int sg : {1, -1}) {
    m.set(GenSymbol::GammaHalf(sg), identity(m.dim));
    m.set(GenSymbol::GammaPrimeHalf(sg), identity(m.dim));
  }
}

void assign_chevalley(MatrixModule& m, int n, const RatFunc& param) {
  const Sl2Matrices v = sl2_matrices(n);
  m.set(GenSymbol::E(1), v.e);
  m.set(GenSymbol::F(1), v.f);
  m.set(GenSymbol::W(1, 1), v.w);
  m.set(GenSymbol::W(1, -1), v.w_inv);
  m.set(GenSymbol::Wp(1, 1), v.wp);
  m.set(GenSymbol::Wp(1, -1), v.wp_inv);
  m.set(GenSymbol::E(0), (s() / r() * param) * v.f);
  m.set(GenSymbol::F(0), (r() / s() / param) * v.e);
  m.set(GenSymbol::W(0, 1), v.wp);
  m.set(GenSymbol::W(0, -1), v.wp_inv);
  m.set(GenSymbol::Wp(0, 1), v.w);
  m.set(GenSymbol::Wp(0, -1), v.w_inv);
}

std::string factor_between(const Matrix& x, const Matrix& y) {
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      if (x(i, j).is_zero() != y(i, j).is_zero()) return "pattern differs";
      if (!x(i, j).is_zero()) return (y(i, j) / x(i, j)).str();
    }
  return "1";
}

}  // namespace

RatFunc shift_factor(Shift sh) { return sh == Shift::Plain ? RatFunc(1) : r() / s(); }

std::string to_string(Shift sh) { return sh == Shift::Plain ? "plain" : "rs_inverse"; }

Sl2Matrices sl2_matrices(int n) {
  if (n < 0) throw IndexOutOfRange("highest weight must be >= 0");
  const int d = n + 1;
  Sl2Matrices v{zeros(d), zeros(d), zeros(d), zeros(d), zeros(d), zeros(d)};
  for (int i = 0; i <= n; ++i) {
    if (i >= 1) v.e(i - 1, i) = quantum_int(n + 1 - i);
    if (i < n) v.f(i + 1, i) = quantum_int(i + 1);
    v.w(i, i) = RatFunc::monomial(Rational(1), n - i, i);
    v.wp(i, i) = RatFunc::monomial(Rational(1), i, n - i);
    v.w_inv(i, i) = v.w(i, i).inverse();
    v.wp_inv(i, i) = v.wp(i, i).inverse();
  }
  return v;
}

MatrixModule build_Vn(int n) {
  MatrixModule m;
  m.dim = n + 1;
  m.type = AffineType::make(Family::A, 1);
  const Sl2Matrices v = sl2_matrices(n);
  m.set(GenSymbol::E(1), v.e);
  m.set(GenSymbol::F(1), v.f);
  m.set(GenSymbol::W(1, 1), v.w);
  m.set(GenSymbol::W(1, -1), v.w_inv);
  m.set(GenSymbol::Wp(1, 1), v.wp);
  m.set(GenSymbol::Wp(1, -1), v.wp_inv);
  return m;
}

MatrixModule build_chevalley_eval(int n, Shift shift, const RatFunc& a) {
  MatrixModule m;
  m.dim = n + 1;
  m.type = AffineType::make(Family::A, 1);
  assign_chevalley(m, n, shift_factor(shift) * a);
  assign_gammas(m);
  return m;
}

Matrix xplus_action(int n, int k, const RatFunc& param) {
  Matrix x = zeros(n + 1);
  const RatFunc q = r() / s();
  for (int i = 1; i <= n; ++i)
    x(i - 1, i) = param.pow(static_cast<long>(k)) * s().pow(-static_cast<long>(n) * k) *
                  q.pow(-static_cast<long>(k) * i) * quantum_int(n + 1 - i);
  return x;
}

Matrix xminus_action(int n, int k, const RatFunc& param) {
  Matrix x = zeros(n + 1);
  const RatFunc q = r() / s();
  for (int i = 0; i < n; ++i)
    x(i + 1, i) = param.pow(static_cast<long>(k)) * r().pow(static_cast<long>(n) * k) *
                  q.pow(-static_cast<long>(k) * (i + 1)) * quantum_int(i + 1);
  return x;
}

Matrix xplus_via_evaluation(int n, int k, const RatFunc& param) {
  const Sl2Matrices v = sl2_matrices(n);
  const RatFunc c = (s() / r() * param).pow(static_cast<long>(k));
  return c * (diag_pow(v.wp, -k) * v.e);
}

Matrix xminus_via_evaluation(int n, int k, const RatFunc& param) {
  const Sl2Matrices v = sl2_matrices(n);
  const RatFunc c = (s() / r() * param).pow(static_cast<long>(k));
  return c * (v.f * diag_pow(v.w, k));
}

std::pair<std::vector<Matrix>, std::vector<Matrix>> omega_matrices(const EvalModule& em, int mmax) {
  const MatrixModule& m = em.base;
  if (mmax > m.kmax + 1) throw WindowTooSmall("ω(m) needs currents up to " + std::to_string(mmax));
  const RatFunc rms = r() - s();
  std::vector<Matrix> plus{m.at(GenSymbol::W(1, 1))}, minus{m.at(GenSymbol::Wp(1, 1))};
  const Matrix x0p = m.at(GenSymbol::Xp(1, 0)), x0m = m.at(GenSymbol::Xm(1, 0));
  for (int k = 1; k <= mmax; ++k) {
    plus.push_back(rms * commutator(m.at(GenSymbol::Xp(1, k)), x0m));
    minus.push_back(-rms * commutator(x0p, m.at(GenSymbol::Xm(1, -k))));
    if (!is_diagonal(plus.back()) || !is_diagonal(minus.back()))
      throw NotEigenvector("ω(" + std::to_string(k) + ") is not diagonal in the weight basis");
  }
  return {plus, minus};
}

std::pair<std::vector<Matrix>, std::vector<Matrix>> recover_imaginary(const EvalModule& em, int lmax) {
  const auto [plus, minus] = omega_matrices(em, lmax);
  const RatFunc rms = r() - s();
  // ω^{-1} Σ ω(m) z^{-m} = exp((r-s) Σ a(l) z^{-l});
  // ω'^{-1} Σ ω'(-m) z^m = exp(-(r-s) Σ a(-l) z^l).
  auto normalized = [&](const std::vector<Matrix>& ser, Direction dir) {
    const Matrix inv0 = series_traits<Matrix>::invert(ser[0]);
    std::vector<Matrix> c;
    for (const auto& x : ser) c.push_back(inv0 * x);
    return MatrixSeries(std::move(c), SeriesVar::z, dir).log();
  };
  const MatrixSeries lp = normalized(plus, Direction::descending);
  const MatrixSeries lm = normalized(minus, Direction::ascending);
  std::vector<Matrix> ap, am;
  for (int l = 1; l <= lmax; ++l) {
    ap.push_back(lp[l] * rms.inverse());
    am.push_back(-(lm[l] * rms.inverse()));
  }
  return {ap, am};
}

EvalModule build_current_eval(int n, Shift shift, int kmax, const RatFunc& a) {
  if (kmax < 1) throw WindowTooSmall("current modules need kmax >= 1");
  EvalModule em;
  em.n = n;
  em.shift = shift;
  em.param = shift_factor(shift) * a;
  MatrixModule& m = em.base;
  m.dim = n + 1;
  m.type = AffineType::make(Family::A, 1);
  m.kmax = kmax;
  assign_chevalley(m, n, em.param);
  assign_gammas(m);
  for (int k = -kmax - 1; k <= kmax + 1; ++k) {
    const Matrix xp = xplus_action(n, k, em.param), xm = xminus_action(n, k, em.param);
    const Matrix ep = xplus_via_evaluation(n, k, em.param), emn = xminus_via_evaluation(n, k, em.param);
    if (!equal(xp, ep))
      em.diagnostics.push_back("x+(" + std::to_string(k) + "): evaluation/closed = " + factor_between(xp, ep));
    if (!equal(xm, emn))
      em.diagnostics.push_back("x-(" + std::to_string(k) + "): evaluation/closed = " + factor_between(xm, emn));
    m.set(GenSymbol::Xp(1, k), xp);
    m.set(GenSymbol::Xm(1, k), xm);
  }
  const auto [plus, minus] = omega_matrices(em, kmax);
  for (int k = 0; k <= kmax; ++k) {
    m.set(GenSymbol::Wser(1, k), plus[static_cast<std::size_t>(k)]);
    m.set(GenSymbol::Wpser(1, k), minus[static_cast<std::size_t>(k)]);
  }
  const auto [ap, am] = recover_imaginary(em, kmax);
  for (int l = 1; l <= kmax; ++l) {
    m.set(GenSymbol::Aimag(1, l), ap[static_cast<std::size_t>(l - 1)]);
    m.set(GenSymbol::Aimag(1, -l), am[static_cast<std::size_t>(l - 1)]);
  }
  return em;
}

}  // namespace qaff
