#include "qaff/drinfeld_poly.hpp"

#include <sstream>

#include "qaff/exact_linalg.hpp"

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

// Σ coeffs[k] t^k expanded to order N.
Series as_series(const PolyCoeffs& p, int order, SeriesVar var, Direction dir) {
  return Series::polynomial(p, order, var, dir);
}

// c_m = p_{deg - m}: the polynomial read from the top, i.e. z^{-deg} p(z) in z^{-1}.
PolyCoeffs reversed(const PolyCoeffs& p) { return PolyCoeffs(p.rbegin(), p.rend()); }

std::string first_residual(const Series& diff) {
  for (int k = 0; k <= diff.order(); ++k)
    if (!diff[k].is_zero()) return "u^" + std::to_string(k) + ": " + diff[k].str();
  return "";
}

PolyCoeffs linear(const RatFunc& c) { return {RatFunc(1), -c}; }

}  // namespace

PolyCoeffs poly_mul(const PolyCoeffs& x, const PolyCoeffs& y) {
  PolyCoeffs out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

PolyCoeffs poly_scale(const PolyCoeffs& p, const RatFunc& c) {
  PolyCoeffs out = p;
  RatFunc ck(1);
  for (auto& x : out) {
    x *= ck;
    ck *= c;
  }
  return out;
}

std::string render_poly(const PolyCoeffs& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const RatFunc& c = p[k];
    if (c.is_zero()) continue;
    const std::string pw = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (c.is_monomial()) {
      const bool neg = sgn(c.num().lead().coeff) < 0;
      const RatFunc mag = neg ? -c : c;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (k == 0)
        os << mag.str();
      else if (mag.is_one())
        os << pw;
      else
        os << mag.str() << '*' << pw;
    } else {
      os << (first ? "" : " + ") << '(' << c.str() << ')' << (k == 0 ? "" : "*" + pw);
    }
    first = false;
  }
  return first ? "0" : os.str();
}

std::string DrinfeldPoly::str() const { return render_poly(coeffs, "z"); }
std::string DrinfeldPoly::mirror_str() const { return render_poly(mirror, "z"); }

DrinfeldPoly DrinfeldPoly::from_coeffs(std::vector<RatFunc> coeffs) {
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty() || !coeffs[0].is_one()) throw BadConstantTerm("a Drinfeld polynomial has constant term 1");
  DrinfeldPoly p;
  p.coeffs = std::move(coeffs);
  p.mirror = poly_scale(p.coeffs, (r() * s()).pow(static_cast<long>(p.degree())));
  return p;
}

HwSeries extract_hw_series(const EvalModule& m, int order) {
  const auto [plus, minus] = omega_matrices(m, order);
  const Vector v0 = basis_vector(m.base.dim, 0);
  std::vector<RatFunc> cp, cm;
  for (int k = 0; k <= order; ++k) {
    for (const auto* ser : {&plus, &minus}) {
      const Vector img = (*ser)[static_cast<std::size_t>(k)] * v0;
      for (Eigen::Index j = 1; j < img.size(); ++j)
        if (!img(j).is_zero()) throw NotEigenvector("v_0 is not an eigenvector of ω-series term " + std::to_string(k));
    }
    cp.push_back(plus[static_cast<std::size_t>(k)](0, 0));
    cm.push_back(minus[static_cast<std::size_t>(k)](0, 0));
  }
  return {Series(cp, SeriesVar::z, Direction::ascending), Series(cm, SeriesVar::z, Direction::descending), m.n};
}

DrinfeldPoly closed_form_P(int n, Shift shift, const RatFunc& a) {
  const RatFunc param = shift_factor(shift) * a;
  PolyCoeffs p{RatFunc(1)};
  for (int k = 1; k <= n; ++k)
    p = poly_mul(p, linear(param * (s() / r()).pow(static_cast<long>(k)) / r() * s().pow(-static_cast<long>(n))));
  return DrinfeldPoly::from_coeffs(std::move(p));
}

Series plus_series_of(const DrinfeldPoly& p, int order) {
  const long d = p.degree();
  const Series num = as_series(poly_scale(p.coeffs, s()), order, SeriesVar::z, Direction::ascending);
  const Series den = as_series(poly_scale(p.coeffs, r()), order, SeriesVar::z, Direction::ascending);
  return num * den.inv() * r().pow(d);
}

Series minus_series_of(const DrinfeldPoly& p, int order) {
  // Q(sz)/Q(rz) = rev(Q(s.))(z^{-1}) / rev(Q(r.))(z^{-1}) for deg Q = deg P.
  const long d = p.degree();
  const Series num = as_series(reversed(poly_scale(p.mirror, s())), order, SeriesVar::z, Direction::descending);
  const Series den = as_series(reversed(poly_scale(p.mirror, r())), order, SeriesVar::z, Direction::descending);
  return num * den.inv() * r().pow(d);
}

DrinfeldPoly reconstruct_P(const HwSeries& h) {
  const int n = h.n;
  const int N = h.plus.order();
  if (!(h.plus[0] == r().pow(static_cast<long>(n))))
    throw NoSolution("Φ+_0 = " + h.plus[0].str() + " is not r^" + std::to_string(n));
  PolyCoeffs p{RatFunc(1)};
  if (n > 0) {
    if (N < n) throw WindowTooSmall("need at least " + std::to_string(n) + " plus coefficients");
    // z^k: sum_{j=1}^{min(k,n)} (r^j Φ_{k-j} - [j=k] r^n s^k) p_j = -Φ_k.
    Matrix a = Matrix::Zero(N, n);
    Vector b(N);
    const RatFunc rn = r().pow(static_cast<long>(n));
    for (int k = 1; k <= N; ++k) {
      for (int j = 1; j <= std::min(k, n); ++j) {
        RatFunc v = r().pow(static_cast<long>(j)) * h.plus[k - j];
        if (j == k) v -= rn * s().pow(static_cast<long>(k));
        a(k - 1, j - 1) = v;
      }
      b(k - 1) = -h.plus[k];
    }
    const Vector x = solve(a, b);
    for (int j = 0; j < n; ++j) p.push_back(x(j));
    if (p.back().is_zero()) throw NoSolution("reconstructed polynomial drops degree");
  }
  DrinfeldPoly out = DrinfeldPoly::from_coeffs(std::move(p));
  if (!(minus_series_of(out, h.minus.order()) == h.minus))
    throw MirrorMismatch("minus series differs from r^deg Q(sz)/Q(rz) with Q(z) = P((rs)^deg z)");
  return out;
}

std::pair<Series, Series> weight_gamma_series(const EvalModule& m, int i, int order) {
  if (i < 0 || i > m.n) throw IndexOutOfRange("weight index " + std::to_string(i));
  const auto [plus, minus] = omega_matrices(m, order);
  std::vector<RatFunc> cp, cm;
  for (int k = 0; k <= order; ++k) {
    cp.push_back(plus[static_cast<std::size_t>(k)](i, i));
    cm.push_back(minus[static_cast<std::size_t>(k)](i, i));
  }
  return {Series(cp, SeriesVar::u, Direction::ascending), Series(cm, SeriesVar::u, Direction::descending)};
}

std::vector<RQResult> verify_RQ_form(const EvalModule& m, int order, RQOptions opt) {
  const int n = m.n;
  const RatFunc a = m.param / shift_factor(Shift::RsInverse);
  std::vector<RQResult> out;
  for (int i = 0; i <= n; ++i) {
    PolyCoeffs R{RatFunc(1)}, Q{RatFunc(1)};
    for (int j = 1; j <= n; ++j) R = poly_mul(R, linear(a * RatFunc::monomial(1, -j, j - n - 1)));
    for (int j = 1; j <= i; ++j) {
      Q = poly_mul(Q, linear(a * RatFunc::monomial(1, -j, j - n - 1)));
      if (!(opt.drop_q_factor && j == 1)) Q = poly_mul(Q, linear(a * RatFunc::monomial(1, 1 - j, j - n - 2)));
    }
    const long degR = static_cast<long>(R.size()) - 1, degQ = static_cast<long>(Q.size()) - 1;
    RQResult res;
    res.i = i;
    // r^{deg R - deg Q/2} s^{deg Q/2}; odd deg Q (mutations only) uses half powers.
    const RatFunc printed = RatFunc::monomial(1, Rational(degR) - frac(degQ, 2), frac(degQ, 2));
    const RatFunc proof = RatFunc::monomial(1, n - i, i);
    res.prefactor_consistent = printed == proof;
    auto ser = [&](const PolyCoeffs& p, const RatFunc& c) {
      return Series::polynomial(poly_scale(p, c), order, SeriesVar::u, Direction::ascending);
    };
    const Series expected = ser(R, s()) * ser(Q, r()) * (ser(R, r()) * ser(Q, s())).inv() * printed;
    const Series actual = weight_gamma_series(m, i, order).first;
    const Series diff = actual - expected;
    res.residual = first_residual(diff);
    res.passed = res.residual.empty();
    out.push_back(res);
  }
  return out;
}

bool check_multiplicativity(int n1, int n2, int order) {
  const EvalModule m1 = build_current_eval(n1, Shift::Plain, std::max(order, 1), RatFunc::a());
  const EvalModule m2 = build_current_eval(n2, Shift::Plain, std::max(order, 1), RatFunc::b());
  const Series prod = extract_hw_series(m1, order).plus * extract_hw_series(m2, order).plus;
  const DrinfeldPoly p1 = closed_form_P(n1, Shift::Plain, RatFunc::a());
  const DrinfeldPoly p2 = closed_form_P(n2, Shift::Plain, RatFunc::b());
  const DrinfeldPoly p12 = DrinfeldPoly::from_coeffs(poly_mul(p1.coeffs, p2.coeffs));
  return prod == plus_series_of(p12, order);
}

}  // namespace qaff
