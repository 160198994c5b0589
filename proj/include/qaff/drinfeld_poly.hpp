#pragma once

// Highest-weight eigenvalue series of evaluation modules and their Drinfeld
// polynomials: Σ Φ+_k z^k = r^{deg P} P(sz)/P(rz) and, about infinity,
// Σ Φ-_{-k} z^{-k} = r^{deg P} Q(sz)/Q(rz) with Q(z) = P((rs)^{deg P} z).

#include <string>
#include <utility>
#include <vector>

#include "qaff/sl2_eval.hpp"
#include "qaff/trunc_series.hpp"

namespace qaff {

struct HwSeries {
  Series plus;   // ascending in z
  Series minus;  // descending in z
  int n = 0;
};

/// Polynomial in z over RatFunc, constant term 1.
struct DrinfeldPoly {
  std::vector<RatFunc> coeffs;  // coeffs[k] multiplies z^k
  std::vector<RatFunc> mirror;  // Q(z) = P((rs)^deg z)

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string str() const;
  std::string mirror_str() const;
  /// Builds the mirror; throws BadConstantTerm unless coeffs[0] = 1.
  static DrinfeldPoly from_coeffs(std::vector<RatFunc> coeffs);
  friend bool operator==(const DrinfeldPoly& x, const DrinfeldPoly& y) { return x.coeffs == y.coeffs; }
};

using PolyCoeffs = std::vector<RatFunc>;
PolyCoeffs poly_mul(const PolyCoeffs& x, const PolyCoeffs& y);
/// p(c z).
PolyCoeffs poly_scale(const PolyCoeffs& p, const RatFunc& c);
std::string render_poly(const PolyCoeffs& p, const std::string& var);

/// Eigenvalues of ω(k), ω'(-k) on v_0 for k <= order.
HwSeries extract_hw_series(const EvalModule& m, int order);

/// Π_{k=1}^n (1 - a'(r^{-1}s)^k r^{-1} s^{-n} z), a' = shift * a.
DrinfeldPoly closed_form_P(int n, Shift shift, const RatFunc& a = RatFunc::a());

/// r^{deg P} P(sz)/P(rz) to the given order (ascending in z).
Series plus_series_of(const DrinfeldPoly& p, int order);
/// r^{deg P} Q(sz)/Q(rz) expanded about infinity (descending in z).
Series minus_series_of(const DrinfeldPoly& p, int order);

/// Solves r^n P(sz) = P(rz) Σ Φ+_k z^k for P and checks the mirror law.
/// Throws NoSolution or MirrorMismatch.
DrinfeldPoly reconstruct_P(const HwSeries& h);

/// Eigenvalue series of ω(m) (ascending in u) and ω'(-m) (descending) on v_i.
std::pair<Series, Series> weight_gamma_series(const EvalModule& m, int i, int order);

struct RQResult {
  int i = 0;
  bool passed = false;
  bool prefactor_consistent = false;  // printed prefactor vs r^{n-i}s^i
  std::string residual;               // first nonzero coefficient of the difference
};

struct RQOptions {
  bool drop_q_factor = false;  // mutation hook for tests
};

/// Per weight index: the ω(m)-eigenvalue series on v_i against
/// r^{deg R_i - deg Q_i/2} s^{deg Q_i/2} R_i(us)Q_i(ur)/(R_i(ur)Q_i(us)).
/// The module must be W_n(a)-normalized.
std::vector<RQResult> verify_RQ_form(const EvalModule& m, int order, RQOptions opt = {});

/// The product of the plus-series of V_{n1}(a) and V_{n2}(b) against the
/// series of the product polynomial P1 P2.
bool check_multiplicativity(int n1, int n2, int order);

}  // namespace qaff
