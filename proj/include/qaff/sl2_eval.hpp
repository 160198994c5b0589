#pragma once

// The (n+1)-dimensional modules of U_{r,s}(sl_2) and their affine
// evaluation modules V_n(a), W_n(a) = V_n(rs^{-1} a), at both the Chevalley
// and the current level.

#include <string>
#include <utility>
#include <vector>

#include "qaff/relations.hpp"

namespace qaff {

enum class Shift { Plain, RsInverse };

/// 1 for V_n(a), rs^{-1} for W_n(a).
RatFunc shift_factor(Shift s);
std::string to_string(Shift s);

struct EvalModule {
  int n = 0;
  Shift shift = Shift::Plain;
  RatFunc param;  // shift * a
  MatrixModule base;
  /// Comparison of the two printed constructions of the currents, one line
  /// per (k, sign) that disagrees (empty when they agree).
  std::vector<std::string> diagnostics;
};

/// e, f, ω, ω' on V_n: e v_i = [n+1-i] v_{i-1}, f v_i = [i+1] v_{i+1},
/// ω v_i = r^n (rs^{-1})^{-i} v_i, ω' v_i = s^n (rs^{-1})^i v_i.
struct Sl2Matrices {
  Matrix e, f, w, wp, w_inv, wp_inv;
};
Sl2Matrices sl2_matrices(int n);

/// Finite part only (node 1).
MatrixModule build_Vn(int n);

/// Affine Chevalley module through the evaluation map at param = shift * a.
MatrixModule build_chevalley_eval(int n, Shift shift, const RatFunc& a = RatFunc::a());

/// Chevalley generators plus currents x±(k) for |k| <= kmax + 1, ω(m),
/// ω'(-m) for m <= kmax and a(±l) for l <= kmax.
EvalModule build_current_eval(int n, Shift shift, int kmax, const RatFunc& a = RatFunc::a());

/// Current matrices from the closed action and from the evaluation map
/// (r^{-k}s^k a^k ω'^{-k} e and r^{-k}s^k a^k f ω^k).
Matrix xplus_action(int n, int k, const RatFunc& param);
Matrix xminus_action(int n, int k, const RatFunc& param);
Matrix xplus_via_evaluation(int n, int k, const RatFunc& param);
Matrix xminus_via_evaluation(int n, int k, const RatFunc& param);

/// ω(k) = (r-s)[x+(k), x-(0)], ω'(-k) = -(r-s)[x+(0), x-(-k)] for k >= 1,
/// ω(0) = ω, ω'(0) = ω'. Asserts diagonality.
std::pair<std::vector<Matrix>, std::vector<Matrix>> omega_matrices(const EvalModule& m, int mmax);

/// a(1..lmax) and a(-1..-lmax) from the logarithms of the ω-series.
std::pair<std::vector<Matrix>, std::vector<Matrix>> recover_imaginary(const EvalModule& m, int lmax);

}  // namespace qaff
