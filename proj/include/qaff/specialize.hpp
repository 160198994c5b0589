#pragma once

// Parameter specializations s -> r^{-1}, s -> r and r -> s^k applied to
// pairing tables and matrix modules.

#include <string>
#include <string_view>
#include <vector>

#include "qaff/relations.hpp"

namespace qaff {

struct SpecMap {
  enum class Kind { SToRInverse, SToR, RToSPow };
  Kind kind = Kind::SToR;
  int k = 0;  // exponent for RToSPow, k != 1

  static SpecMap s_to_r_inverse() { return {Kind::SToRInverse, 0}; }
  static SpecMap s_to_r() { return {Kind::SToR, 0}; }
  /// Unsupported for k = 1 (that is s -> r).
  static SpecMap r_to_s_pow(int k);
  /// "s=r", "s=r^-1", "r=s^3", ...
  static SpecMap parse(std::string_view text);

  std::string str() const;
  /// The surviving indeterminate: r for the first two kinds, q (q^2 = rs^{-1})
  /// for r -> s^k.
  Var target() const { return kind == Kind::RToSPow ? Var::q : Var::r; }
  /// Images of r and s; r -> s^k is written in q, so s = q^{2/(k-1)}.
  /// LatticeOverflow when those exponents leave the 1/6 lattice.
  Substitution substitution() const;
};

RatFunc specialize(const RatFunc& x, const SpecMap& m);
Matrix specialize(const Matrix& x, const SpecMap& m);

/// Entrywise image of the table, including the r_i, s_i and r, s images the
/// relation engine uses. SpecializationPole if any entry poles.
PairingTable specialize_table(const PairingTable& t, const SpecMap& m);

/// Every matrix substituted; relation suites should then be run against
/// specialize_table(build_pairing(m.type), sm).
MatrixModule specialize_module(const MatrixModule& m, const SpecMap& sm);

/// Commutators of every ω_i^{±1}, ω'_i^{±1} with every assigned matrix; one
/// message per nonzero commutator.
std::vector<std::string> check_centrality(const MatrixModule& m);

/// Dimension of span_closure from each standard basis vector.
std::vector<int> closure_dimensions(const MatrixModule& m);

}  // namespace qaff
