#pragma once

// Affine Cartan data and the two-parameter quantum Cartan matrix J = (<i,j>).

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "qaff/eigen_support.hpp"

namespace qaff {

enum class Family { A, B, C, D, E6, F4, G2 };

struct AffineType {
  Family family = Family::A;
  int rank = 1;

  /// Checked constructor: UnsupportedRank outside A>=1, B>=3, C>=2, D>=4, E6, F4, G2.
  static AffineType make(Family f, int rank);
  /// "A1", "B3", "E6", ... (case-insensitive family letter).
  static AffineType parse(std::string_view name);

  std::string name() const;
  int size() const { return rank + 1; }
  friend bool operator==(const AffineType&, const AffineType&) = default;
};

struct PairingTable {
  AffineType type;
  Matrix entries;              // <i,j>
  Eigen::MatrixXi cartan;      // a_ij
  std::vector<Rational> d;     // symmetrizers
  std::vector<RatFunc> ri, si; // r^{d_i}, s^{d_i} (substituted along with entries)
  RatFunc r = RatFunc::r();    // images of r and s once specialized
  RatFunc s = RatFunc::s();
  std::vector<std::string> diagnostics;

  int size() const { return static_cast<int>(entries.rows()); }
};

PairingTable build_pairing(const AffineType& t);

/// <i,j>; IndexOutOfRange outside 0..n.
RatFunc pairing(const PairingTable& t, int i, int j);

/// <lam, i> for lam given in finite fundamental-weight coordinates (entries
/// for nodes 1..n), extended multiplicatively from the simple roots.
RatFunc weight_pairing(const PairingTable& t, const std::vector<Rational>& lam, int i);

/// Diagonal and compatibility laws; returns one message per violation.
std::vector<std::string> check_table_laws(const PairingTable& t);

/// Plain-text rendering used by the golden file and the CLI.
std::string render_table(const PairingTable& t);

}  // namespace qaff
