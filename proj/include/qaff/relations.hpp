#pragma once

// Generator symbols, matrix modules and the relation engine: every defining
// relation of both presentations is checked as an exact matrix identity.

#include <map>
#include <string>
#include <vector>

#include "qaff/cartan.hpp"

namespace qaff {

enum class GenKind { E, F, W, Wp, GammaHalf, GammaPrimeHalf, Xp, Xm, Aimag, Wser, Wpser };

/// One generator. `k` is the sign (+1/-1) for W, Wp and the gammas, the mode
/// for Xp, Xm, Aimag and Wser; Wpser(i, m) stands for ω'_i(-m), m >= 0.
struct GenSymbol {
  GenKind kind = GenKind::E;
  int i = 0;
  int k = 0;

  static GenSymbol E(int i) { return {GenKind::E, i, 0}; }
  static GenSymbol F(int i) { return {GenKind::F, i, 0}; }
  static GenSymbol W(int i, int sign = 1) { return {GenKind::W, i, sign}; }
  static GenSymbol Wp(int i, int sign = 1) { return {GenKind::Wp, i, sign}; }
  static GenSymbol GammaHalf(int sign = 1) { return {GenKind::GammaHalf, 0, sign}; }
  static GenSymbol GammaPrimeHalf(int sign = 1) { return {GenKind::GammaPrimeHalf, 0, sign}; }
  static GenSymbol Xp(int i, int k) { return {GenKind::Xp, i, k}; }
  static GenSymbol Xm(int i, int k) { return {GenKind::Xm, i, k}; }
  static GenSymbol Aimag(int i, int l);
  static GenSymbol Wser(int i, int m) { return {GenKind::Wser, i, m}; }
  static GenSymbol Wpser(int i, int m) { return {GenKind::Wpser, i, m}; }

  std::string str() const;
  static GenSymbol parse(const std::string& text);
  auto operator<=>(const GenSymbol&) const = default;
};

struct MatrixModule {
  int dim = 0;
  AffineType type;
  std::map<GenSymbol, Matrix> assign;
  int kmax = 0;
  int central_charge = 0;  // gamma gamma' = (rs)^c

  bool has(const GenSymbol& g) const;
  /// The assigned matrix; Wser/Wpser with negative index are zero by
  /// definition. Throws MissingGenerator otherwise.
  Matrix at(const GenSymbol& g) const;
  void set(const GenSymbol& g, Matrix m) { assign[g] = std::move(m); }
};

struct Failure {
  std::string instance;
  std::string lhs;
  std::string rhs;
};

struct RelationReport {
  std::string relation_id;
  long instances_checked = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

bool all_passed(const std::vector<RelationReport>& reports);

/// R1-R4 against the module's own table or a supplied (e.g. specialized) one.
std::vector<RelationReport> check_chevalley(const MatrixModule& m);
std::vector<RelationReport> check_chevalley(const MatrixModule& m, const PairingTable& t);
/// Restricted to the given nodes (e.g. {1} for the finite part of sl_2).
std::vector<RelationReport> check_chevalley(const MatrixModule& m, const PairingTable& t,
                                            const std::vector<int>& nodes);

/// D1-D8 over |k| <= kmax, 1 <= |l| <= lmax on the current nodes 1..n.
std::vector<RelationReport> check_drinfeld(const MatrixModule& m, int kmax, int lmax);
std::vector<RelationReport> check_drinfeld(const MatrixModule& m, int kmax, int lmax, const PairingTable& t);

/// Right-to-left action of a word on v.
Vector apply_word(const MatrixModule& m, const std::vector<GenSymbol>& word, const Vector& v);

/// Standard basis vector e_i of dimension dim.
Vector basis_vector(int dim, int i);

}  // namespace qaff
