#pragma once

// Coproduct on Chevalley generators, tensor-product modules, invariant
// subspaces and the automorphism twists a_σ, Γ1, Γ2(c).
//
//   Δ(e) = e⊗1 + ω⊗e      Δ(f) = 1⊗f + f⊗ω'      Δ(ω) = ω⊗ω
//   S(e) = -ω^{-1}e       S(f) = -fω'^{-1}       S(ω) = ω^{-1}

#include <string>
#include <variant>
#include <vector>

#include "qaff/relations.hpp"

namespace qaff {

struct TensorModule {
  MatrixModule left;
  MatrixModule right;
  MatrixModule module;  // the Δ-action on left ⊗ right (Kronecker order)

  int dim() const { return module.dim; }
};

/// Both factors must share the affine type and have γ = γ' = 1; TypeMismatch otherwise.
TensorModule tensor(const MatrixModule& left, const MatrixModule& right);

/// Chevalley generators are (x ⊗ y) in Kronecker order: index i*dim_R + j.
Vector tensor_vector(const Vector& x, const Vector& y);

/// m∘(S⊗id)∘Δ = m∘(id⊗S)∘Δ = ε on every assigned Chevalley generator,
/// evaluated as matrices. One message per violation.
std::vector<std::string> check_antipode(const MatrixModule& m);

/// Smallest subspace containing seed and invariant under every assigned
/// matrix, as reduced-echelon rows ordered by pivot column. An empty list for
/// a zero seed.
std::vector<Vector> span_closure(const MatrixModule& m, const Vector& seed);

struct ASigma {
  std::vector<int> sigma;  // ±1 per node 0..n
};
struct Gamma1 {};
struct Gamma2 {
  RatFunc c = RatFunc::c();
};
using Automorphism = std::variant<ASigma, Gamma1, Gamma2>;

std::string to_string(const Automorphism& aut);

/// ρ'(g) = ρ(aut(g)) on every assigned generator. a_σ needs the Chevalley
/// generators and keeps only those; Γ1 and Γ2 need currents. MissingGenerator
/// otherwise.
MatrixModule twist(const MatrixModule& m, const Automorphism& aut);

/// Corruption hook for the mutation tests: "xplus" scales x+(1), "e1" scales
/// e_1, "omega" rescales ω_1 (and its inverse) by r. Throws Unsupported for
/// unknown names and MissingGenerator when the target is absent.
MatrixModule mutate(const MatrixModule& m, const std::string& kind);

}  // namespace qaff
