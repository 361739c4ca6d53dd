#pragma once

// Free modules, lax products, symmetric products, lax inner homs and free
// A-algebras.

#include <optional>

#include "opalg/constructions.hpp"

namespace opalg {

struct WordModule {
  ModulePtr module;
  WordSpacePtr words;
};

// U(A) ⊗ W.
WordModule free_module(const AlgebraPtr& A, const Complex& W, int weight_cap = -1);
// W -> F_A(W), w ↦ [id; w].
GradedMap free_module_generators(const WordModule& F);

struct LaxProduct {
  std::vector<ModulePtr> factors;
  ModulePtr module;
  WordSpacePtr words;
};
LaxProduct lax_product(const AlgebraPtr& A, const std::vector<ModulePtr>& factors, int weight_cap = -1);
// S^n_A(M, E_1..E_m): the n copies of M are symmetrised.
LaxProduct symmetric_product(const AlgebraPtr& A, const ModulePtr& M, int n, const std::vector<ModulePtr>& extras,
                             int weight_cap = -1);
// P_A(M_1..M_m) -> P_A(M_σ(1)..M_σ(m)); Q must be the lax product of the
// permuted factors.
GradedMap lax_symmetry(const LaxProduct& P, const LaxProduct& Q, const Permutation& sigma);
// Maps E -> P_A() and E -> P_A(E), x ↦ [id; x].
GradedMap unit_into_product(const LaxProduct& P);

struct LaxHom {
  ModulePtr module;        // H_A(M_2..M_m; N)
  WordSpacePtr pairing;    // P_A(hole, M_2..M_m) with a free hole
  ModulePtr target;
  // values[i] is the basis element h_i as a map pairing -> target.
  std::vector<GradedMap> values;
  // Coordinates of an A-linear map pairing -> target; nullopt if not in H.
  std::function<std::optional<SparseVec>(const GradedMap&)> coordinates;
};
LaxHom lax_hom(const AlgebraPtr& A, const std::vector<ModulePtr>& others, const ModulePtr& N, int weight_cap = -1);
// f : P_A(M_1, M_2..) -> N  <->  g : M_1 -> H_A(M_2..; N)
GradedMap adjoint_transpose(const LaxProduct& P, const LaxHom& H, const GradedMap& f);
GradedMap adjoint_untranspose(const LaxProduct& P, const LaxHom& H, const GradedMap& g);

struct FreeAAlgebra {
  AlgebraPtr algebra;                 // S*_A(M), truncated at `order`
  ModulePtr generators;               // M
  std::vector<WordSpacePtr> layers;   // S^n_A(M)
  std::vector<int> offsets;
  GradedMap unit_map;                 // A -> S*_A(M)
  GradedMap module_map;               // M -> S*_A(M)
};
FreeAAlgebra free_A_algebra(const AlgebraPtr& A, const ModulePtr& M, int order, int weight_cap = -1);

struct FreeSAMModule {
  ModulePtr module;                   // S*_A(M, E) over S*_A(M)
  std::vector<WordSpacePtr> layers;   // S^n_A(M, E)
  std::vector<int> offsets;
  GradedMap inclusion;                // E -> S*_A(M, E)
};
FreeSAMModule free_SAM_module(const FreeAAlgebra& S, const ModulePtr& E, int weight_cap = -1);

}  // namespace opalg
