#pragma once

// Free algebras, coinvariants, T(A), U(A), derivations and Kähler forms.

#include "opalg/words.hpp"

namespace opalg {

struct FreeAlgebra {
  AlgebraPtr algebra;
  WordSpacePtr words;
  Complex generators;    // V with every basis element in weight 1
  GradedMap inclusion;   // V -> F_O(V), lands in weight 1
};
// Throws TruncationExceeded when the arity cap is below weight_cap.
FreeAlgebra free_algebra(OperadPtr O, const Complex& V, int weight_cap, std::string name = "F");

struct Coinvariants {
  Complex complex;
  GradedMap projection;
  GradedMap section;
};
// Quotient of X by x - x·s for each generator s of the action.
Coinvariants coinvariants(const Complex& X, const std::vector<GradedMap>& generators);

// T(A) and U(A) as monoids. Basis elements are words θ ⊗ a_1..a_n ⊗ (hole).
struct Envelope {
  Monoid monoid;
  WordSpacePtr words;
};
Envelope tensor_algebra(const AlgebraPtr& A, int weight_cap = -1);
Envelope universal_envelope(const AlgebraPtr& A, int weight_cap = -1);
// The U(A) action on an A-module: [θ; a; hole]·m = ν(θ; a; m).
SparseVec envelope_act(const Envelope& U, const AModule& E, int u, int m);
// Left module axioms for the induced action, exactly.
AxiomReport check_envelope_module(const Envelope& U, const AModule& E);

// ν with the module input at position p among n inputs; `in[p]` is a basis
// index of the module, the rest of the algebra.
SparseVec nu_at(const AModule& E, int n, int theta, const std::vector<int>& in, int p);

struct Derivation {
  AlgebraPtr algebra;
  ModulePtr target;
  GradedMap map;  // A -> M, any degree
};
AxiomReport check_derivation(const Derivation& d);
// The derivation restricting to phi on generators.
Derivation derivation_from_map(const FreeAlgebra& F, const ModulePtr& M, const GradedMap& phi);
GradedMap restrict_to_generators(const FreeAlgebra& F, const Derivation& d);

// Dimension of the space of derivations A -> M of a given degree.
int derivation_space_dim(const OperadAlgebra& A, const AModule& M, int degree);
// Dimension of the space of module maps E -> M of a given degree.
int module_map_space_dim(const AModule& E, const AModule& M, int degree);
// Basis of the module maps E -> M of a degree, chain maps only when `chain`.
std::vector<GradedMap> module_map_basis(const AModule& E, const AModule& M, int degree, bool chain);
// f ν_E(φ; c; m) = ±ν_M(φ; c; f m) for all instances within the caps.
bool is_module_map(const GradedMap& f, const AModule& E, const AModule& M);

struct Kahler {
  ModulePtr omega;
  WordSpacePtr words;
  Derivation d;
};
Kahler kahler(const AlgebraPtr& A, int weight_cap = -1);

// Algebra morphism F_O(V) -> B extending f : V -> B.
GradedMap extend_to_morphism(const FreeAlgebra& F, const OperadAlgebra& B, const GradedMap& f);
bool is_algebra_morphism(const OperadAlgebra& A, const OperadAlgebra& B, const GradedMap& f);

}  // namespace opalg
