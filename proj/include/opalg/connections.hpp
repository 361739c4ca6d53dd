#pragma once

// Connections, jet modules, Atiyah classes and derivatives of morphisms.

#include <optional>

#include "opalg/modules.hpp"

namespace opalg {

// ∇ : E -> P_A(M, E) over a derivation d : A -> M. Whether it is a genuine
// connection or only a free one is decided by the checks below.
struct Connection {
  ModulePtr module;     // E
  Derivation d;
  LaxProduct product;   // P_A(M, E)
  GradedMap map;
};

// Σ_p ±[θ; a_1..d a_p..a_n; e] in P_A(M, E), θ ∈ O(n+1).
SparseVec leibniz_insertion(const Derivation& d, const LaxProduct& P, int n, int theta, const std::vector<int>& a,
                            int e);

// d-derivative diagrams only (free connection).
AxiomReport check_free_connection(const Connection& c);
// Diagrams and ∂∇ = ∇∂.
AxiomReport check_connection(const Connection& c);

struct JetModule {
  ModulePtr base;       // E
  Derivation d;
  LaxProduct product;   // P_A(M, E)
  ModulePtr module;     // J_d E = E ⊕ P_A(M, E)
  ShortExact ses;       // P_A(M, E) -> J_d E -> E
};
JetModule jet_module(const ModulePtr& E, const Derivation& d, int weight_cap = -1);
// (id, ∇) : E -> J_d E.
GradedMap splitting_map(const JetModule& J, const GradedMap& nabla);
// Whether (id, ∇) is an A-module map, and a chain map when `chain`.
bool splits_jet(const JetModule& J, const GradedMap& nabla, bool chain = true);
// Runs both the splitting check and the connection diagrams; they must agree.
bool connection_splitting_test(const JetModule& J, const GradedMap& nabla);

// The d-insertion map on a free module U(A) ⊗ W. Throws NotFreeModule.
Connection canonical_connection(const WordModule& F, const Derivation& d, int weight_cap = -1);
// Solves the free connection diagrams for ∇; nullopt when infeasible.
std::optional<Connection> find_free_connection(const ModulePtr& E, const Derivation& d, int weight_cap = -1);

struct AtiyahClass {
  GradedMap representative;  // E -> P_A(M, E), degree +1
  std::string provenance;
};
// ∇∂ − ∂∇; asserted to be a chain map and an A-module map.
AtiyahClass atiyah_from_connection(const Connection& c);
// Extension class of the jet sequence.
AtiyahClass atiyah_from_extension(const JetModule& J);

// (∇_1..∇_m) : P_A(E_1..E_m) -> P_A(M, E_1..E_m). Q must be the second product.
GradedMap product_connection(const LaxProduct& P, const LaxProduct& Q, const std::vector<Connection>& nablas);
// The connection diagrams for a map P -> Q as above.
AxiomReport check_product_connection(const LaxProduct& P, const LaxProduct& Q, const Derivation& d,
                                     const GradedMap& nabla);
// P_A(id, f) : P_A(M, E) -> P_A(M, E_1..E_m) for f : E -> P = P_A(E_1..E_m).
GradedMap lax_map(const LaxProduct& PME, const LaxProduct& P, const LaxProduct& Q, const GradedMap& f);
// ∇f = (∇_1..∇_m) f − P_A(id, f) ∇.
GradedMap derivative_of_morphism(const GradedMap& f, const Connection& nabla, const LaxProduct& P,
                                 const LaxProduct& Q, const std::vector<Connection>& nablas);

}  // namespace opalg
