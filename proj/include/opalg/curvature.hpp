#pragma once

// Induced derivations on S*_A(M) and S*_A(M, E), total curvature forms,
// Bianchi witnesses and the Maurer–Cartan pipeline.

#include "opalg/connections.hpp"

namespace opalg {

// The derivation of S*_A(M) with the given values on A and on M, both as
// maps into S*_A(M) of the same degree.
GradedMap extend_derivation(const FreeAAlgebra& S, const GradedMap& on_A, const GradedMap& on_M);
// The map of S*_A(M, E) with ν-Leibniz over `over` (a derivation of
// S*_A(M)) and the given values on E.
GradedMap extend_module_derivation(const FreeAAlgebra& S, const FreeSAMModule& SE, const GradedMap& over,
                                   const GradedMap& on_E);

// P_A(M, M) -> S^2_A(M) and P_A(M, E) -> S^1_A(M, E), landing in the stack.
GradedMap symmetrise(const LaxProduct& P, const FreeAAlgebra& S);
GradedMap symmetrise(const LaxProduct& P, const FreeSAMModule& SE);

// Q_∇ from d on A and ∇ on M; D_∇ from Q_∇ and ∇_E on E.
GradedMap q_nabla(const FreeAAlgebra& S, const Connection& nabla);
GradedMap d_nabla(const FreeAAlgebra& S, const FreeSAMModule& SE, const GradedMap& Q, const Connection& nabla_E);

// Free derivation diagrams: Leibniz with respect to μ of S*_A(M) up to
// `max_arity`, and Q restricted to A equal to d.
AxiomReport check_free_derivation(const FreeAAlgebra& S, const GradedMap& Q, const Derivation& d,
                                  int max_arity = 3);
AxiomReport check_free_q_connection(const FreeAAlgebra& S, const FreeSAMModule& SE, const GradedMap& Q,
                                    const GradedMap& D, int max_arity = 3);

// Σ_n (ad X)^n(Y)/n!, ad X = [X, -]. X must be nilpotent under ad.
GradedMap exp_ad(const GradedMap& X, const GradedMap& Y);
// [f, g] = f g − (−1)^{|f||g|} g f.
GradedMap graded_bracket(const GradedMap& f, const GradedMap& g);

struct CurvatureForm {
  GradedMap map;                      // degree +1 on the stack
  std::vector<GradedMap> components;  // R^(n) : M -> S*, with values in layer n
};
CurvatureForm total_curvature(const FreeAAlgebra& S, const GradedMap& Q);
CurvatureForm total_curvature_module(const FreeSAMModule& SE, const GradedMap& D);
// The part of f in layer n.
GradedMap layer_part(const GradedMap& f, const std::vector<int>& offsets, int dim, int n);

struct BianchiWitness {
  GradedMap alpha_hat;   // on the stack, degree +1
  GradedMap composite;   // α̂ ∘ α
  GradedMap homotopy;    // [∂, h] = α̂ ∘ α
  GradedMap bracket;     // [∂, R^(3)] (or [∂, T^(2)])
  int relation = 0;      // +1 if composite = bracket, -1 if composite = −bracket, 0 otherwise
};
// α = R^(2); throws NoWitness when no homotopy exists within the caps.
BianchiWitness bianchi_witness(const FreeAAlgebra& S, const CurvatureForm& R);
BianchiWitness bianchi_witness_module(const FreeAAlgebra& S, const FreeSAMModule& SE, const AModule& E,
                                      const CurvatureForm& R, const CurvatureForm& T);

// ---- Maurer–Cartan

struct MCElement {
  FreeAlgebra F;
  GradedMap g;    // V -> F_O(V), degree +1
  GradedMap hat;  // ĝ, the derivation extending g
};
// φ̂ : F_O(V) -> F_O(V) extending φ : V -> F_O(V).
GradedMap hat_of(const FreeAlgebra& F, const GradedMap& phi);
MCElement mc_element(const FreeAlgebra& F, const GradedMap& g);
GradedMap mc_defect(const MCElement& g);  // (∂ + ĝ)^2
bool mc_check(const MCElement& g);
// A(g); throws DimensionError when g is not a solution.
AlgebraPtr deform(const MCElement& g);

// M = F_A(V) with d : A -> M induced by id_V.
struct TwistModule {
  FreeAlgebra F;
  WordModule M;
  Derivation d;
};
TwistModule universal_module(const FreeAlgebra& F, int weight_cap = -1);
// The map of M induced by φ : V -> A: Leibniz over φ̂ and v ↦ d φ(v).
GradedMap twist_on_module(const TwistModule& T, const GradedMap& phi);
// M(g) over A(g), with d : A(g) -> M(g).
TwistModule deform_module(const TwistModule& T, const MCElement& g, const AlgebraPtr& Ag);

struct CurvatureMC {
  AlgebraPtr Ag;
  TwistModule M0;        // undeformed
  TwistModule Mg;
  Connection nabla;      // canonical, free over A(g)
  FreeAAlgebra S0;       // S*_A(M)
  FreeAAlgebra Sg;       // S*_{A(g)}(M(g))
  GradedMap Q;
  CurvatureForm R;       // R(g)_∇
  GradedMap Rhat;        // R(g)_∇ − ∂_0
  GradedMap restricted;  // R̂ on M
  bool mc = false;       // (∂_0 + R̂)^2 = 0
};
CurvatureMC curvature_mc(const MCElement& g, int order, int weight_cap = -1);

// Ξ(φ): the derivation of S*_A(M) induced by φ : V -> A on A and on M.
GradedMap induced_on_free_A_algebra(const FreeAAlgebra& S, const TwistModule& T, const GradedMap& phi);

struct GaugeFlow {
  MCElement g0;
  std::vector<GradedMap> xi;      // ξ(t) = Σ t^k xi[k], V -> A of degree 0
  std::vector<GradedMap> g;       // g(t) = Σ t^k g[k], k ≤ order
  std::vector<GradedMap> defect;  // (∂ + ĝ(t))^2 = Σ t^k defect[k], k ≤ 2 order
  int order = 0;
  // Smallest k ≤ order with defect[k] ≠ 0, or -1.
  int first_bad() const;
};
GaugeFlow gauge_flow(const MCElement& g0, const std::vector<GradedMap>& xi, int order);
// d/dt R̂(g(t)) = [exp(ad Q) Ξ(ξ(t)), ∂_0 + R̂(g(t))] coefficientwise below the
// series order. `drop_exp` replaces exp(ad Q) Ξ(ξ) by Ξ(ξ).
bool gauge_transport_check(const GaugeFlow& flow, const CurvatureMC& base, bool drop_exp = false);

}  // namespace opalg
