#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "opalg/operad.hpp"

namespace opalg {

// An algebra over a truncated operad. μ_n is given on basis tuples
// θ ⊗ a_1 ⊗ .. ⊗ a_n for n ≤ mult_cap.
class OperadAlgebra {
 public:
  using MulFn = std::function<SparseVec(int n, int theta, const std::vector<int>& inputs)>;

  OperadAlgebra(OperadPtr O, Complex carrier, MulFn mu, int mult_cap, std::string name = "A");

  const Operad& operad() const { return *O_; }
  const OperadPtr& operad_ptr() const { return O_; }
  const Complex& carrier() const { return carrier_; }
  const SpacePtr& space() const { return carrier_.space(); }
  int dim() const { return carrier_.dim(); }
  int degree(int i) const { return carrier_.space()->degree(i); }
  int weight(int i) const { return carrier_.space()->weight(i); }
  int mult_cap() const { return mult_cap_; }
  const std::string& name() const { return name_; }

  SparseVec mu(int n, int theta, const std::vector<int>& inputs) const;
  SparseVec mu(int n, const SparseVec& theta, const std::vector<SparseVec>& inputs) const;

  // Same multiplication on a carrier with another differential.
  OperadAlgebra with_differential(const GradedMap& d) const;
  // Copy with one value of μ replaced (mutation tests).
  OperadAlgebra with_mu_override(int n, int theta, const std::vector<int>& inputs, SparseVec value) const;

 private:
  OperadPtr O_;
  Complex carrier_;
  MulFn mu_;
  int mult_cap_;
  std::string name_;
  struct Cache {
    std::mutex mu;
    std::map<std::vector<int>, SparseVec> values;
  };
  std::shared_ptr<Cache> cache_;
};
using AlgebraPtr = std::shared_ptr<const OperadAlgebra>;

// Module over an operad algebra: ν_k(φ; c_1..c_k; m) with φ ∈ O(k+1), the
// module input in the last slot, for k ≤ action_cap.
class AModule {
 public:
  using ActFn = std::function<SparseVec(int k, int phi, const std::vector<int>& c, int m)>;

  AModule(AlgebraPtr A, Complex carrier, ActFn nu, int action_cap, std::string name = "E");

  const OperadAlgebra& algebra() const { return *A_; }
  const AlgebraPtr& algebra_ptr() const { return A_; }
  const Operad& operad() const { return A_->operad(); }
  const Complex& carrier() const { return carrier_; }
  const SpacePtr& space() const { return carrier_.space(); }
  int dim() const { return carrier_.dim(); }
  int degree(int i) const { return carrier_.space()->degree(i); }
  int action_cap() const { return action_cap_; }
  const std::string& name() const { return name_; }
  // Set by constructions whose relation span was cut by the caps.
  bool truncation_limited = false;

  SparseVec nu(int k, int phi, const std::vector<int>& c, int m) const;
  SparseVec nu(int k, const SparseVec& phi, const std::vector<SparseVec>& c, const SparseVec& m) const;

  AModule with_differential(const GradedMap& d) const;
  AModule with_nu_override(int k, int phi, const std::vector<int>& c, int m, SparseVec value) const;

 private:
  AlgebraPtr A_;
  Complex carrier_;
  ActFn nu_;
  int action_cap_;
  std::string name_;
  struct Cache {
    std::mutex mu;
    std::map<std::vector<int>, SparseVec> values;
  };
  std::shared_ptr<Cache> cache_;
};
using ModulePtr = std::shared_ptr<const AModule>;

// Unital associative algebra in complexes.
struct Monoid {
  Complex carrier;
  std::function<SparseVec(int, int)> mul;
  SparseVec unit;
  SparseVec product(const SparseVec& a, const SparseVec& b) const;
};

AxiomReport check_algebra(const OperadAlgebra& A);
AxiomReport check_module(const AModule& E);
AxiomReport check_monoid(const Monoid& M);

// Associative algebra (monoid) as an Ass-algebra, graded commutative monoid
// as a Com-algebra. The operad must be ass_operad / com_operad.
AlgebraPtr algebra_from_monoid(OperadPtr ass, const Monoid& M, std::string name = "A");
AlgebraPtr commutative_algebra(OperadPtr com, const Monoid& M, std::string name = "C");
// A as a module over itself.
ModulePtr algebra_as_module(const AlgebraPtr& A);
// Left module over a commutative monoid as a module over the Com-algebra;
// act(a, m) is the left action on basis elements.
ModulePtr module_from_action(const AlgebraPtr& C, const Monoid& M, Complex carrier,
                             std::function<SparseVec(int, int)> act, std::string name = "E");
// Bimodule over a monoid as a module over the Ass-algebra.
ModulePtr module_from_bimodule(const AlgebraPtr& A, const Monoid& M, Complex carrier,
                               std::function<SparseVec(int, int)> left,
                               std::function<SparseVec(int, int)> right, std::string name = "E");

}  // namespace opalg
