#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "opalg/complexes.hpp"
#include "opalg/permutation.hpp"
#include "opalg/report.hpp"

namespace opalg {

// Arity-truncated operad. γ is given in simultaneous form on basis tuples:
// gamma({n, m_1..m_n}, {θ, θ_1..θ_n}) ∈ O(m_1+...+m_n).
class Operad {
 public:
  using GammaFn = std::function<SparseVec(const std::vector<int>& arities, const std::vector<int>& basis)>;
  using ActionFn = std::function<SparseVec(const Permutation& sigma, int basis)>;

  Operad(std::string name, std::vector<Complex> components, GammaFn gamma, SparseVec unit,
         ActionFn action = nullptr);

  const std::string& name() const { return name_; }
  int cap() const { return static_cast<int>(components_.size()) - 1; }
  const Complex& component(int n) const;
  int dim(int n) const { return component(n).dim(); }
  int degree(int n, int basis) const { return component(n).space()->degree(basis); }
  const SparseVec& unit() const { return unit_; }

  // Right action θ·σ with σ ∈ S_n.
  SparseVec act(const Permutation& sigma, int basis) const;
  SparseVec act(const Permutation& sigma, const SparseVec& v) const;
  // Right action of the adjacent transposition s_i on O(n).
  const GradedMap& generator(int n, int i) const;

  SparseVec gamma(const std::vector<int>& arities, const std::vector<int>& basis) const;
  // Multilinear extension of γ to vectors.
  SparseVec gamma(int n, const SparseVec& theta, const std::vector<std::pair<int, SparseVec>>& inputs) const;
  GradedMap gamma_matrix(const std::vector<int>& arities) const;
  // Cached values of γ on all basis tuples of one arity tuple, mixed radix
  // with θ most significant.
  const std::vector<SparseVec>& gamma_table(const std::vector<int>& arities) const;
  // θ ∘_i θ' = γ(θ; η, .., θ', .., η) for θ ∈ O(n), θ' ∈ O(k).
  const SparseVec& partial(int n, int i, int k, int a, int b) const;
  SparseVec partial(int n, int i, int k, const SparseVec& a, const SparseVec& b) const;

  // Every arity tuple (n; m_1..m_n) with n ≤ cap and Σm ≤ cap.
  std::vector<std::vector<int>> gamma_tuples() const;

  // Copy with an overridden γ value on one basis tuple (for mutation tests).
  Operad with_gamma_override(const std::vector<int>& arities, const std::vector<int>& basis, SparseVec value) const;

 private:
  std::string name_;
  std::vector<Complex> components_;
  GammaFn gamma_;
  SparseVec unit_;
  ActionFn action_;

  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, int>, GradedMap> generators;
    std::map<std::pair<std::vector<int>, int>, SparseVec> actions;
    std::map<std::vector<int>, SparseVec> partials;
    std::map<std::vector<int>, std::shared_ptr<const std::vector<SparseVec>>> tables;
  };
  std::shared_ptr<Cache> cache_;
};

using OperadPtr = std::shared_ptr<const Operad>;

OperadPtr com_operad(int cap);
OperadPtr ass_operad(int cap);
OperadPtr end_operad(const Complex& V, int cap);

AxiomReport check_operad(const Operad& O);

std::string save_operad(const Operad& O);
struct LoadedOperad {
  OperadPtr operad;
  AxiomReport report;
};
// Throws SchemaError on malformed input and AxiomError when strict and a diagram fails.
LoadedOperad load_operad(const std::string& text, bool strict);

}  // namespace opalg
