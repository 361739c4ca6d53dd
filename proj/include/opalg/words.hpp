#pragma once

// Quotients of spaces of operadic words θ ⊗ a_1..a_n ⊗ x_1..x_F, where the
// a_i range over an algebra A (a symmetric group of variable size n) and the
// x_j over fixed groups. Free algebras, U(A), free modules, lax products,
// symmetric products and Kähler differentials are all built on this.

#include <memory>
#include <mutex>
#include <unordered_map>

#include "opalg/algebra.hpp"

namespace opalg {

struct WordGroup {
  std::string name;
  Complex complex;
  int multiplicity = 1;
  bool symmetric = false;
  // When set, composing into this slot is related to the module action.
  ModulePtr module;
};

struct Word {
  int theta = 0;
  std::vector<int> inputs;  // algebra inputs first, then the fixed groups
};

struct WordOptions {
  int weight_cap = -1;   // words of larger weight are zero; -1 = none
  bool compose = true;   // relate partial compositions to μ and ν
  int max_algebra_inputs = -1;  // defaults to operad cap minus fixed inputs
};

class WordSpace {
 public:
  WordSpace(AlgebraPtr A, std::vector<WordGroup> fixed, WordOptions opt, std::string name);
  // Variable group from a plain complex: words are only symmetrised.
  WordSpace(OperadPtr O, Complex variable, std::vector<WordGroup> fixed, WordOptions opt, std::string name);

  const OperadAlgebra& algebra() const { return *A_; }
  const AlgebraPtr& algebra_ptr() const { return A_; }
  const Operad& operad() const { return *O_; }
  const OperadPtr& operad_ptr() const { return O_; }
  const Complex& variable() const { return var_; }
  const std::vector<WordGroup>& groups() const { return fixed_; }
  int fixed_count() const { return F_; }
  int max_algebra_inputs() const { return ncap_; }
  int weight_cap() const { return opt_.weight_cap; }
  const std::string& name() const { return name_; }

  // -- ambient, in coinvariant coordinates
  int coinvariant_dim() const { return static_cast<int>(roots_.size()); }
  SparseVec word_vector(int theta, const std::vector<int>& inputs) const;
  SparseVec word_vector(const SparseVec& theta, const std::vector<int>& inputs) const;
  // ν on words: φ ∈ O(k+1) with algebra inputs c, the word in the last slot.
  SparseVec act_words(int k, int phi, const std::vector<int>& c, const SparseVec& coinv) const;
  Word coinvariant_word(int i) const { return decode(roots_[i]); }
  // Degree of the input at a given position of a word with n algebra inputs.
  int input_degree(int n, int position, int basis) const;
  int input_weight(int n, int position, int basis) const;

  void add_relation(SparseVec coinv);
  // Records that some relations were dropped because of the caps.
  void mark_limited() { limited_ = true; }
  void finalize();

  // -- quotient
  bool truncation_limited() const { return limited_; }
  const Complex& complex() const { return complex_; }
  int dim() const { return complex_.dim(); }
  const Word& representative(int i) const { return reps_[i]; }
  int max_rep_inputs() const { return max_rep_inputs_; }
  SparseVec reduce(const SparseVec& coinv) const;
  SparseVec normal_form(int theta, const std::vector<int>& inputs) const;
  SparseVec normal_form(const SparseVec& theta, const std::vector<int>& inputs) const;
  // ν on the quotient basis.
  SparseVec act(int k, int phi, const std::vector<int>& c, int basis) const;
  // Lift of a quotient vector to coinvariant coordinates.
  SparseVec lift(const SparseVec& v) const;

 private:
  struct Component {
    int n = 0, N = 0;
    long long offset = 0, size = 0, inner = 0;
    std::vector<int> radix;  // per input
  };
  const WordGroup& group_at(int fixed_slot) const;
  const Complex& input_complex(int n, int position) const;
  long long encode(int theta, const std::vector<int>& inputs) const;
  Word decode(long long idx) const;
  int word_weight(const std::vector<int>& inputs) const;
  int word_degree(int theta, const std::vector<int>& inputs) const;
  void build_coinvariants();
  void add_compose_relations();
  void for_each_inputs(int n, const std::function<void(const std::vector<int>&)>& f) const;

  void init();

  OperadPtr O_;
  Complex var_;
  AlgebraPtr A_;
  std::vector<WordGroup> fixed_;
  std::vector<int> fixed_group_of_;  // per fixed slot
  WordOptions opt_;
  std::string name_;
  int F_ = 0, ncap_ = 0;
  bool monomial_ = true;
  bool limited_ = false;
  std::vector<Component> comps_;
  std::vector<int> orbit_;       // ambient -> coinvariant index or -1
  std::vector<signed char> orbit_sign_;
  std::vector<long long> roots_;
  std::vector<SparseVec> relations_;
  Echelon ech_;
  std::vector<int> final_of_;    // coinvariant -> quotient index or -1
  std::vector<int> rep_coinv_;
  std::vector<Word> reps_;
  int max_rep_inputs_ = 0;
  Complex complex_;
  struct Cache {
    std::mutex mu;
    std::unordered_map<int, SparseVec> reduced;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};
using WordSpacePtr = std::shared_ptr<const WordSpace>;

// Module structure on a finalized word space through act().
ModulePtr word_module(const WordSpacePtr& W, std::string name);

}  // namespace opalg
