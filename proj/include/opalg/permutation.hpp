#pragma once

#include <string>
#include <vector>

#include "opalg/complexes.hpp"

namespace opalg {

// Bijection of {0..n-1}; printed and parsed 1-based.
// Composition (σ*τ)(x) = σ(τ(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 0-based, validated
  static Permutation from_one_based(const std::vector<int>& images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int i);  // swaps i and i+1
  static std::vector<Permutation> all(int n);      // lexicographic order

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  Permutation inverse() const;
  bool is_identity() const;
  // Position in the lexicographic enumeration of S_n.
  int lex_rank() const;
  static Permutation from_lex_rank(int n, int r);

  // σ = s_{i_1} * s_{i_2} * ... with s_i adjacent transpositions.
  std::vector<int> adjacent_word() const;

  std::string to_string() const;
  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

Permutation operator*(const Permutation& a, const Permutation& b);

// τ_1 + ... + τ_n acting blockwise.
Permutation sum(const std::vector<Permutation>& taus);
// σ̃(Σ_{i<j} m_i + k) = Σ_{σ(i)<σ(j)} m_i + k.
Permutation block_permutation(const Permutation& sigma, const std::vector<int>& blocks);

// Sign of x_1⊗...⊗x_n ↦ x_σ(1)⊗...⊗x_σ(n) for factors of the given degrees.
int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees);

// The map X_1⊗...⊗X_n → X_σ(1)⊗...⊗X_σ(n) sending x_1⊗...⊗x_n to
// ±x_σ(1)⊗...⊗x_σ(n). This is a right action: act(στ) = act(τ)∘act(σ).
ChainMap act_on_tensor_power(const Permutation& sigma, const std::vector<Complex>& factors);

}  // namespace opalg
