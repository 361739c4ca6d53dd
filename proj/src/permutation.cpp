#include "opalg/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace opalg {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= size() || seen[x]) throw DimensionError("images do not form a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> z;
  for (int x : images) z.push_back(x - 1);
  return Permutation(std::move(z));
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i) {
  auto p = identity(n);
  std::swap(p.img_[i], p.img_[i + 1]);
  return p;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::lex_rank() const {
  int n = size(), r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += img_[j] < img_[i];
    int f = 1;
    for (int k = 2; k <= n - 1 - i; ++k) f *= k;
    r += smaller * f;
  }
  return r;
}

Permutation Permutation::from_lex_rank(int n, int r) {
  std::vector<int> pool(n), out;
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < n; ++i) {
    int f = 1;
    for (int k = 2; k <= n - 1 - i; ++k) f *= k;
    int q = r / f;
    r %= f;
    out.push_back(pool[q]);
    pool.erase(pool.begin() + q);
  }
  return Permutation(std::move(out));
}

std::vector<int> Permutation::adjacent_word() const {
  // Bubble σ to the identity by right multiplication with s_i, then reverse.
  std::vector<int> w = img_, steps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < size(); ++i)
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        steps.push_back(i);
        changed = true;
      }
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(img_[i] + 1);
  return s + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DimensionError("composing permutations of different sizes");
  std::vector<int> v(a.size());
  for (int i = 0; i < a.size(); ++i) v[i] = a(b(i));
  return Permutation(std::move(v));
}

Permutation sum(const std::vector<Permutation>& taus) {
  std::vector<int> v;
  int off = 0;
  for (auto& t : taus) {
    for (int k = 0; k < t.size(); ++k) v.push_back(off + t(k));
    off += t.size();
  }
  return Permutation(std::move(v));
}

Permutation block_permutation(const Permutation& sigma, const std::vector<int>& blocks) {
  int n = sigma.size();
  if (static_cast<int>(blocks.size()) != n) throw DimensionError("block count differs from permutation size");
  std::vector<int> v;
  for (int j = 0; j < n; ++j) {
    int target = 0;
    for (int i = 0; i < n; ++i)
      if (sigma(i) < sigma(j)) target += blocks[i];
    for (int k = 0; k < blocks[j]; ++k) v.push_back(target + k);
  }
  return Permutation(std::move(v));
}

int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees) {
  long long parity = 0;
  int n = sigma.size();
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (sigma(p) > sigma(q)) parity += static_cast<long long>(degrees[sigma(p)]) * degrees[sigma(q)];
  return sign_of_parity(parity);
}

ChainMap act_on_tensor_power(const Permutation& sigma, const std::vector<Complex>& factors) {
  int n = sigma.size();
  if (static_cast<int>(factors.size()) != n) throw DimensionError("factor count differs from permutation size");
  std::vector<Complex> permuted;
  for (int p = 0; p < n; ++p) permuted.push_back(factors[sigma(p)]);
  Complex S = tensor(factors), T = tensor(permuted);
  std::vector<SparseVec> cols(S.dim());
  std::vector<int> digits(n), degs(n);
  for (int j = 0; j < S.dim(); ++j) {
    int rem = j;
    for (int k = n - 1; k >= 0; --k) {
      digits[k] = rem % factors[k].dim();
      rem /= factors[k].dim();
      degs[k] = factors[k].space()->degree(digits[k]);
    }
    int idx = 0;
    for (int p = 0; p < n; ++p) idx = idx * factors[sigma(p)].dim() + digits[sigma(p)];
    cols[j] = SparseVec::unit(idx, koszul_sign(sigma, degs));
  }
  return ChainMap(GradedMap(S.space(), T.space(), 0, std::move(cols)), S, T);
}

}  // namespace opalg
