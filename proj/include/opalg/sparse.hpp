#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "opalg/rational.hpp"

namespace opalg {

// Sparse vector over Q: entries sorted by index, no stored zeros.
class SparseVec {
 public:
  using Entry = std::pair<int, Rational>;

  SparseVec() = default;
  static SparseVec unit(int i, const Rational& c = 1);
  static SparseVec from_unsorted(std::vector<Entry> entries);
  // Caller guarantees strictly increasing indices and nonzero values.
  static SparseVec from_sorted(std::vector<Entry> entries);

  bool empty() const { return e_.empty(); }
  size_t size() const { return e_.size(); }
  const std::vector<Entry>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  Rational coeff(int i) const;
  int max_index() const { return e_.empty() ? -1 : e_.back().first; }

  // this += c * other
  void add_scaled(const SparseVec& other, const Rational& c);
  SparseVec& operator+=(const SparseVec& o) { add_scaled(o, 1); return *this; }
  SparseVec& operator-=(const SparseVec& o) { add_scaled(o, -1); return *this; }
  SparseVec& operator*=(const Rational& c);
  SparseVec operator-() const { SparseVec r = *this; r *= -1; return r; }

  // Relabel indices through a map; entries mapping to -1 are dropped.
  SparseVec reindexed(const std::vector<int>& map) const;

  bool operator==(const SparseVec& o) const { return e_ == o.e_; }

 private:
  std::vector<Entry> e_;
};

SparseVec operator+(SparseVec a, const SparseVec& b);
SparseVec operator-(SparseVec a, const SparseVec& b);
SparseVec operator*(const Rational& c, SparseVec v);

// Accumulates a vector from scattered contributions.
class VecBuilder {
 public:
  void add(int i, const Rational& c);
  void add(const SparseVec& v, const Rational& c = 1);
  SparseVec build() const;
  bool empty() const;

 private:
  std::map<int, Rational> acc_;
};

}  // namespace opalg

namespace opalg {

// Calls f(indices, coefficient) for every term of v_1 ⊗ .. ⊗ v_n.
template <class F>
void for_each_term(const std::vector<const SparseVec*>& vs, F&& f) {
  std::vector<int> idx(vs.size());
  std::function<void(size_t, const Rational&)> rec = [&](size_t i, const Rational& c) {
    if (i == vs.size()) {
      f(idx, c);
      return;
    }
    for (auto& [j, cj] : *vs[i]) {
      idx[i] = j;
      rec(i + 1, c * cj);
    }
  };
  rec(0, Rational(1));
}

}  // namespace opalg
