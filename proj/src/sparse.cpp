#include "opalg/sparse.hpp"

#include <algorithm>

namespace opalg {

SparseVec SparseVec::unit(int i, const Rational& c) {
  SparseVec v;
  if (!is_zero(c)) v.e_.emplace_back(i, c);
  return v;
}

SparseVec SparseVec::from_unsorted(std::vector<Entry> entries) {
  VecBuilder b;
  for (auto& [i, c] : entries) b.add(i, c);
  return b.build();
}

SparseVec SparseVec::from_sorted(std::vector<Entry> entries) {
  SparseVec v;
  v.e_ = std::move(entries);
  return v;
}

Rational SparseVec::coeff(int i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& e, int k) { return e.first < k; });
  if (it != e_.end() && it->first == i) return it->second;
  return 0;
}

void SparseVec::add_scaled(const SparseVec& o, const Rational& c) {
  if (o.e_.empty() || is_zero(c)) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + o.e_.size());
  auto a = e_.begin(), ae = e_.end();
  auto b = o.e_.begin(), be = o.e_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == ae || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational s = a->second + c * b->second;
      if (!is_zero(s)) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  e_ = std::move(out);
}

SparseVec& SparseVec::operator*=(const Rational& c) {
  if (is_zero(c)) {
    e_.clear();
  } else {
    for (auto& [i, x] : e_) x *= c;
  }
  return *this;
}

SparseVec SparseVec::reindexed(const std::vector<int>& map) const {
  VecBuilder b;
  for (auto& [i, c] : e_)
    if (map[i] >= 0) b.add(map[i], c);
  return b.build();
}

SparseVec operator+(SparseVec a, const SparseVec& b) { a += b; return a; }
SparseVec operator-(SparseVec a, const SparseVec& b) { a -= b; return a; }
SparseVec operator*(const Rational& c, SparseVec v) { v *= c; return v; }

void VecBuilder::add(int i, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = acc_.try_emplace(i, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) acc_.erase(it);
  }
}

void VecBuilder::add(const SparseVec& v, const Rational& c) {
  for (auto& [i, x] : v) add(i, c * x);
}

SparseVec VecBuilder::build() const {
  return SparseVec::from_sorted(std::vector<SparseVec::Entry>(acc_.begin(), acc_.end()));
}

bool VecBuilder::empty() const { return acc_.empty(); }

}  // namespace opalg
