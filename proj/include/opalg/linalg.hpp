#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opalg/errors.hpp"
#include "opalg/sparse.hpp"

namespace opalg {

struct BasisElement {
  int degree = 0;
  int weight = 0;
  std::string label;
};

// Finite-dimensional graded vector space with an ordered basis.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<BasisElement> basis);
  static GradedSpace from_dims(const std::map<int, int>& dims, const std::string& prefix = "e");

  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisElement& element(int i) const { return basis_[i]; }
  int degree(int i) const { return basis_[i].degree; }
  int weight(int i) const { return basis_[i].weight; }
  const std::string& label(int i) const { return basis_[i].label; }
  const std::vector<BasisElement>& basis() const { return basis_; }

  std::map<int, int> dims() const;
  int dim_in_degree(int n) const;
  std::vector<int> indices_in_degree(int n) const;
  int max_weight() const;

  // Same degrees and weights in the same order; labels are cosmetic.
  bool same_shape(const GradedSpace& o) const;

 private:
  std::vector<BasisElement> basis_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;
SpacePtr make_space(std::vector<BasisElement> basis);
SpacePtr space_of_dims(const std::map<int, int>& dims, const std::string& prefix = "e");

// Homogeneous linear map of fixed degree, stored by sparse columns.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(SpacePtr src, SpacePtr tgt, int degree);
  GradedMap(SpacePtr src, SpacePtr tgt, int degree, std::vector<SparseVec> columns);

  static GradedMap identity(SpacePtr s);
  static GradedMap from_dense(SpacePtr src, SpacePtr tgt, int degree,
                              const std::vector<std::vector<Rational>>& rows);

  const SpacePtr& source() const { return src_; }
  const SpacePtr& target() const { return tgt_; }
  int degree() const { return deg_; }
  const SparseVec& column(int j) const { return cols_[j]; }
  const std::vector<SparseVec>& columns() const { return cols_; }
  Rational entry(int row, int col) const { return cols_[col].coeff(row); }

  void set_column(int j, SparseVec v);
  SparseVec apply(const SparseVec& v) const;

  bool is_zero() const;
  bool operator==(const GradedMap& o) const;

  GradedMap& operator+=(const GradedMap& o);
  GradedMap& operator-=(const GradedMap& o);
  GradedMap& operator*=(const Rational& c);

  // Dense block from source degree n to target degree n + degree().
  std::vector<std::vector<Rational>> block(int n) const;

 private:
  void check_column(int j, const SparseVec& v) const;

  SpacePtr src_, tgt_;
  int deg_ = 0;
  std::vector<SparseVec> cols_;
};

GradedMap operator+(GradedMap a, const GradedMap& b);
GradedMap operator-(GradedMap a, const GradedMap& b);
GradedMap operator*(const Rational& c, GradedMap a);

// f after g.
GradedMap compose(const GradedMap& f, const GradedMap& g);

// Row echelon form keyed by highest nonzero index.
class Echelon {
 public:
  explicit Echelon(int ambient_dim = 0);
  bool insert(SparseVec v);
  SparseVec reduce(SparseVec v) const;
  int rank() const { return rank_; }
  int ambient_dim() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int i) const { return !rows_[i].empty(); }
  std::vector<int> non_pivots() const;
  std::vector<SparseVec> basis() const;

 private:
  std::vector<SparseVec> rows_;
  int rank_ = 0;
};

// Echelon that remembers how each row was produced from inserted vectors.
class TrackedEchelon {
 public:
  explicit TrackedEchelon(int ambient_dim = 0);
  // Returns true when v was independent. Otherwise *dependency receives the
  // combination of earlier tags that equals v (same tag space as insert).
  bool insert(SparseVec v, SparseVec tag, SparseVec* dependency = nullptr);
  // Expresses v in terms of tags; nullopt when v is outside the span.
  std::optional<SparseVec> express(SparseVec v) const;

 private:
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> tags_;
};

class Subspace {
 public:
  Subspace() = default;
  Subspace(SpacePtr ambient, const std::vector<SparseVec>& generators);

  const SpacePtr& ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<SparseVec>& basis() const { return basis_; }
  std::map<int, int> dims() const;
  bool contains(const SparseVec& v) const;

 private:
  SpacePtr ambient_;
  Echelon ech_;
  std::vector<SparseVec> basis_;
};

Subspace kernel(const GradedMap& f);
Subspace image(const GradedMap& f);
int rank(const GradedMap& f);

// x with f x = y, chosen deterministically; nullopt when y is not in the image.
std::optional<SparseVec> solve(const GradedMap& f, const SparseVec& y);
// X with f X = Y column by column.
std::optional<GradedMap> solve(const GradedMap& f, const GradedMap& y);

struct Quotient {
  SpacePtr space;
  GradedMap projection;
  GradedMap section;
  std::vector<int> representatives;
};
Quotient quotient(const SpacePtr& ambient, const Subspace& sub);

struct DirectSum {
  SpacePtr space;
  std::vector<GradedMap> inclusions;
  std::vector<GradedMap> projections;
};
DirectSum direct_sum(const std::vector<SpacePtr>& parts);
// Mixed-radix basis, last factor fastest.
SpacePtr tensor_space(const std::vector<SpacePtr>& factors);
SpacePtr unit_space();
SpacePtr shift(const SpacePtr& s, int k);
SpacePtr dual(const SpacePtr& s);
GradedMap tensor_maps(const std::vector<GradedMap>& maps);

struct DegreeWindow {
  int lo = -4;
  int hi = 6;
  bool contains(int n) const { return lo <= n && n <= hi; }
  static DegreeWindow unbounded() { return {-1000000, 1000000}; }
};
void check_window(const GradedSpace& s, const DegreeWindow& w, const std::string& construction);

}  // namespace opalg
