#include "opalg/linalg.hpp"

#include <algorithm>
#include <climits>

namespace opalg {

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {}

GradedSpace GradedSpace::from_dims(const std::map<int, int>& dims, const std::string& prefix) {
  std::vector<BasisElement> b;
  for (auto [deg, n] : dims)
    for (int i = 0; i < n; ++i)
      b.push_back({deg, 0, prefix + std::to_string(deg) + "_" + std::to_string(i)});
  return GradedSpace(std::move(b));
}

std::map<int, int> GradedSpace::dims() const {
  std::map<int, int> d;
  for (auto& e : basis_) ++d[e.degree];
  return d;
}

int GradedSpace::dim_in_degree(int n) const {
  int c = 0;
  for (auto& e : basis_) c += (e.degree == n);
  return c;
}

std::vector<int> GradedSpace::indices_in_degree(int n) const {
  std::vector<int> r;
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].degree == n) r.push_back(i);
  return r;
}

int GradedSpace::max_weight() const {
  int w = 0;
  for (auto& e : basis_) w = std::max(w, e.weight);
  return w;
}

bool GradedSpace::same_shape(const GradedSpace& o) const {
  if (dim() != o.dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].degree != o.basis_[i].degree || basis_[i].weight != o.basis_[i].weight) return false;
  return true;
}

SpacePtr make_space(std::vector<BasisElement> basis) {
  return std::make_shared<const GradedSpace>(std::move(basis));
}

SpacePtr space_of_dims(const std::map<int, int>& dims, const std::string& prefix) {
  return std::make_shared<const GradedSpace>(GradedSpace::from_dims(dims, prefix));
}

// ---------------------------------------------------------------- GradedMap

GradedMap::GradedMap(SpacePtr src, SpacePtr tgt, int degree)
    : src_(std::move(src)), tgt_(std::move(tgt)), deg_(degree), cols_(src_->dim()) {}

GradedMap::GradedMap(SpacePtr src, SpacePtr tgt, int degree, std::vector<SparseVec> columns)
    : src_(std::move(src)), tgt_(std::move(tgt)), deg_(degree), cols_(std::move(columns)) {
  if (static_cast<int>(cols_.size()) != src_->dim())
    throw DimensionError("column count " + std::to_string(cols_.size()) + " does not match source dimension " +
                         std::to_string(src_->dim()));
  for (int j = 0; j < src_->dim(); ++j) check_column(j, cols_[j]);
}

void GradedMap::check_column(int j, const SparseVec& v) const {
  for (auto& [i, c] : v) {
    if (i < 0 || i >= tgt_->dim()) throw DimensionError("row index out of range");
    if (tgt_->degree(i) != src_->degree(j) + deg_)
      throw DimensionError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") breaks degree " +
                           std::to_string(deg_));
  }
}

GradedMap GradedMap::identity(SpacePtr s) {
  std::vector<SparseVec> c;
  for (int i = 0; i < s->dim(); ++i) c.push_back(SparseVec::unit(i));
  return GradedMap(s, s, 0, std::move(c));
}

GradedMap GradedMap::from_dense(SpacePtr src, SpacePtr tgt, int degree,
                                const std::vector<std::vector<Rational>>& rows) {
  if (static_cast<int>(rows.size()) != tgt->dim()) throw DimensionError("row count mismatch");
  std::vector<SparseVec> cols(src->dim());
  for (int j = 0; j < src->dim(); ++j) {
    VecBuilder b;
    for (int i = 0; i < tgt->dim(); ++i) {
      if (static_cast<int>(rows[i].size()) != src->dim()) throw DimensionError("ragged matrix");
      b.add(i, rows[i][j]);
    }
    cols[j] = b.build();
  }
  return GradedMap(std::move(src), std::move(tgt), degree, std::move(cols));
}

void GradedMap::set_column(int j, SparseVec v) {
  check_column(j, v);
  cols_[j] = std::move(v);
}

SparseVec GradedMap::apply(const SparseVec& v) const {
  SparseVec r;
  for (auto& [j, c] : v) r.add_scaled(cols_.at(j), c);
  return r;
}

bool GradedMap::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const SparseVec& v) { return v.empty(); });
}

bool GradedMap::operator==(const GradedMap& o) const {
  return deg_ == o.deg_ && src_->same_shape(*o.src_) && tgt_->same_shape(*o.tgt_) && cols_ == o.cols_;
}

static void require_parallel(const GradedMap& a, const GradedMap& b) {
  if (a.degree() != b.degree() || !a.source()->same_shape(*b.source()) || !a.target()->same_shape(*b.target()))
    throw DimensionError("maps are not parallel");
}

GradedMap& GradedMap::operator+=(const GradedMap& o) {
  require_parallel(*this, o);
  for (int j = 0; j < src_->dim(); ++j) cols_[j] += o.cols_[j];
  return *this;
}

GradedMap& GradedMap::operator-=(const GradedMap& o) {
  require_parallel(*this, o);
  for (int j = 0; j < src_->dim(); ++j) cols_[j] -= o.cols_[j];
  return *this;
}

GradedMap& GradedMap::operator*=(const Rational& c) {
  for (auto& v : cols_) v *= c;
  return *this;
}

std::vector<std::vector<Rational>> GradedMap::block(int n) const {
  auto rows = tgt_->indices_in_degree(n + deg_);
  auto cols = src_->indices_in_degree(n);
  std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size()));
  for (size_t b = 0; b < cols.size(); ++b)
    for (size_t a = 0; a < rows.size(); ++a) m[a][b] = cols_[cols[b]].coeff(rows[a]);
  return m;
}

GradedMap operator+(GradedMap a, const GradedMap& b) { a += b; return a; }
GradedMap operator-(GradedMap a, const GradedMap& b) { a -= b; return a; }
GradedMap operator*(const Rational& c, GradedMap a) { a *= c; return a; }

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (!g.target()->same_shape(*f.source()))
    throw DimensionError("compose: target of inner map does not match source of outer map");
  std::vector<SparseVec> cols;
  cols.reserve(g.source()->dim());
  for (auto& c : g.columns()) cols.push_back(f.apply(c));
  return GradedMap(g.source(), f.target(), f.degree() + g.degree(), std::move(cols));
}

// ---------------------------------------------------------------- Echelon

Echelon::Echelon(int ambient_dim) : rows_(ambient_dim) {}

SparseVec Echelon::reduce(SparseVec v) const {
  int bound = INT_MAX;
  while (true) {
    int hit = -1;
    Rational c;
    auto& e = v.entries();
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
      if (it->first >= bound) continue;
      if (!rows_[it->first].empty()) {
        hit = it->first;
        c = it->second;
        break;
      }
    }
    if (hit < 0) return v;
    v.add_scaled(rows_[hit], -c);
    bound = hit;
  }
}

bool Echelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  int p = v.max_index();
  Rational lead = v.entries().back().second;
  v *= Rational(1) / lead;
  rows_[p] = std::move(v);
  ++rank_;
  return true;
}

std::vector<int> Echelon::non_pivots() const {
  std::vector<int> r;
  for (int i = 0; i < ambient_dim(); ++i)
    if (rows_[i].empty()) r.push_back(i);
  return r;
}

std::vector<SparseVec> Echelon::basis() const {
  std::vector<SparseVec> r;
  for (auto& v : rows_)
    if (!v.empty()) r.push_back(v);
  return r;
}

TrackedEchelon::TrackedEchelon(int ambient_dim) : rows_(ambient_dim), tags_(ambient_dim) {}

bool TrackedEchelon::insert(SparseVec v, SparseVec tag, SparseVec* dependency) {
  SparseVec used;  // combination of stored tags subtracted so far
  int bound = INT_MAX;
  while (true) {
    int hit = -1;
    Rational c;
    auto& e = v.entries();
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
      if (it->first >= bound) continue;
      if (!rows_[it->first].empty()) {
        hit = it->first;
        c = it->second;
        break;
      }
    }
    if (hit < 0) break;
    v.add_scaled(rows_[hit], -c);
    used.add_scaled(tags_[hit], c);
    bound = hit;
  }
  if (v.empty()) {
    if (dependency) *dependency = used;
    return false;
  }
  int p = v.max_index();
  Rational inv = Rational(1) / v.entries().back().second;
  tag.add_scaled(used, -1);
  v *= inv;
  tag *= inv;
  rows_[p] = std::move(v);
  tags_[p] = std::move(tag);
  return true;
}

std::optional<SparseVec> TrackedEchelon::express(SparseVec v) const {
  SparseVec used;
  int bound = INT_MAX;
  while (true) {
    int hit = -1;
    Rational c;
    auto& e = v.entries();
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
      if (it->first >= bound) continue;
      if (!rows_[it->first].empty()) {
        hit = it->first;
        c = it->second;
        break;
      }
    }
    if (hit < 0) break;
    v.add_scaled(rows_[hit], -c);
    used.add_scaled(tags_[hit], c);
    bound = hit;
  }
  if (!v.empty()) return std::nullopt;
  return used;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(SpacePtr ambient, const std::vector<SparseVec>& generators)
    : ambient_(std::move(ambient)), ech_(ambient_->dim()) {
  for (auto& g : generators)
    if (ech_.insert(g)) {}
  basis_ = ech_.basis();
}

std::map<int, int> Subspace::dims() const {
  std::map<int, int> d;
  for (auto& v : basis_) ++d[ambient_->degree(v.max_index())];
  return d;
}

bool Subspace::contains(const SparseVec& v) const { return ech_.reduce(v).empty(); }

Subspace kernel(const GradedMap& f) {
  TrackedEchelon te(f.target()->dim());
  std::vector<SparseVec> ker;
  for (int j = 0; j < f.source()->dim(); ++j) {
    SparseVec dep;
    if (!te.insert(f.column(j), SparseVec::unit(j), &dep)) {
      SparseVec k = SparseVec::unit(j);
      k.add_scaled(dep, -1);
      ker.push_back(std::move(k));
    }
  }
  return Subspace(f.source(), ker);
}

Subspace image(const GradedMap& f) { return Subspace(f.target(), f.columns()); }

int rank(const GradedMap& f) {
  Echelon e(f.target()->dim());
  int r = 0;
  for (auto& c : f.columns()) r += e.insert(c);
  return r;
}

std::optional<SparseVec> solve(const GradedMap& f, const SparseVec& y) {
  TrackedEchelon te(f.target()->dim());
  for (int j = 0; j < f.source()->dim(); ++j) te.insert(f.column(j), SparseVec::unit(j));
  return te.express(y);
}

std::optional<GradedMap> solve(const GradedMap& f, const GradedMap& y) {
  if (!f.target()->same_shape(*y.target())) throw DimensionError("solve: targets differ");
  TrackedEchelon te(f.target()->dim());
  for (int j = 0; j < f.source()->dim(); ++j) te.insert(f.column(j), SparseVec::unit(j));
  std::vector<SparseVec> cols;
  for (auto& c : y.columns()) {
    auto x = te.express(c);
    if (!x) return std::nullopt;
    cols.push_back(std::move(*x));
  }
  return GradedMap(y.source(), f.source(), y.degree() - f.degree(), std::move(cols));
}

Quotient quotient(const SpacePtr& ambient, const Subspace& sub) {
  Echelon e(ambient->dim());
  for (auto& v : sub.basis()) e.insert(v);
  Quotient q;
  q.representatives = e.non_pivots();
  std::vector<int> pos(ambient->dim(), -1);
  std::vector<BasisElement> b;
  for (size_t k = 0; k < q.representatives.size(); ++k) {
    pos[q.representatives[k]] = static_cast<int>(k);
    b.push_back(ambient->element(q.representatives[k]));
  }
  q.space = make_space(std::move(b));
  std::vector<SparseVec> proj(ambient->dim()), sec;
  for (int i = 0; i < ambient->dim(); ++i) proj[i] = e.reduce(SparseVec::unit(i)).reindexed(pos);
  for (int r : q.representatives) sec.push_back(SparseVec::unit(r));
  q.projection = GradedMap(ambient, q.space, 0, std::move(proj));
  q.section = GradedMap(q.space, ambient, 0, std::move(sec));
  return q;
}

// ---------------------------------------------------------------- constructions

DirectSum direct_sum(const std::vector<SpacePtr>& parts) {
  std::vector<BasisElement> b;
  for (auto& p : parts)
    for (auto& e : p->basis()) b.push_back(e);
  DirectSum ds;
  ds.space = make_space(std::move(b));
  int off = 0;
  for (auto& p : parts) {
    std::vector<SparseVec> inc, proj(ds.space->dim());
    for (int i = 0; i < p->dim(); ++i) {
      inc.push_back(SparseVec::unit(off + i));
      proj[off + i] = SparseVec::unit(i);
    }
    ds.inclusions.emplace_back(p, ds.space, 0, std::move(inc));
    ds.projections.emplace_back(ds.space, p, 0, std::move(proj));
    off += p->dim();
  }
  return ds;
}

SpacePtr unit_space() { return make_space({BasisElement{0, 0, "1"}}); }

SpacePtr tensor_space(const std::vector<SpacePtr>& factors) {
  std::vector<BasisElement> cur{BasisElement{0, 0, ""}};
  for (auto& f : factors) {
    std::vector<BasisElement> next;
    next.reserve(cur.size() * f->dim());
    for (auto& a : cur)
      for (auto& e : f->basis())
        next.push_back({a.degree + e.degree, a.weight + e.weight,
                        a.label.empty() ? e.label : a.label + "⊗" + e.label});
    cur = std::move(next);
  }
  if (factors.empty()) cur[0].label = "1";
  return make_space(std::move(cur));
}

SpacePtr shift(const SpacePtr& s, int k) {
  std::vector<BasisElement> b = s->basis();
  for (auto& e : b) e.degree -= k;
  return make_space(std::move(b));
}

SpacePtr dual(const SpacePtr& s) {
  std::vector<BasisElement> b = s->basis();
  for (auto& e : b) {
    e.degree = -e.degree;
    e.label = e.label + "*";
  }
  return make_space(std::move(b));
}

GradedMap tensor_maps(const std::vector<GradedMap>& maps) {
  std::vector<SpacePtr> srcs, tgts;
  int deg = 0;
  for (auto& m : maps) {
    srcs.push_back(m.source());
    tgts.push_back(m.target());
    deg += m.degree();
  }
  SpacePtr S = tensor_space(srcs), T = tensor_space(tgts);
  std::vector<SparseVec> cols(S->dim());
  for (int j = 0; j < S->dim(); ++j) {
    std::vector<int> digits(maps.size());
    int rem = j;
    for (int k = static_cast<int>(maps.size()) - 1; k >= 0; --k) {
      digits[k] = rem % srcs[k]->dim();
      rem /= srcs[k]->dim();
    }
    SparseVec acc = SparseVec::unit(0);
    for (size_t k = 0; k < maps.size(); ++k) {
      VecBuilder b;
      for (auto& [i, c] : acc)
        for (auto& [r, d] : maps[k].column(digits[k])) b.add(i * tgts[k]->dim() + r, c * d);
      acc = b.build();
    }
    cols[j] = acc;
  }
  return GradedMap(S, T, deg, std::move(cols));
}

void check_window(const GradedSpace& s, const DegreeWindow& w, const std::string& construction) {
  for (auto& e : s.basis())
    if (!w.contains(e.degree))
      throw TruncationExceeded(construction, "degree " + std::to_string(e.degree) + " outside window [" +
                                                 std::to_string(w.lo) + "," + std::to_string(w.hi) + "]");
}

}  // namespace opalg
