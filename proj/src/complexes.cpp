#include "opalg/complexes.hpp"

namespace opalg {

Complex::Complex(SpacePtr space, GradedMap d) : space_(std::move(space)), d_(std::move(d)) {
  if (d_.degree() != 1 || !d_.source()->same_shape(*space_) || !d_.target()->same_shape(*space_))
    throw DimensionError("differential must be a degree +1 endomorphism");
  if (!compose(d_, d_).is_zero()) throw DimensionError("differential does not square to zero");
}

Complex Complex::with_zero_differential(SpacePtr space) {
  GradedMap d(space, space, 1);
  return Complex(space, d);
}

Complex Complex::unit() { return with_zero_differential(unit_space()); }

GradedMap commutator(const Complex& Y, const GradedMap& h, const Complex& X) {
  GradedMap r = compose(Y.d(), h);
  GradedMap t = compose(h, X.d());
  if (h.degree() % 2 == 0) r -= t; else r += t;
  return r;
}

bool is_chain_map(const GradedMap& f, const Complex& X, const Complex& Y) {
  return commutator(Y, f, X).is_zero();
}

ChainMap::ChainMap(GradedMap f, Complex s, Complex t) : map(std::move(f)), source(std::move(s)), target(std::move(t)) {
  if (!map.source()->same_shape(*source.space()) || !map.target()->same_shape(*target.space()))
    throw DimensionError("chain map shape mismatch");
  if (!is_chain_map(map, source, target)) throw NotAChainMap("map does not commute with differentials");
}

FreeMap::FreeMap(GradedMap f, Complex s, Complex t) : map(std::move(f)), source(std::move(s)), target(std::move(t)) {
  if (!map.source()->same_shape(*source.space()) || !map.target()->same_shape(*target.space()))
    throw DimensionError("free map shape mismatch");
}

GradedMap tensor_maps_signed(const std::vector<GradedMap>& maps) {
  std::vector<SpacePtr> srcs, tgts;
  int deg = 0;
  for (auto& m : maps) {
    srcs.push_back(m.source());
    tgts.push_back(m.target());
    deg += m.degree();
  }
  SpacePtr S = tensor_space(srcs), T = tensor_space(tgts);
  size_t n = maps.size();
  std::vector<SparseVec> cols(S->dim());
  std::vector<int> digits(n);
  for (int j = 0; j < S->dim(); ++j) {
    int rem = j;
    for (int k = static_cast<int>(n) - 1; k >= 0; --k) {
      digits[k] = rem % srcs[k]->dim();
      rem /= srcs[k]->dim();
    }
    long long parity = 0, prefix = 0;
    for (size_t k = 0; k < n; ++k) {
      parity += static_cast<long long>(maps[k].degree()) * prefix;
      prefix += srcs[k]->degree(digits[k]);
    }
    SparseVec acc = SparseVec::unit(0, sign_of_parity(parity));
    for (size_t k = 0; k < n && !acc.empty(); ++k) {
      VecBuilder b;
      for (auto& [i, c] : acc)
        for (auto& [r, d] : maps[k].column(digits[k])) b.add(i * tgts[k]->dim() + r, c * d);
      acc = b.build();
    }
    cols[j] = std::move(acc);
  }
  return GradedMap(S, T, deg, std::move(cols));
}

Complex tensor(const std::vector<Complex>& factors, const DegreeWindow& w) {
  std::vector<SpacePtr> spaces;
  for (auto& f : factors) spaces.push_back(f.space());
  SpacePtr S = tensor_space(spaces);
  check_window(*S, w, "tensor");
  GradedMap d(S, S, 1);
  for (size_t k = 0; k < factors.size(); ++k) {
    std::vector<GradedMap> maps;
    for (size_t l = 0; l < factors.size(); ++l)
      maps.push_back(l == k ? factors[l].d() : GradedMap::identity(factors[l].space()));
    GradedMap t = tensor_maps_signed(maps);
    d += GradedMap(S, S, 1, t.columns());
  }
  return Complex(S, d);
}

Complex tensor(const Complex& X, const Complex& Y, const DegreeWindow& w) { return tensor({X, Y}, w); }

ChainMap braiding(const Complex& X, const Complex& Y) {
  Complex XY = tensor(X, Y), YX = tensor(Y, X);
  int nx = X.dim(), ny = Y.dim();
  std::vector<SparseVec> cols(nx * ny);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b)
      cols[a * ny + b] = SparseVec::unit(b * nx + a, koszul(X.space()->degree(a), Y.space()->degree(b)));
  return ChainMap(GradedMap(XY.space(), YX.space(), 0, std::move(cols)), XY, YX);
}

namespace {

std::vector<SparseVec> transpose(const GradedMap& f) {
  std::vector<std::vector<SparseVec::Entry>> rows(f.target()->dim());
  for (int j = 0; j < f.source()->dim(); ++j)
    for (auto& [i, c] : f.column(j)) rows[i].emplace_back(j, c);
  std::vector<SparseVec> out;
  for (auto& r : rows) out.push_back(SparseVec::from_sorted(std::move(r)));
  return out;
}

SpacePtr hom_space(const Complex& Y, const Complex& Z) {
  std::vector<BasisElement> b;
  for (int z = 0; z < Z.dim(); ++z)
    for (int y = 0; y < Y.dim(); ++y)
      b.push_back({Z.space()->degree(z) - Y.space()->degree(y), Z.space()->weight(z) - Y.space()->weight(y),
                   "[" + Z.space()->label(z) + "<-" + Y.space()->label(y) + "]"});
  return make_space(std::move(b));
}

// Column of the hom differential at the elementary map E(z,y).
SparseVec hom_d_column(const Complex& Y, const Complex& Z, const std::vector<SparseVec>& dYt, int z, int y) {
  int ny = Y.dim();
  int n = Z.space()->degree(z) - Y.space()->degree(y);
  VecBuilder b;
  for (auto& [z2, c] : Z.d().column(z)) b.add(z2 * ny + y, c);
  // E(z,y)∘∂_Y sends y' to coeff(∂y', y) z
  Rational s = (n % 2 == 0) ? -1 : 1;
  for (auto& [y2, c] : dYt[y]) b.add(z * ny + y2, s * c);
  return b.build();
}

}  // namespace

Complex inner_hom(const Complex& Y, const Complex& Z, const DegreeWindow& w) {
  SpacePtr H = hom_space(Y, Z);
  check_window(*H, w, "inner_hom");
  auto dYt = transpose(Y.d());
  std::vector<SparseVec> cols(H->dim());
  for (int z = 0; z < Z.dim(); ++z)
    for (int y = 0; y < Y.dim(); ++y) cols[z * Y.dim() + y] = hom_d_column(Y, Z, dYt, z, y);
  return Complex(H, GradedMap(H, H, 1, std::move(cols)));
}

SparseVec hom_element(const GradedMap& f) {
  int ny = f.source()->dim();
  VecBuilder b;
  for (int y = 0; y < ny; ++y)
    for (auto& [z, c] : f.column(y)) b.add(z * ny + y, c);
  return b.build();
}

GradedMap hom_map(const Complex& Y, const Complex& Z, const SparseVec& v, int degree) {
  int ny = Y.dim();
  std::vector<std::vector<SparseVec::Entry>> cols(ny);
  for (auto& [k, c] : v) cols[k % ny].emplace_back(k / ny, c);
  std::vector<SparseVec> out;
  for (auto& c : cols) out.push_back(SparseVec::from_unsorted(std::move(c)));
  return GradedMap(Y.space(), Z.space(), degree, std::move(out));
}

Complex shift(const Complex& X, int k) {
  SpacePtr S = shift(X.space(), k);
  GradedMap d(S, S, 1, X.d().columns());
  if (k % 2 != 0) d *= -1;
  return Complex(S, d);
}

Complex direct_sum(const Complex& X, const Complex& Y) {
  DirectSum ds = direct_sum(std::vector<SpacePtr>{X.space(), Y.space()});
  GradedMap d = compose(compose(ds.inclusions[0], X.d()), ds.projections[0]) +
                compose(compose(ds.inclusions[1], Y.d()), ds.projections[1]);
  return Complex(ds.space, d);
}

SpacePtr cohomology(const Complex& X) {
  auto z = kernel(X.d()).dims();
  auto b = image(X.d()).dims();
  std::map<int, int> h;
  for (auto [n, k] : z)
    if (k - b[n] > 0) h[n] = k - b[n];
  return space_of_dims(h, "H");
}

bool is_quasi_iso(const ChainMap& f) {
  if (f.map.degree() != 0) throw DimensionError("quasi-isomorphism test needs a degree-0 map");
  auto hx = cohomology(f.source)->dim();
  auto hy = cohomology(f.target)->dim();
  if (hx != hy) return false;
  Echelon e(f.target.dim());
  int rb = 0;
  Subspace bY = image(f.target.d());
  for (auto& v : bY.basis()) rb += e.insert(v);
  int r = 0;
  Subspace zX = kernel(f.source.d());
  for (auto& z : zX.basis()) r += e.insert(f.map.apply(z));
  return r == hx;
}

Cone cone(const ChainMap& f) {
  if (f.map.degree() != 0) throw DimensionError("cone needs a degree-0 chain map");
  const Complex& Ep = f.source;
  const Complex& E = f.target;
  int np = Ep.dim(), ne = E.dim();
  std::vector<BasisElement> b;
  for (auto e : Ep.space()->basis()) {
    e.degree -= 1;
    b.push_back(e);
  }
  for (auto& e : E.space()->basis()) b.push_back(e);
  SpacePtr C = make_space(std::move(b));
  std::vector<SparseVec> dc(np + ne);
  for (int j = 0; j < np; ++j) {
    SparseVec v = -Ep.d().column(j);
    v.add_scaled(f.map.column(j).reindexed([&] {
      std::vector<int> m(ne);
      for (int i = 0; i < ne; ++i) m[i] = np + i;
      return m;
    }()), 1);
    dc[j] = std::move(v);
  }
  std::vector<int> off(ne);
  for (int i = 0; i < ne; ++i) off[i] = np + i;
  for (int j = 0; j < ne; ++j) dc[np + j] = E.d().column(j).reindexed(off);
  Complex Cx(C, GradedMap(C, C, 1, std::move(dc)));

  std::vector<SparseVec> inc, proj(np + ne), tos(np + ne);
  for (int j = 0; j < ne; ++j) inc.push_back(SparseVec::unit(np + j));
  for (int j = 0; j < ne; ++j) proj[np + j] = SparseVec::unit(j);
  Complex Ep1 = shift(Ep, 1);
  for (int j = 0; j < np; ++j) tos[j] = SparseVec::unit(j);
  return Cone{Cx, ChainMap(GradedMap(E.space(), C, 0, std::move(inc)), E, Cx),
              FreeMap(GradedMap(C, E.space(), 0, std::move(proj)), Cx, E),
              ChainMap(GradedMap(C, Ep1.space(), 0, std::move(tos)), Cx, Ep1)};
}

std::optional<FreeMap> null_homotopy(const GradedMap& f, const Complex& X, const Complex& Y) {
  // Unknowns: elementary maps E(y,x) of degree |f|-1; image under [∂,-].
  int hd = f.degree() - 1;
  auto dXt = transpose(X.d());
  std::vector<int> unknowns;
  for (int y = 0; y < Y.dim(); ++y)
    for (int x = 0; x < X.dim(); ++x)
      if (Y.space()->degree(y) - X.space()->degree(x) == hd) unknowns.push_back(y * X.dim() + x);
  TrackedEchelon te(X.dim() * Y.dim());
  for (size_t k = 0; k < unknowns.size(); ++k) {
    int y = unknowns[k] / X.dim(), x = unknowns[k] % X.dim();
    te.insert(hom_d_column(X, Y, dXt, y, x), SparseVec::unit(static_cast<int>(k)));
  }
  auto sol = te.express(hom_element(f));
  if (!sol) return std::nullopt;
  VecBuilder h;
  for (auto& [k, c] : *sol) h.add(unknowns[k], c);
  return FreeMap(hom_map(X, Y, h.build(), hd), X, Y);
}

void check_exact(const ShortExact& s) {
  const GradedMap& i = s.i.map;
  const GradedMap& p = s.p.map;
  if (i.degree() != 0 || p.degree() != 0) throw NotExact("maps in a short exact sequence must have degree 0");
  if (!compose(p, i).is_zero()) throw NotExact("p∘i ≠ 0");
  if (kernel(i).dim() != 0) throw NotExact("i is not injective");
  if (rank(p) != p.target()->dim()) throw NotExact("p is not surjective");
  if (rank(i) != kernel(p).dim()) throw NotExact("sequence is not exact in the middle");
}

GradedMap extension_class(const ShortExact& s, const std::optional<GradedMap>& section) {
  check_exact(s);
  const Complex& E = s.i.target;
  const Complex& Epp = s.p.target;
  GradedMap sigma;
  if (section) {
    sigma = *section;
    if (!(compose(s.p.map, sigma) == GradedMap::identity(Epp.space()))) throw NotExact("given map is not a section");
  } else {
    auto sol = solve(s.p.map, GradedMap::identity(Epp.space()));
    if (!sol) throw NotExact("no section");
    sigma = *sol;
  }
  GradedMap c = compose(sigma, Epp.d()) - compose(E.d(), sigma);
  auto a = solve(s.i.map, c);
  if (!a) throw NotExact("s∂ − ∂s does not factor through E'");
  return *a;
}

}  // namespace opalg
