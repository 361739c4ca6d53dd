#include "doctest.h"
#include "opalg/errors.hpp"
#include "opalg/modules.hpp"
#include "oracles.hpp"

using namespace opalg;

namespace {

Complex plain(const std::vector<int>& degs, const std::string& p, const std::vector<int>& weights = {}) {
  std::vector<BasisElement> b;
  for (size_t i = 0; i < degs.size(); ++i)
    b.push_back({degs[i], weights.empty() ? 0 : weights[i], p + std::to_string(i)});
  return Complex::with_zero_differential(make_space(b));
}

// k[x]/x^(top+1); x^i has weight i when weighted.
Monoid truncated_poly(int top, bool weighted) {
  std::vector<int> w;
  for (int i = 0; i <= top; ++i) w.push_back(weighted ? i : 0);
  return {plain(std::vector<int>(top + 1, 0), "x", w),
          [top](int i, int j) { return i + j <= top ? SparseVec::unit(i + j) : SparseVec(); }, SparseVec::unit(0)};
}

Monoid unit_monoid() {
  return {plain({0}, "1"), [](int, int) { return SparseVec::unit(0); }, SparseVec::unit(0)};
}

oracle::Matrix zero_matrix(int n) { return oracle::Matrix(n, std::vector<oracle::Q>(n, 0)); }

oracle::Matrix identity_matrix(int n) {
  auto m = zero_matrix(n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// A module over k[x]/x^(top+1) given by the matrix of x.
ModulePtr poly_module(const AlgebraPtr& A, const Monoid& mon, const oracle::Matrix& x, const std::string& name,
                      const std::vector<int>& weights = {}) {
  int n = static_cast<int>(x.size());
  std::vector<oracle::Matrix> pw{identity_matrix(n)};
  for (int i = 1; i < A->dim(); ++i) pw.push_back(oracle::multiply(x, pw.back()));
  auto act = [pw](int a, int m) {
    VecBuilder v;
    for (size_t r = 0; r < pw[a].size(); ++r) v.add(static_cast<int>(r), pw[a][r][m]);
    return v.build();
  };
  return module_from_action(A, mon, plain(std::vector<int>(n, 0), name, weights), act, name);
}

std::vector<oracle::Matrix> powers(const oracle::Matrix& x, int count) {
  std::vector<oracle::Matrix> pw{identity_matrix(static_cast<int>(x.size()))};
  for (int i = 1; i < count; ++i) pw.push_back(oracle::multiply(x, pw.back()));
  return pw;
}

oracle::Matrix shift_matrix(int n) {  // x e_i = e_{i+1}
  auto m = zero_matrix(n);
  for (int i = 0; i + 1 < n; ++i) m[i + 1][i] = 1;
  return m;
}

// x e0 = e1, x e1 = 0, x e2 = 0: k[x]/x^2 ⊕ k
oracle::Matrix mixed_matrix() {
  auto m = zero_matrix(3);
  m[1][0] = 1;
  return m;
}

bool intertwines(const GradedMap& f, const AModule& E, const AModule& M) {
  const Operad& O = E.operad();
  int cap = std::min(E.action_cap(), M.action_cap());
  for (int k = 0; k <= cap; ++k)
    for (int phi = 0; phi < O.dim(k + 1); ++phi) {
      std::vector<int> c(k, 0);
      // all tuples of algebra basis elements
      std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == k) {
          for (int m = 0; m < E.dim(); ++m) {
            SparseVec lhs = f.apply(E.nu(k, phi, c, m));
            std::vector<SparseVec> cv;
            for (int a : c) cv.push_back(SparseVec::unit(a));
            if (!(lhs == M.nu(k, SparseVec::unit(phi), cv, f.column(m)))) return false;
          }
          return true;
        }
        for (int a = 0; a < E.algebra().dim(); ++a) {
          c[i] = a;
          if (!rec(i + 1)) return false;
        }
        return true;
      };
      if (!rec(0)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("modules built from actions satisfy the axioms") {
  auto mon = truncated_poly(1, false);
  auto C = commutative_algebra(com_operad(4), mon);
  CHECK(check_module(*algebra_as_module(C)).ok());
  CHECK(check_module(*poly_module(C, mon, mixed_matrix(), "m")).ok());
  CHECK(check_module(*poly_module(C, mon, zero_matrix(1), "k")).ok());
  auto bad = poly_module(C, mon, mixed_matrix(), "m")->with_nu_override(1, 0, {1}, 0, SparseVec::unit(2));
  auto r = check_module(bad);
  CHECK_FALSE(r.ok());
}

TEST_CASE("free modules") {
  auto F = free_algebra(com_operad(4), plain({0}, "v"), 3);
  auto one = free_module(F.algebra, Complex::unit());
  auto w = one.module->space();
  std::map<int, int> dims;
  for (int i = 0; i < w->dim(); ++i) ++dims[w->weight(i)];
  for (int n = 0; n <= 3; ++n) CHECK(dims[n] == 1);
  CHECK(check_module(*one.module).ok());
  // U(A) ⊗ W
  auto W2 = plain({0, 1}, "w");
  auto two = free_module(F.algebra, W2);
  auto U = universal_envelope(F.algebra);
  CHECK(two.module->dim() == 2 * U.monoid.carrier.dim());
  CHECK(check_module(*two.module).ok());
  // freeness: module maps F_A(W) -> A correspond to maps W -> A
  auto Am = algebra_as_module(F.algebra);
  CHECK(module_map_space_dim(*one.module, *Am, 0) == F.algebra->dim());
}

TEST_CASE("lax product of no factors and of one factor") {
  auto mon = truncated_poly(1, false);
  auto C = commutative_algebra(com_operad(4), mon);
  auto P0 = lax_product(C, {});
  GradedMap f0 = unit_into_product(P0);
  CHECK(P0.module->dim() == C->dim());
  CHECK(rank(f0) == C->dim());
  CHECK(intertwines(f0, *algebra_as_module(C), *P0.module));
  auto M = poly_module(C, mon, mixed_matrix(), "m");
  auto P1 = lax_product(C, {M});
  GradedMap f1 = unit_into_product(P1);
  CHECK(P1.module->dim() == M->dim());
  CHECK(rank(f1) == M->dim());
  CHECK(intertwines(f1, *M, *P1.module));
  CHECK(check_module(*P1.module).ok());

  auto F = free_algebra(ass_operad(4), plain({0, 0}, "v"), 2);
  auto Q0 = lax_product(F.algebra, {});
  CHECK(Q0.module->dim() == F.algebra->dim());
  CHECK(rank(unit_into_product(Q0)) == F.algebra->dim());
}

TEST_CASE("commutative lax products are tensor products over C") {
  auto mon = truncated_poly(1, false);
  auto C = commutative_algebra(com_operad(4), mon);
  std::vector<std::pair<ModulePtr, oracle::Matrix>> mods{
      {algebra_as_module(C), shift_matrix(2)},
      {poly_module(C, mon, zero_matrix(1), "k"), zero_matrix(1)},
      {poly_module(C, mon, mixed_matrix(), "m"), mixed_matrix()}};
  for (size_t i = 0; i < mods.size(); ++i)
    for (size_t j = 0; j < mods.size(); ++j) {
      auto P = lax_product(C, {mods[i].first, mods[j].first});
      auto ai = powers(mods[i].second, 2), aj = powers(mods[j].second, 2);
      int expect = oracle::tensor_over_dim({mods[i].first->dim(), mods[j].first->dim()}, {ai, aj}, {ai, aj});
      CHECK(P.module->dim() == expect);
      CHECK_FALSE(P.words->truncation_limited());
    }
  auto m = mods[2];
  auto P3 = lax_product(C, {m.first, m.first, mods[1].first});
  auto a = powers(m.second, 2), z = powers(zero_matrix(1), 2);
  CHECK(P3.module->dim() == oracle::tensor_over_dim({3, 3, 1}, {a, a, z}, {a, a, z}));
  CHECK(check_module(*P3.module).ok());
}

TEST_CASE("lax products on a weighted polynomial instance") {
  auto mon = truncated_poly(2, true);
  auto C = commutative_algebra(com_operad(4), mon);
  auto self = algebra_as_module(C);
  auto k = poly_module(C, mon, zero_matrix(1), "k");
  auto x = powers(shift_matrix(3), 3), z = powers(zero_matrix(1), 3);
  auto P = lax_product(C, {self, k});
  CHECK(P.module->dim() == oracle::tensor_over_dim({3, 1}, {x, z}, {x, z}));
  auto Q = lax_product(C, {self, self});
  CHECK(Q.module->dim() == oracle::tensor_over_dim({3, 3}, {x, x}, {x, x}));
  CHECK(check_module(*Q.module).ok());
}

TEST_CASE("associative lax products sum over orderings") {
  auto mon = truncated_poly(1, false);
  auto A = algebra_from_monoid(ass_operad(4), mon);
  auto self = algebra_as_module(A);
  auto k = module_from_bimodule(
      A, mon, plain({0}, "k"), [](int a, int m) { return a == 0 ? SparseVec::unit(m) : SparseVec(); },
      [](int m, int a) { return a == 0 ? SparseVec::unit(m) : SparseVec(); }, "k");
  CHECK(check_module(*k).ok());
  auto x = powers(shift_matrix(2), 2), z = powers(zero_matrix(1), 2);
  for (auto [M, act] : {std::pair{self, x}, std::pair{k, z}}) {
    auto P = lax_product(A, {M, M});
    int one = oracle::tensor_over_dim({M->dim(), M->dim()}, {act, act}, {act, act});
    CHECK(P.module->dim() == 2 * one);
  }
  auto P = lax_product(A, {self, k});
  CHECK(P.module->dim() == oracle::tensor_over_dim({2, 1}, {x, z}, {x, z}) +
                               oracle::tensor_over_dim({1, 2}, {z, x}, {z, x}));
}

TEST_CASE("lax products of free modules are free") {
  auto F = free_algebra(com_operad(4), plain({0}, "v"), 2);
  auto W1 = plain({0}, "a"), W2 = plain({0, 0}, "b");
  auto M1 = free_module(F.algebra, W1), M2 = free_module(F.algebra, W2);
  auto P = lax_product(F.algebra, {M1.module, M2.module});
  auto T = free_module(F.algebra, tensor(W1, W2));
  CHECK(P.module->dim() == T.module->dim());
  auto U = universal_envelope(F.algebra);
  CHECK(P.module->dim() == U.monoid.carrier.dim() * 2);

  auto M3 = free_module(F.algebra, W2);
  auto P3 = lax_product(F.algebra, {M1.module, M2.module, M3.module});
  CHECK(P3.module->dim() == U.monoid.carrier.dim() * 4);
  CHECK(check_module(*P3.module).ok());
}

TEST_CASE("associative lax product of free modules") {
  // F_A(k) = A ⊗ A°; two orderings of A ⊗ k ⊗ A ⊗ k ⊗ A, A = k<v> up to weight 2
  auto G = free_algebra(ass_operad(4), plain({0}, "v"), 2);
  auto W1 = plain({0}, "a");
  auto N1 = free_module(G.algebra, W1), N2 = free_module(G.algebra, W1);
  auto Q = lax_product(G.algebra, {N1.module, N2.module});
  long long one = 0;
  for (int w = 0; w <= 2; ++w) one += oracle::monomials(3, w);
  CHECK(Q.module->dim() == 2 * one);
}

TEST_CASE("symmetric products") {
  auto mon = truncated_poly(1, false);
  auto C = commutative_algebra(com_operad(4), mon);
  auto E = poly_module(C, mon, mixed_matrix(), "e");
  auto M = algebra_as_module(C);
  auto s0 = symmetric_product(C, M, 0, {E});
  CHECK(s0.module->dim() == lax_product(C, {E}).module->dim());
  auto s1 = symmetric_product(C, M, 1, {E});
  CHECK(s1.module->dim() == lax_product(C, {M, E}).module->dim());
  // S^2 of k[x]/x^2 ⊕ k
  auto s2 = symmetric_product(C, E, 2, {});
  CHECK(s2.module->dim() == oracle::symmetric_square_over_dim(3, powers(mixed_matrix(), 2)));
  CHECK(check_module(*s2.module).ok());
  // free module of rank 2: S^2 = C ⊗ Sym^2(k^2)
  auto F2 = free_module(C, plain({0, 0}, "w"));
  auto s2f = symmetric_product(C, F2.module, 2, {});
  CHECK(s2f.module->dim() == 2 * 3);
}

TEST_CASE("lax symmetry maps form a right action") {
  auto mon = truncated_poly(1, false);
  auto C = commutative_algebra(com_operad(4), mon);
  std::vector<ModulePtr> base{algebra_as_module(C), poly_module(C, mon, zero_matrix(1), "k"),
                              poly_module(C, mon, mixed_matrix(), "m")};
  std::map<std::vector<int>, LaxProduct> prods;
  for (auto& p : Permutation::all(3)) {
    std::vector<ModulePtr> f;
    for (int i = 0; i < 3; ++i) f.push_back(base[p(i)]);
    prods.emplace(p.images(), lax_product(C, f));
  }
  auto id = Permutation::identity(3);
  const LaxProduct& P = prods.at(id.images());
  for (auto& s : Permutation::all(3))
    for (auto& t : Permutation::all(3)) {
      const LaxProduct& Ps = prods.at(s.images());
      const LaxProduct& Pst = prods.at((s * t).images());
      GradedMap a = lax_symmetry(P, Pst, s * t);
      GradedMap b = compose(lax_symmetry(Ps, Pst, t), lax_symmetry(P, Ps, s));
      CHECK(a == b);
    }
  CHECK(lax_symmetry(P, P, id) == GradedMap::identity(P.module->space()));
  CHECK(intertwines(lax_symmetry(P, prods.at(Permutation::transposition(3, 0).images()),
                                 Permutation::transposition(3, 0)),
                    *P.module, *prods.at(Permutation::transposition(3, 0).images()).module));
}

TEST_CASE("lax inner hom with no arguments is the target") {
  auto mon = truncated_poly(1, false);
  auto C = commutative_algebra(com_operad(4), mon);
  auto N = poly_module(C, mon, mixed_matrix(), "n");
  auto H = lax_hom(C, {}, N);
  CHECK(H.module->dim() == N->dim());
  CHECK(check_module(*H.module).ok());
  // evaluation at the hole is an isomorphism of modules
  CHECK(module_map_space_dim(*H.module, *N, 0) == module_map_space_dim(*N, *N, 0));
}

TEST_CASE("commutative lax inner hom is hom over C") {
  auto mon = truncated_poly(1, false);
  auto C = commutative_algebra(com_operad(4), mon);
  auto M = poly_module(C, mon, mixed_matrix(), "m");
  auto k = poly_module(C, mon, zero_matrix(1), "k");
  for (auto& [M2, N] : {std::pair{M, k}, std::pair{k, M}, std::pair{M, M}}) {
    auto H = lax_hom(C, {M2}, N);
    int expect = 0;
    for (int d = -2; d <= 2; ++d) expect += module_map_space_dim(*M2, *N, d);
    CHECK(H.module->dim() == expect);
    CHECK(check_module(*H.module).ok());
  }
}

TEST_CASE("adjunction between lax product and lax inner hom") {
  auto mon = truncated_poly(1, false);
  auto C = commutative_algebra(com_operad(4), mon);
  auto self = algebra_as_module(C);
  auto k = poly_module(C, mon, zero_matrix(1), "k");
  auto m = poly_module(C, mon, mixed_matrix(), "m");
  struct Inst {
    ModulePtr M1, M2, N;
  };
  for (auto& in : {Inst{self, k, self}, Inst{k, self, k}, Inst{m, m, m}, Inst{m, k, m}}) {
    auto P = lax_product(C, {in.M1, in.M2});
    auto H = lax_hom(C, {in.M2}, in.N);
    int lhs = module_map_space_dim(*P.module, *in.N, 0);
    int rhs = module_map_space_dim(*in.M1, *H.module, 0);
    CHECK(lhs == rhs);
    // round trips on a basis of module maps
    for (auto& f : module_map_basis(*P.module, *in.N, 0, true)) {
      GradedMap g = adjoint_transpose(P, H, f);
      CHECK(intertwines(g, *in.M1, *H.module));
      CHECK(adjoint_untranspose(P, H, g) == f);
    }
    for (auto& g : module_map_basis(*in.M1, *H.module, 0, true)) {
      GradedMap f = adjoint_untranspose(P, H, g);
      CHECK(intertwines(f, *P.module, *in.N));
      CHECK(adjoint_transpose(P, H, f) == g);
    }
  }
}

TEST_CASE("associative adjunction") {
  auto mon = truncated_poly(1, false);
  auto A = algebra_from_monoid(ass_operad(4), mon);
  auto self = algebra_as_module(A);
  auto P = lax_product(A, {self, self});
  auto H = lax_hom(A, {self}, self);
  CHECK(check_module(*H.module).ok());
  CHECK(module_map_space_dim(*P.module, *self, 0) == module_map_space_dim(*self, *H.module, 0));
}

namespace {

std::vector<int> layer_dims(const std::vector<WordSpacePtr>& layers) {
  std::vector<int> d;
  for (auto& l : layers) d.push_back(l->dim());
  return d;
}

// Trivial module in weight one.
ModulePtr trivial_module(const AlgebraPtr& A, const Monoid& mon, int dim) {
  return module_from_action(A, mon, plain(std::vector<int>(dim, 0), "v", std::vector<int>(dim, 1)),
                            [](int a, int m) { return a == 0 ? SparseVec::unit(m) : SparseVec(); }, "V");
}

}  // namespace

TEST_CASE("free A-algebras: symmetric and tensor algebras") {
  auto k = unit_monoid();
  auto C = commutative_algebra(com_operad(4), k);
  auto S = free_A_algebra(C, trivial_module(C, k, 2), 3);
  auto d = layer_dims(S.layers);
  for (int n = 0; n <= 3; ++n) CHECK(d[n] == oracle::monomials(2, n));
  CHECK(check_algebra(*S.algebra).ok());

  auto A = algebra_from_monoid(ass_operad(4), k);
  auto T = free_A_algebra(A, trivial_module(A, k, 2), 3);
  d = layer_dims(T.layers);
  for (int n = 0; n <= 3; ++n) CHECK(d[n] == 1 << n);
  CHECK(check_algebra(*T.algebra).ok());
}

TEST_CASE("free A-algebra over a free module") {
  auto mon = truncated_poly(1, false);
  auto C = commutative_algebra(com_operad(4), mon);
  auto F = free_module(C, plain({0, 0}, "w"));
  auto S = free_A_algebra(C, F.module, 2);
  auto d = layer_dims(S.layers);
  for (int n = 0; n <= 2; ++n) CHECK(d[n] == C->dim() * oracle::monomials(2, n));
  CHECK(check_algebra(*S.algebra).ok());
  CHECK(is_algebra_morphism(*C, *S.algebra, S.unit_map));
  CHECK(rank(S.module_map) == F.module->dim());
}

TEST_CASE("free modules over S*_A(M)") {
  auto k = unit_monoid();
  auto C = commutative_algebra(com_operad(4), k);
  auto S = free_A_algebra(C, trivial_module(C, k, 2), 2);
  auto E = trivial_module(C, k, 1);
  auto SE = free_SAM_module(S, E);
  auto d = layer_dims(SE.layers);
  for (int n = 0; n <= 2; ++n) CHECK(d[n] == oracle::monomials(2, n));
  CHECK(check_module(*SE.module).ok());
  CHECK(rank(SE.inclusion) == 1);

  auto mon = truncated_poly(1, false);
  auto D = commutative_algebra(com_operad(4), mon);
  auto M = poly_module(D, mon, mixed_matrix(), "m");
  auto SD = free_A_algebra(D, M, 2);
  CHECK(check_algebra(*SD.algebra).ok());
  auto SDE = free_SAM_module(SD, algebra_as_module(D));
  CHECK(check_module(*SDE.module).ok());
  CHECK(layer_dims(SDE.layers) == layer_dims(SD.layers));
}
