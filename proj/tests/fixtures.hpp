#pragma once

// Small algebras and modules shared by the later test files.

#include "opalg/curvature.hpp"

namespace fixture {

using namespace opalg;

inline Complex plain(const std::vector<int>& degs, const std::string& p, const std::vector<int>& weights = {}) {
  std::vector<BasisElement> b;
  for (size_t i = 0; i < degs.size(); ++i)
    b.push_back({degs[i], weights.empty() ? 0 : weights[i], p + std::to_string(i)});
  return Complex::with_zero_differential(make_space(b));
}

// k[x]/x^(top+1), x^i in weight i.
inline Monoid truncated_poly(int top) {
  std::vector<int> w;
  for (int i = 0; i <= top; ++i) w.push_back(i);
  return {plain(std::vector<int>(top + 1, 0), "x", w),
          [top](int i, int j) { return i + j <= top ? SparseVec::unit(i + j) : SparseVec(); }, SparseVec::unit(0)};
}

// The complex A --x--> A over k[x]/x^(top+1): a_i = x^i in degree -1
// (weight i+1), b_i = x^i in degree 0 (weight i). Quasi-isomorphic to
// A/x up to the truncation.
inline ModulePtr koszul_module(const AlgebraPtr& A, const Monoid& mon, int top) {
  int n = top + 1;
  std::vector<BasisElement> basis;
  for (int i = 0; i < n; ++i) basis.push_back({-1, i + 1, "a" + std::to_string(i)});
  for (int i = 0; i < n; ++i) basis.push_back({0, i, "b" + std::to_string(i)});
  auto s = make_space(basis);
  std::vector<SparseVec> d;
  for (int i = 0; i < n; ++i) d.push_back(i + 1 < n ? SparseVec::unit(n + i + 1) : SparseVec());
  for (int i = 0; i < n; ++i) d.push_back(SparseVec());
  Complex C(s, GradedMap(s, s, 1, std::move(d)));
  auto act = [n](int a, int m) {
    int block = m / n, i = m % n;
    return a + i < n ? SparseVec::unit(block * n + a + i) : SparseVec();
  };
  return module_from_action(A, mon, C, act, "K");
}

inline GradedMap zero_map(const SpacePtr& s, const SpacePtr& t, int degree) { return GradedMap(s, t, degree); }

// Lie brackets and Chevalley–Eilenberg elements.

using Bracket = std::vector<std::vector<std::vector<int>>>;  // c[k][i][j]

// Jacobi identity straight from the structure constants.
inline bool jacobi_holds(const Bracket& c) {
  int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int out = 0; out < n; ++out) {
          long long s = 0;
          // [e_i,[e_j,e_l]] + [e_j,[e_l,e_i]] + [e_l,[e_i,e_j]]
          for (int m = 0; m < n; ++m)
            s += static_cast<long long>(c[m][j][l]) * c[out][i][m] + static_cast<long long>(c[m][l][i]) * c[out][j][m] +
                 static_cast<long long>(c[m][i][j]) * c[out][l][m];
          if (s != 0) return false;
        }
  return true;
}

// Antisymmetric bracket from the values [e_i, e_j] for i < j.
inline Bracket bracket(int n, const std::vector<std::tuple<int, int, int, int>>& entries) {
  Bracket c(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (auto [i, j, k, v] : entries) {
    c[k][i][j] += v;
    c[k][j][i] -= v;
  }
  return c;
}

// The Chevalley–Eilenberg element g(ξ^k) = −½ Σ c^k_ij ξ^i ξ^j on odd generators.
struct CE {
  FreeAlgebra F;
  MCElement g;
};

inline CE chevalley_eilenberg(const Bracket& c, int arity_cap) {
  int n = static_cast<int>(c.size());
  auto F = free_algebra(com_operad(arity_cap), plain(std::vector<int>(n, 1), "xi", std::vector<int>(n, 1)), n);
  std::vector<int> gen;
  for (int i = 0; i < n; ++i) gen.push_back(F.inclusion.column(i).begin()->first);
  std::vector<SparseVec> cols;
  for (int k = 0; k < n; ++k) {
    VecBuilder b;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (c[k][i][j] != 0) b.add(F.algebra->mu(2, 0, {gen[i], gen[j]}), Rational(-c[k][i][j], 2));
    cols.push_back(b.build());
  }
  GradedMap g(F.generators.space(), F.algebra->space(), 1, std::move(cols));
  return {F, mc_element(F, g)};
}

inline Bracket two_dim() { return bracket(2, {{0, 1, 1, 1}}); }  // [x, y] = y
inline Bracket three_dim() { return bracket(3, {{0, 1, 1, 1}, {0, 2, 2, 1}}); }

// ξ(e_i) = Σ c e_j, degree 0 maps V -> F_O(V) through the generators.
inline GradedMap linear_xi(const FreeAlgebra& F, const std::vector<std::tuple<int, int, int>>& entries) {
  int n = F.generators.space()->dim();
  std::vector<VecBuilder> b(n);
  for (auto [i, j, c] : entries) b[i].add(F.inclusion.column(j).begin()->first, Rational(c));
  std::vector<SparseVec> cols;
  for (auto& x : b) cols.push_back(x.build());
  return GradedMap(F.generators.space(), F.algebra->space(), 0, std::move(cols));
}

inline GradedMap zero_xi(const FreeAlgebra& F) { return GradedMap(F.generators.space(), F.algebra->space(), 0); }

// x even, y odd, g(x) = xy, and the gauge direction ξ(x) = x^2.
struct Mixed {
  MCElement g;
  GradedMap square;
};

inline Mixed mixed_instance() {
  auto G = free_algebra(com_operad(4), plain({0, 1}, "v", {1, 1}), 3);
  int x = G.inclusion.column(0).begin()->first, y = G.inclusion.column(1).begin()->first;
  VecBuilder gx, xx;
  gx.add(G.algebra->mu(2, 0, {x, y}), 1);
  xx.add(G.algebra->mu(2, 0, {x, x}), 1);
  auto m = mc_element(G, GradedMap(G.generators.space(), G.algebra->space(), 1, {gx.build(), SparseVec{}}));
  return {m, GradedMap(G.generators.space(), G.algebra->space(), 0, {xx.build(), SparseVec{}})};
}

}  // namespace fixture
