#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "opalg/errors.hpp"

using namespace opalg;
using fixture::plain;

namespace {

struct Setup {
  Monoid mon = fixture::truncated_poly(2);
  AlgebraPtr A = commutative_algebra(com_operad(4), mon, "A");
  Kahler K = kahler(A);
};

// Index of a vector that must be a single basis element with coefficient 1.
int single(const SparseVec& v) {
  REQUIRE(v.size() == 1);
  REQUIRE(v.begin()->second == 1);
  return v.begin()->first;
}

// Random degree-0 map with entries in {-1, 0, 1}.
GradedMap random_map(const SpacePtr& s, const SpacePtr& t, std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(-1, 1);
  std::vector<SparseVec> cols;
  for (int c = 0; c < s->dim(); ++c) {
    VecBuilder b;
    for (int r = 0; r < t->dim(); ++r)
      if (t->degree(r) == s->degree(c)) b.add(r, Rational(coin(rng)));
    cols.push_back(b.build());
  }
  return GradedMap(s, t, 0, std::move(cols));
}

}  // namespace

TEST_CASE("jet module of the algebra itself") {
  Setup S;
  auto E = algebra_as_module(S.A);
  JetModule J = jet_module(E, S.K.d);
  CHECK(J.module->dim() == E->dim() + J.product.module->dim());
  for (auto [n, k] : J.module->space()->dims())
    CHECK(k == E->space()->dim_in_degree(n) + J.product.module->space()->dim_in_degree(n));
  // P_A(M, A) = M for a commutative A, so J = A ⊕ Ω
  CHECK(J.product.module->dim() == S.K.omega->dim());
  // classical count for k[x]/x^3 kept up to weight 2: dx, x dx
  CHECK(S.K.omega->dim() == 2);
  CHECK(check_module(*J.module).ok());
  CHECK_NOTHROW(check_exact(J.ses));
  CHECK(is_module_map(J.ses.i.map, *J.product.module, *J.module));
  CHECK(is_module_map(J.ses.p.map, *J.module, *E));
}

TEST_CASE("canonical connection on a free module") {
  Setup S;
  auto F = free_module(S.A, plain({0}, "w"));
  Connection c = canonical_connection(F, S.K.d);
  CHECK(check_connection(c).ok());
  JetModule J = jet_module(F.module, S.K.d);
  CHECK(connection_splitting_test(J, c.map));
  CHECK(atiyah_from_connection(c).representative.is_zero());
  // nothing on the weight-0 generators
  for (int b = 0; b < F.module->dim(); ++b)
    if (F.module->space()->weight(b) == 0) CHECK(c.map.column(b).empty());
  // zero ∇ misses the Leibniz term
  GradedMap zero(F.module->space(), c.product.module->space(), 0);
  CHECK_FALSE(connection_splitting_test(J, zero));
  // a module that is not U(A) ⊗ W
  auto P = lax_product(S.A, {F.module, F.module});
  CHECK_THROWS_AS(canonical_connection({P.module, P.words}, S.K.d), NotFreeModule);
}

TEST_CASE("canonical connection over a free algebra on one generator") {
  auto FA = free_algebra(com_operad(5), plain({0}, "v", {1}), 4);
  Kahler K = kahler(FA.algebra);
  auto F = free_module(FA.algebra, plain({0}, "w"));
  Connection c = canonical_connection(F, K.d);
  CHECK(check_connection(c).ok());
  const Operad& O = FA.algebra->operad();
  int v = single(FA.inclusion.column(0));
  int dv = single(K.d.map.column(v));
  int g = single(F.words->normal_form(O.unit(), {0}));
  // ∇(v^k w) = k v^(k-1) dv ⊗ w
  for (int k = 1; k <= 3; ++k) {
    SparseVec fk = F.module->nu(k, 0, std::vector<int>(k, v), g);
    REQUIRE_FALSE(fk.empty());
    std::vector<int> in(k - 1, v);
    in.push_back(dv);
    in.push_back(g);
    SparseVec expect = c.product.words->normal_form(0, in);
    expect *= Rational(k);
    CHECK(c.map.apply(fk) == expect);
  }
}

TEST_CASE("splitting test agrees with the connection diagrams") {
  Setup S;
  auto F = free_module(S.A, plain({0}, "w"));
  Connection c = canonical_connection(F, S.K.d);
  JetModule J = jet_module(F.module, S.K.d);
  auto linear = module_map_basis(*F.module, *c.product.module, 0, true);
  REQUIRE_FALSE(linear.empty());
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coin(-2, 2);
  int yes = 0, no = 0;
  for (int t = 0; t < 20; ++t) {
    GradedMap cand = c.map;
    if (t % 2 == 0) {
      for (auto& b : linear) cand += Rational(coin(rng)) * b;
    } else {
      cand = random_map(F.module->space(), c.product.module->space(), rng);
      if (t % 4 == 1) cand += c.map;
    }
    bool split = splits_jet(J, cand, true);
    bool diagrams = check_connection(Connection{F.module, S.K.d, c.product, cand}).ok();
    CHECK(split == diagrams);
    (split ? yes : no)++;
  }
  CHECK(yes >= 10);
  CHECK(no >= 1);
}

TEST_CASE("free connections found by solving") {
  Setup S;
  auto F = free_module(S.A, plain({0}, "w"));
  auto sol = find_free_connection(F.module, S.K.d);
  REQUIRE(sol.has_value());
  CHECK(check_free_connection(*sol).ok());
  // zero derivation: ∇ = 0
  auto K = fixture::koszul_module(S.A, S.mon, 2);
  Derivation zero{S.A, S.K.omega, GradedMap(S.A->space(), S.K.omega->space(), 0)};
  auto z = find_free_connection(K, zero);
  REQUIRE(z.has_value());
  CHECK(z->map.is_zero());
}

TEST_CASE("Atiyah class of the Koszul complex of x") {
  Setup S;
  int n = 3;
  auto K = fixture::koszul_module(S.A, S.mon, 2);
  CHECK(check_module(*K).ok());
  auto P = lax_product(S.A, {S.K.omega, K});
  int dx = single(S.K.d.map.column(1));
  // ∇(x^i e) = i x^(i-1) dx ⊗ e on both summands
  std::vector<SparseVec> cols;
  for (int m = 0; m < K->dim(); ++m) {
    int block = m / n, i = m % n;
    SparseVec v;
    if (i > 0) {
      v = P.words->normal_form(0, {i - 1, dx, block * n});
      v *= Rational(i);
    }
    cols.push_back(v);
  }
  Connection c{K, S.K.d, P, GradedMap(K->space(), P.module->space(), 0, cols)};
  CHECK(check_free_connection(c).ok());
  CHECK_FALSE(check_connection(c).ok());
  AtiyahClass at = atiyah_from_connection(c);
  // hand computation: a_i ↦ x^i dx ⊗ b_0, b_i ↦ 0
  for (int m = 0; m < K->dim(); ++m) {
    SparseVec expect = m < n ? P.words->normal_form(0, {m, dx, n}) : SparseVec();
    CHECK(at.representative.column(m) == expect);
  }
  CHECK_FALSE(at.representative.is_zero());

  auto other = find_free_connection(K, S.K.d);
  REQUIRE(other.has_value());
  CHECK(check_free_connection(*other).ok());
  AtiyahClass at2 = atiyah_from_connection(*other);
  GradedMap diff = at2.representative - at.representative;
  auto h = null_homotopy(diff, K->carrier(), P.module->carrier());
  REQUIRE(h.has_value());
  CHECK(commutator(P.module->carrier(), h->map, K->carrier()) == diff);

  JetModule J = jet_module(K, S.K.d);
  AtiyahClass ext = atiyah_from_extension(J);
  CHECK(ext.provenance == "extension, A-linear section");
  CHECK(is_chain_map(ext.representative, K->carrier(), J.product.module->carrier()));
  CHECK(null_homotopy(ext.representative - at.representative, K->carrier(), P.module->carrier()).has_value());
}

TEST_CASE("both Atiyah routes vanish on free modules") {
  Setup S;
  auto F = free_module(S.A, plain({0, 0}, "w"));
  Connection c = canonical_connection(F, S.K.d);
  AtiyahClass at = atiyah_from_connection(c);
  CHECK(at.representative.is_zero());
  JetModule J = jet_module(F.module, S.K.d);
  AtiyahClass ext = atiyah_from_extension(J);
  CHECK(null_homotopy(ext.representative, F.module->carrier(), J.product.module->carrier()).has_value());
}

TEST_CASE("product connections and derivatives of morphisms") {
  Setup S;
  auto F = free_module(S.A, plain({0}, "w"));
  Connection c = canonical_connection(F, S.K.d);
  // m = 1, f = id
  auto P1 = lax_product(S.A, {F.module});
  GradedMap prod1 = product_connection(P1, c.product, {c});
  CHECK(check_product_connection(P1, c.product, S.K.d, prod1).ok());
  GradedMap f1 = unit_into_product(P1);
  CHECK(derivative_of_morphism(f1, c, P1, c.product, {c}).is_zero());
  // m = 2 with a module chain map F -> P_A(F, F)
  auto P2 = lax_product(S.A, {F.module, F.module});
  auto Q2 = lax_product(S.A, {S.K.omega, F.module, F.module});
  GradedMap prod2 = product_connection(P2, Q2, {c, c});
  CHECK(check_product_connection(P2, Q2, S.K.d, prod2).ok());
  auto maps = module_map_basis(*F.module, *P2.module, 0, true);
  REQUIRE_FALSE(maps.empty());
  GradedMap f(F.module->space(), P2.module->space(), 0);
  for (size_t i = 0; i < maps.size(); ++i) f += Rational(static_cast<int>(i) + 1) * maps[i];
  GradedMap df = derivative_of_morphism(f, c, P2, Q2, {c, c});
  CHECK(is_chain_map(df, F.module->carrier(), Q2.module->carrier()));
  CHECK(is_module_map(df, *F.module, *Q2.module));
}

TEST_CASE("derivative of a composite on a rank-one free module") {
  Setup S;
  auto F = free_module(S.A, plain({0}, "w"));
  Connection c = canonical_connection(F, S.K.d);
  auto P = lax_product(S.A, {F.module});
  GradedMap u = unit_into_product(P);
  auto ends = module_map_basis(*F.module, *F.module, 0, true);
  REQUIRE(ends.size() == 3);
  GradedMap f = ends[1] + ends[2], g = ends[0] + Rational(2) * ends[2];
  auto nabla_of = [&](const GradedMap& h) { return derivative_of_morphism(compose(u, h), c, P, c.product, {c}); };
  GradedMap df = nabla_of(f), dg = nabla_of(g);
  CHECK_FALSE(df.is_zero());
  // ∇(g f) = P_A(id, g) ∇f + (∇g) f
  GradedMap lhs = nabla_of(compose(g, f));
  GradedMap rhs = compose(lax_map(c.product, P, c.product, compose(u, g)), df) + compose(dg, f);
  CHECK(lhs == rhs);
}
