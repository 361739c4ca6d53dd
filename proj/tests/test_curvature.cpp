#include "doctest.h"
#include "fixtures.hpp"
#include "opalg/curvature.hpp"
#include "opalg/errors.hpp"

using namespace opalg;

using namespace fixture;

TEST_CASE("Chevalley–Eilenberg elements and Jacobi") {
  auto ce = chevalley_eilenberg(two_dim(), 4);
  CHECK(jacobi_holds(two_dim()));
  CHECK_FALSE(ce.g.g.is_zero());
  CHECK(mc_check(ce.g));
  // three dimensions: [x,y] = y, [x,z] = z is a Lie algebra
  Bracket good = bracket(3, {{0, 1, 1, 1}, {0, 2, 2, 1}});
  Bracket bad = bracket(3, {{0, 1, 0, 1}, {1, 2, 1, 1}});  // [x,y] = x, [y,z] = y
  CHECK(jacobi_holds(good));
  CHECK_FALSE(jacobi_holds(bad));
  CHECK(mc_check(chevalley_eilenberg(good, 4).g) == jacobi_holds(good));
  auto mut = chevalley_eilenberg(bad, 4).g;
  CHECK(mc_check(mut) == jacobi_holds(bad));
  CHECK_FALSE(mc_defect(mut).is_zero());
  CHECK_THROWS_AS(deform(mut), DimensionError);
}

TEST_CASE("Q_nabla is the free derivation of the connection") {
  auto ce = chevalley_eilenberg(two_dim(), 6);
  CurvatureMC cm = curvature_mc(ce.g, 2);
  const FreeAAlgebra& S = cm.Sg;
  CHECK(check_free_derivation(S, cm.Q, cm.nabla.d).ok());
  CHECK(compose(cm.Q, S.unit_map) == compose(S.module_map, cm.nabla.d.map));
  CHECK(compose(cm.Q, S.module_map) == compose(symmetrise(cm.nabla.product, S), cm.nabla.map));
  // a wrong value on M breaks the diagram
  GradedMap bad = extend_derivation(S, compose(S.module_map, cm.nabla.d.map), GradedMap(S.generators->space(), S.algebra->space(), cm.nabla.d.map.degree()));
  CHECK_FALSE(check_free_derivation(S, bad, cm.nabla.d).ok());
}

TEST_CASE("curvature components") {
  auto ce = chevalley_eilenberg(two_dim(), 6);
  CurvatureMC cm = curvature_mc(ce.g, 3);
  CHECK(cm.mc);
  const FreeAAlgebra& S = cm.Sg;
  auto at = atiyah_from_connection(cm.nabla);
  CHECK_FALSE(at.representative.is_zero());
  const GradedMap& dM = cm.Mg.M.module->carrier().d();
  REQUIRE(cm.R.components.size() >= 3);
  CHECK(cm.R.components[0].is_zero());
  CHECK(cm.R.components[1] == compose(S.module_map, dM));
  CHECK(cm.R.components[2] == compose(symmetrise(cm.nabla.product, S), at.representative));
  // −[∂,∇] is ∇∂ − ∂∇
  CHECK(at.representative == compose(cm.nabla.map, dM) - compose(cm.nabla.product.module->carrier().d(), cm.nabla.map));
  CHECK(compose(cm.R.map, cm.R.map).is_zero());
  CHECK(graded_bracket(cm.R.map, cm.R.map).is_zero());

  auto SE = free_SAM_module(S, cm.Mg.M.module);
  GradedMap D = d_nabla(S, SE, cm.Q, cm.nabla);
  CHECK(check_free_q_connection(S, SE, cm.Q, D).ok());
  auto T = total_curvature_module(SE, D);
  REQUIRE(T.components.size() >= 2);
  CHECK(T.components[0] == compose(SE.inclusion, dM));
  CHECK(T.components[1] == compose(symmetrise(cm.nabla.product, SE), at.representative));
  CHECK(graded_bracket(T.map, T.map).is_zero());
}

TEST_CASE("exp_ad against a truncated sum") {
  auto ce = chevalley_eilenberg(two_dim(), 5);
  CurvatureMC cm = curvature_mc(ce.g, 2);
  const GradedMap& d0 = cm.S0.algebra->carrier().d();
  // Q raises the M-degree, so ad Q is nilpotent of order ≤ 3 here
  GradedMap a1 = graded_bracket(cm.Q, d0);
  GradedMap a2 = graded_bracket(cm.Q, a1);
  GradedMap a3 = graded_bracket(cm.Q, a2);
  CHECK(exp_ad(cm.Q, d0) == d0 + a1 + Rational(1, 2) * a2 + Rational(1, 6) * a3);
}

TEST_CASE("Bianchi witnesses") {
  for (int which = 0; which < 2; ++which) {
    CAPTURE(which);
    auto ce = which == 0 ? chevalley_eilenberg(two_dim(), 6) : chevalley_eilenberg(three_dim(), 6);
    CurvatureMC cm = curvature_mc(ce.g, 3);
    const FreeAAlgebra& S = cm.Sg;
    const Complex& SC = S.algebra->carrier();
    const Complex& MC = S.generators->carrier();
    auto bw = bianchi_witness(S, cm.R);
    CHECK(commutator(SC, bw.homotopy, MC) == bw.composite);
    CHECK(bw.bracket == commutator(SC, cm.R.components[3], MC));
    CHECK(bw.relation == 1);
    // R∘R = 0 in every M-degree
    for (int n = 0; n < static_cast<int>(S.layers.size()); ++n)
      CHECK(layer_part(compose(cm.R.map, compose(cm.R.map, S.module_map)), S.offsets, S.algebra->dim(), n).is_zero());
    if (which == 1) CHECK_FALSE(cm.R.components[3].is_zero());

    auto SE = free_SAM_module(S, cm.Mg.M.module);
    auto T = total_curvature_module(SE, d_nabla(S, SE, cm.Q, cm.nabla));
    auto bm = bianchi_witness_module(S, SE, *cm.Mg.M.module, cm.R, T);
    const Complex& EC = cm.Mg.M.module->carrier();
    CHECK(commutator(SE.module->carrier(), bm.homotopy, EC) == bm.composite);
    CHECK_FALSE(bm.composite.is_zero());
    // T∘T = 0 in M-degree 2 forces α̂α = −[∂, T^(2)]
    CHECK(bm.relation == -1);
    CHECK((bm.composite + bm.bracket).is_zero());
  }
}

TEST_CASE("undeformed instance and the twist Ξ") {
  auto ce = chevalley_eilenberg(two_dim(), 5);
  auto zero = mc_element(ce.F, GradedMap(ce.F.generators.space(), ce.F.algebra->space(), 1));
  CHECK(mc_check(zero));
  CurvatureMC c0 = curvature_mc(zero, 2);
  CHECK(c0.mc);
  CHECK(atiyah_from_connection(c0.nabla).representative.is_zero());
  CHECK(c0.Rhat.is_zero());
  CHECK(c0.restricted.is_zero());

  CurvatureMC cm = curvature_mc(ce.g, 2);
  // the deformed differential of S*_A(M) is ∂_0 + Ξ(g)
  GradedMap diff = cm.Sg.algebra->carrier().d() - cm.S0.algebra->carrier().d();
  CHECK(diff == induced_on_free_A_algebra(cm.S0, cm.M0, ce.g.g));
  CHECK_FALSE(cm.Rhat.is_zero());
  CHECK(cm.restricted == compose(cm.Rhat, cm.S0.module_map));
}

TEST_CASE("gauge flow") {
  auto ce = chevalley_eilenberg(two_dim(), 5);
  const FreeAlgebra& F = ce.F;
  // ξ = 0: the flow is constant
  auto still = gauge_flow(ce.g, {zero_xi(F)}, 3);
  REQUIRE(still.g.size() == 4);
  CHECK(still.g[0] == ce.g.g);
  for (int k = 1; k <= 3; ++k) CHECK(still.g[k].is_zero());
  CHECK(still.first_bad() == -1);

  // first coefficient by hand: g_1 = [ξ̂, ĝ]∘ι, ∂ = 0 on the free algebra
  GradedMap xi = linear_xi(F, {{0, 1, 1}, {1, 0, 2}});
  auto fl = gauge_flow(ce.g, {xi}, 3);
  GradedMap xh = hat_of(F, xi);
  GradedMap g1 = compose(compose(xh, ce.g.hat) - compose(ce.g.hat, xh), F.inclusion);
  CHECK(fl.g[1] == g1);
  CHECK(fl.first_bad() == -1);
  for (int k = 0; k <= 3; ++k) CHECK(fl.defect[k].is_zero());
  // each truncation is itself MC only to its own order; the coefficients agree
  auto fl2 = gauge_flow(ce.g, {xi}, 2);
  for (int k = 0; k <= 2; ++k) CHECK(fl2.g[k] == fl.g[k]);

  // a time-dependent ξ and a Jacobi-violating start
  auto fl3 = gauge_flow(ce.g, {xi, linear_xi(F, {{1, 1, -1}})}, 3);
  CHECK(fl3.first_bad() == -1);
  auto bad = chevalley_eilenberg(bracket(3, {{0, 1, 0, 1}, {1, 2, 1, 1}}), 4).g;
  CHECK(gauge_flow(bad, {zero_xi(bad.F)}, 2).first_bad() == 0);
}

TEST_CASE("gauge transport of the curvature") {
  auto ce = chevalley_eilenberg(two_dim(), 5);
  const FreeAlgebra& F = ce.F;
  CurvatureMC base = curvature_mc(ce.g, 2);
  auto still = gauge_flow(ce.g, {zero_xi(F)}, 2);
  CHECK(gauge_transport_check(still, base));
  CHECK(gauge_transport_check(still, base, true));
  GradedMap xi = linear_xi(F, {{0, 1, 1}, {1, 0, 2}});
  auto fl = gauge_flow(ce.g, {xi}, 2);
  CHECK(gauge_transport_check(fl, base));
  // ξ is linear on odd generators, so Ξ(ξ) commutes with Q and exp drops out
  CHECK(graded_bracket(base.Q, induced_on_free_A_algebra(base.S0, base.M0, xi)).is_zero());
  CHECK(gauge_transport_check(fl, base, true));

  // x even, y odd, g(x) = xy, ξ(x) = x^2
  auto [m, sq] = mixed_instance();
  REQUIRE(mc_check(m));
  // x is even, so F is really cut at weight 3 and every construction must be cut there too
  CurvatureMC b2 = curvature_mc(m, 2, 3);
  CHECK(check_derivation(b2.Mg.d).ok());
  CHECK(check_free_connection(b2.nabla).ok());
  CHECK(b2.mc);
  CHECK_FALSE(graded_bracket(b2.Q, induced_on_free_A_algebra(b2.S0, b2.M0, sq)).is_zero());
  for (int T = 1; T <= 2; ++T) {
    auto f = gauge_flow(m, {sq}, T);
    CHECK(f.first_bad() == -1);
    CHECK_FALSE(f.g[1].is_zero());
    CHECK(gauge_transport_check(f, b2));
    CHECK_FALSE(gauge_transport_check(f, b2, true));
  }
}

