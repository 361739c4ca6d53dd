#include <chrono>

#include "doctest.h"
#include "opalg/constructions.hpp"
#include "opalg/errors.hpp"
#include "oracles.hpp"

using namespace opalg;

namespace {

Complex gens(std::vector<int> degs) {
  std::vector<BasisElement> b;
  for (size_t i = 0; i < degs.size(); ++i) b.push_back({degs[i], 0, "v" + std::to_string(i)});
  return Complex::with_zero_differential(make_space(b));
}

std::map<int, int> weight_dims(const GradedSpace& s) {
  std::map<int, int> r;
  for (int i = 0; i < s.dim(); ++i) ++r[s.weight(i)];
  return r;
}

// k[x]/x^2, or the upper triangular 2x2 matrices e11, e12, e22.
Monoid dual_numbers() {
  auto s = make_space({{0, 0, "1"}, {0, 0, "x"}});
  return {Complex::with_zero_differential(s),
          [](int i, int j) { return i + j < 2 ? SparseVec::unit(i + j) : SparseVec(); }, SparseVec::unit(0)};
}

Monoid upper_triangular() {
  auto s = make_space({{0, 0, "e11"}, {0, 0, "e12"}, {0, 0, "e22"}});
  // e_ab e_cd = δ_bc e_ad
  static const int row[] = {0, 0, 1}, col[] = {0, 1, 1};
  auto idx = [](int a, int d) { return a == 0 ? (d == 0 ? 0 : 1) : 2; };
  return {Complex::with_zero_differential(s),
          [=](int i, int j) { return col[i] == row[j] ? SparseVec::unit(idx(row[i], col[j])) : SparseVec(); },
          SparseVec::unit(0) + SparseVec::unit(2)};
}

}  // namespace

TEST_CASE("free algebra weight dimensions") {
  for (int d = 1; d <= 2; ++d) {
    std::vector<int> degs(d, 0);
    auto FA = free_algebra(ass_operad(4), gens(degs), 4);
    auto FC = free_algebra(com_operad(4), gens(degs), 4);
    auto wa = weight_dims(*FA.algebra->space());
    auto wc = weight_dims(*FC.algebra->space());
    for (int n = 0; n <= 4; ++n) {
      long long p = 1;
      for (int i = 0; i < n; ++i) p *= d;
      CHECK(wa[n] == p);
      CHECK(wc[n] == oracle::monomials(d, n));
      CHECK(wc[n] == oracle::binomial(d + n - 1, n));
    }
  }
}

TEST_CASE("free algebras satisfy the algebra axioms") {
  auto FC = free_algebra(com_operad(3), gens({0, 0}), 3);
  CHECK(check_algebra(*FC.algebra).ok());
  auto FA = free_algebra(ass_operad(3), gens({0, 1}), 3);
  CHECK(check_algebra(*FA.algebra).ok());
  // an odd generator squares to zero in the commutative case
  auto FO = free_algebra(com_operad(3), gens({1}), 3);
  auto w = weight_dims(*FO.algebra->space());
  CHECK(w[0] == 1);
  CHECK(w[1] == 1);
  CHECK(w[2] == 0);
  CHECK(check_algebra(*FO.algebra).ok());
}

TEST_CASE("generators land in weight one") {
  auto F = free_algebra(ass_operad(3), gens({0, 0}), 3);
  for (auto& c : F.inclusion.columns()) {
    REQUIRE(c.size() == 1);
    CHECK(F.algebra->weight(c.begin()->first) == 1);
  }
}

TEST_CASE("weight cap above arity cap") {
  CHECK_THROWS_AS(free_algebra(com_operad(2), gens({0}), 3), TruncationExceeded);
}

TEST_CASE("freeness: algebra maps out of F(V) are determined by V") {
  auto F = free_algebra(com_operad(3), gens({0}), 3);
  auto B = commutative_algebra(com_operad(3), dual_numbers());
  // v -> a·1 + b·x for a few (a, b)
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 2; ++b) {
      VecBuilder col;
      col.add(0, a);
      col.add(1, b);
      GradedMap f(F.generators.space(), B->space(), 0, {col.build()});
      GradedMap ext = extend_to_morphism(F, *B, f);
      CHECK(compose(ext, F.inclusion) == f);
      CHECK(is_algebra_morphism(*F.algebra, *B, ext));
    }
}

TEST_CASE("coinvariants") {
  auto X = gens({0, 0});
  auto triv = coinvariants(X, {GradedMap::identity(X.space())});
  CHECK(triv.complex.dim() == 2);
  GradedMap swap(X.space(), X.space(), 0, {SparseVec::unit(1), SparseVec::unit(0)});
  CHECK(coinvariants(X, {swap}).complex.dim() == 1);
  // S_2 on V ⊗ V
  auto VV = tensor(X, X);
  auto tw = braiding(X, X);
  CHECK(coinvariants(VV, {tw.map}).complex.dim() == 3);
  // odd V: the symmetric square is the exterior square
  auto Y = gens({1, 1});
  auto YY = tensor(Y, Y);
  CHECK(coinvariants(YY, {braiding(Y, Y).map}).complex.dim() == 1);
}

TEST_CASE("U of a free commutative algebra is the algebra") {
  auto F = free_algebra(com_operad(4), gens({0}), 3);
  auto U = universal_envelope(F.algebra);
  auto w = weight_dims(*U.monoid.carrier.space());
  for (int n = 0; n <= 3; ++n) CHECK(w[n] == 1);
  CHECK(U.monoid.carrier.dim() == 4);
  CHECK(check_monoid(U.monoid).ok());
  CHECK(check_envelope_module(U, *algebra_as_module(F.algebra)).ok());
  CHECK_FALSE(U.words->truncation_limited());
}

TEST_CASE("U of a commutative monoid is the monoid") {
  auto C = commutative_algebra(com_operad(4), dual_numbers());
  auto U = universal_envelope(C);
  CHECK(U.monoid.carrier.dim() == 2);
  CHECK(check_monoid(U.monoid).ok());
}

TEST_CASE("U of an associative algebra has the dimension of A ⊗ A°") {
  for (auto M : {dual_numbers(), upper_triangular()}) {
    auto A = algebra_from_monoid(ass_operad(5), M);
    auto U = universal_envelope(A);
    CHECK(U.monoid.carrier.dim() == A->dim() * A->dim());
    auto r = check_monoid(U.monoid);
    CHECK(r.ok());
    CHECK(r.skipped == 0);
    CHECK(check_envelope_module(U, *algebra_as_module(A)).ok());
  }
}

TEST_CASE("tensor algebra is a monoid") {
  auto C = commutative_algebra(com_operad(3), dual_numbers());
  auto T = tensor_algebra(C);
  auto r = check_monoid(T.monoid);
  CHECK(r.ok());
  CHECK(r.checked > 0);
  // Com(n+1) ⊗_{S_n} A^{⊗n}: symmetric powers of a 2-dim space
  CHECK(T.monoid.carrier.dim() == 1 + 2 + 3);
}

TEST_CASE("Euler derivation") {
  auto F = free_algebra(com_operad(3), gens({0}), 3);
  auto M = algebra_as_module(F.algebra);
  Derivation d = derivation_from_map(F, M, F.inclusion);
  CHECK(check_derivation(d).ok());
  CHECK(restrict_to_generators(F, d) == F.inclusion);
  for (int b = 0; b < F.algebra->dim(); ++b)
    CHECK(d.map.column(b) == SparseVec::unit(b, F.algebra->weight(b)));
  // zero map gives zero
  GradedMap zero(F.generators.space(), M->space(), 0);
  CHECK(derivation_from_map(F, M, zero).map.is_zero());
}

TEST_CASE("derivations out of a free algebra") {
  auto F = free_algebra(ass_operad(3), gens({0, 0}), 3);
  auto M = algebra_as_module(F.algebra);
  // φ(v0) = v1, φ(v1) = v0·v0 via the module
  GradedMap phi(F.generators.space(), M->space(), 0,
                {F.inclusion.column(1), F.algebra->mu(2, SparseVec::unit(0), {F.inclusion.column(0), F.inclusion.column(0)})});
  Derivation d = derivation_from_map(F, M, phi);
  CHECK(check_derivation(d).ok());
  CHECK(restrict_to_generators(F, d) == phi);
  // derivations correspond to maps on generators
  CHECK(derivation_space_dim(*F.algebra, *M, 0) == 2 * F.algebra->dim());
}

TEST_CASE("Kahler differentials of a polynomial algebra") {
  auto F = free_algebra(com_operad(4), gens({0}), 3);
  auto K = kahler(F.algebra);
  auto w = weight_dims(*K.omega->space());
  CHECK(w[0] == 0);
  for (int n = 1; n <= 3; ++n) CHECK(w[n] == 1);
  CHECK(check_derivation(K.d).ok());
  CHECK(check_module(*K.omega).ok());
  CHECK(derivation_space_dim(*F.algebra, *K.omega, 0) == module_map_space_dim(*K.omega, *K.omega, 0));
}

TEST_CASE("Kahler differentials of a free algebra are U(A) ⊗ V") {
  auto F = free_algebra(com_operad(4), gens({0, 0}), 3);
  auto K = kahler(F.algebra);
  auto U = universal_envelope(F.algebra);
  auto wk = weight_dims(*K.omega->space());
  auto wu = weight_dims(*U.monoid.carrier.space());
  for (int n = 1; n <= 3; ++n) CHECK(wk[n] == 2 * wu[n - 1]);
}

TEST_CASE("corrupted multiplication is caught") {
  auto C = commutative_algebra(com_operad(3), dual_numbers());
  CHECK(check_algebra(*C).ok());
  auto bad = C->with_mu_override(2, 0, {1, 0}, -C->mu(2, 0, {1, 0}));
  auto r = check_algebra(bad);
  CHECK_FALSE(r.ok());
  bool named = false;
  for (auto& f : r.failures) named = named || f.diagram.rfind("algebra.", 0) == 0;
  CHECK(named);
}
