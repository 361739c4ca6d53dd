#include "doctest.h"
#include "oracles.hpp"
#include "opalg/linalg.hpp"

using namespace opalg;

namespace {

oracle::Matrix dense(const GradedMap& f) {
  oracle::Matrix m(f.target()->dim(), std::vector<Rational>(f.source()->dim()));
  for (int j = 0; j < f.source()->dim(); ++j)
    for (auto& [i, c] : f.column(j)) m[i][j] = c;
  return m;
}

}  // namespace

TEST_CASE("rationals parse and print reduced") {
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(to_string(parse_rational("-6/3")) == "-2");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
  CHECK_THROWS_AS(parse_rational("x"), SchemaError);
  CHECK_THROWS_AS(parse_rational("1/-2"), SchemaError);
}

TEST_CASE("sparse vectors drop cancelled entries") {
  SparseVec a = SparseVec::unit(3, 2);
  a.add_scaled(SparseVec::unit(1, 5), 1);
  a.add_scaled(SparseVec::unit(3, 1), -2);
  REQUIRE(a.size() == 1);
  CHECK(a.coeff(1) == 5);
}

TEST_CASE("compose") {
  auto V = space_of_dims({{0, 2}});
  auto f = GradedMap::from_dense(V, V, 0, {{1, 2}, {Rational(1, 3), -1}});
  auto g = GradedMap::from_dense(V, V, 0, {{Rational(-2, 7), 5}, {4, 0}});
  CHECK(compose(GradedMap::identity(V), f) == f);
  // entrywise expansion against the oracle product
  auto prod = oracle::multiply(dense(f), dense(g));
  CHECK(dense(compose(f, g)) == prod);

  auto X = space_of_dims({{0, 1}, {1, 1}, {2, 1}});
  auto d = GradedMap(X, X, 1, {SparseVec::unit(1), SparseVec::unit(2), SparseVec()});
  CHECK(compose(d, d).degree() == 2);

  auto W = space_of_dims({{0, 3}});
  CHECK_THROWS_AS(compose(f, GradedMap(V, W, 0)), DimensionError);
}

TEST_CASE("degree violations are rejected") {
  auto X = space_of_dims({{0, 1}, {1, 1}});
  CHECK_THROWS_AS(GradedMap(X, X, 0, {SparseVec::unit(1), SparseVec()}), DimensionError);
}

TEST_CASE("kernel and image") {
  auto V3 = space_of_dims({{0, 3}});
  auto z = GradedMap(V3, V3, 0);
  CHECK(kernel(z).dim() == 3);
  CHECK(image(z).dim() == 0);
  auto id = GradedMap::identity(V3);
  CHECK(kernel(id).dim() == 0);
  CHECK(image(id).dim() == 3);

  auto V2 = space_of_dims({{0, 2}});
  auto V1 = space_of_dims({{0, 1}});
  auto f = GradedMap::from_dense(V2, V1, 0, {{1, 1}});
  auto k = kernel(f);
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(SparseVec::from_unsorted({{0, 1}, {1, -1}})));
  CHECK(!k.contains(SparseVec::unit(0)));
}

TEST_CASE("rank-nullity per degree on a mixed map") {
  auto S = space_of_dims({{0, 3}, {1, 2}});
  auto T = space_of_dims({{1, 2}, {2, 3}});
  auto f = GradedMap::from_dense(S, T, 1,
                                 {{1, 2, 3, 0, 0}, {2, 4, 6, 0, 0}, {0, 0, 0, 1, 1}, {0, 0, 0, 1, 2}, {0, 0, 0, 0, 0}});
  auto kd = kernel(f).dims();
  auto im = image(f).dims();
  CHECK(kd[0] + im[1] == 3);
  CHECK(kd[1] + im[2] == 2);
  CHECK(im[1] == oracle::rank(f.block(0)));
  CHECK(im[2] == oracle::rank(f.block(1)));
}

TEST_CASE("quotient") {
  auto V = space_of_dims({{0, 3}});
  auto q0 = quotient(V, Subspace(V, {}));
  CHECK(q0.space->dim() == 3);
  CHECK(q0.projection == GradedMap::identity(V));
  auto qa = quotient(V, Subspace(V, {SparseVec::unit(0), SparseVec::unit(1), SparseVec::unit(2)}));
  CHECK(qa.space->dim() == 0);

  SparseVec r = SparseVec::from_unsorted({{0, 1}, {2, 3}});
  auto q = quotient(V, Subspace(V, {r}));
  CHECK(q.space->dim() == 2);
  CHECK(oracle::rank(dense(q.projection)) == 2);
  CHECK(q.projection.apply(r).empty());
}

TEST_CASE("solve") {
  auto V = space_of_dims({{0, 2}});
  auto id = GradedMap::identity(V);
  SparseVec y = SparseVec::from_unsorted({{0, Rational(3, 4)}, {1, -2}});
  CHECK(*solve(id, y) == y);
  CHECK(!solve(GradedMap(V, V, 0), y));

  auto V1 = space_of_dims({{0, 1}});
  auto f = GradedMap::from_dense(V, V1, 0, {{1, 1}});
  auto x = solve(f, SparseVec::unit(0));
  REQUIRE(x);
  CHECK(*x == SparseVec::unit(0));
  CHECK(f.apply(*x) == SparseVec::unit(0));

  // pseudo-inverse on the image
  auto g = GradedMap::from_dense(V, V, 0, {{2, 4}, {1, 2}});
  for (auto& c : g.columns()) CHECK(g.apply(*solve(g, c)) == c);
}

TEST_CASE("space constructions") {
  auto one = space_of_dims({{0, 1}});
  CHECK(shift(one, 1)->dims() == std::map<int, int>{{-1, 1}});
  CHECK(tensor_space({space_of_dims({{0, 2}}), space_of_dims({{0, 3}})})->dims() == std::map<int, int>{{0, 6}});
  auto X = space_of_dims({{0, 1}, {1, 1}});
  CHECK(tensor_space({X, X})->dims() == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
  CHECK(dual(X)->dims() == std::map<int, int>{{-1, 1}, {0, 1}});
  CHECK(direct_sum({X, one}).space->dims() == std::map<int, int>{{0, 2}, {1, 1}});
  CHECK_THROWS_AS(check_window(*shift(one, 10), DegreeWindow{-2, 3}, "test"), TruncationExceeded);
}
