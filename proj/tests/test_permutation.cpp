#include "doctest.h"
#include "opalg/permutation.hpp"

using namespace opalg;

namespace {

Permutation P(std::vector<int> one_based) { return Permutation::from_one_based(one_based); }

Complex mixed(int d0, int d1) {
  return Complex::with_zero_differential(make_space({{d0, 0, "u"}, {d1, 0, "v"}}));
}

// all tuples of block sizes in [0, cap]^n
std::vector<std::vector<int>> block_tuples(int n, int cap) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (auto& t : out)
      for (int m = 0; m <= cap; ++m) {
        auto u = t;
        u.push_back(m);
        next.push_back(u);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("sum of permutations") {
  CHECK(sum({Permutation::identity(2), Permutation::identity(3)}) == Permutation::identity(5));
  CHECK(sum({P({2, 1})}) == P({2, 1}));
  // τ(Σm_j + k) = τ_j(k) + Σm_j with (12) then (123)
  CHECK(sum({P({2, 1}), P({2, 3, 1})}) == P({2, 1, 4, 5, 3}));
}

TEST_CASE("block permutations") {
  CHECK(block_permutation(Permutation::identity(3), {2, 0, 1}) == Permutation::identity(3));
  CHECK(block_permutation(P({2, 1}), {1, 1}) == P({2, 1}));
  // blocks (2,1): σ(1)=2 so block 1 starts after m_2 = 1 element
  Permutation b = block_permutation(P({2, 1}), {2, 1});
  CHECK(b == P({2, 3, 1}));
  // applied to positions, (1,2,3) is rearranged into (3,1,2)
  std::vector<int> seq{1, 2, 3}, out(3);
  for (int i = 0; i < 3; ++i) out[b(i)] = seq[i];
  CHECK(out == std::vector<int>{3, 1, 2});
}

TEST_CASE("lexicographic rank round trip") {
  auto all = Permutation::all(4);
  CHECK(all.size() == 24);
  for (size_t r = 0; r < all.size(); ++r) {
    CHECK(all[r].lex_rank() == static_cast<int>(r));
    CHECK(Permutation::from_lex_rank(4, static_cast<int>(r)) == all[r]);
  }
}

TEST_CASE("adjacent words reproduce the permutation") {
  for (auto& s : Permutation::all(4)) {
    Permutation acc = Permutation::identity(4);
    for (int i : s.adjacent_word()) acc = acc * Permutation::transposition(4, i);
    CHECK(acc == s);
  }
}

TEST_CASE("action on tensor powers") {
  std::vector<Complex> f{mixed(0, 1), mixed(1, 2), mixed(0, 3)};
  auto id = act_on_tensor_power(Permutation::identity(3), f);
  CHECK(id.map == GradedMap::identity(id.source.space()));

  Complex odd = Complex::with_zero_differential(space_of_dims({{1, 1}}));
  auto sw = act_on_tensor_power(P({2, 1}), {odd, odd});
  CHECK(sw.map.column(0) == SparseVec::unit(0, -1));

  // right action
  for (auto& s : Permutation::all(3))
    for (auto& t : Permutation::all(3)) {
      auto as = act_on_tensor_power(s, f);
      std::vector<Complex> fs{f[s(0)], f[s(1)], f[s(2)]};
      auto at = act_on_tensor_power(t, fs);
      CHECK(act_on_tensor_power(s * t, f).map == compose(at.map, as.map));
    }

  // 3-cycle via both sides of the braid relation
  Permutation s0 = Permutation::transposition(3, 0), s1 = Permutation::transposition(3, 1);
  auto via = [&](std::vector<Permutation> word) {
    std::vector<Complex> cur = f;
    GradedMap m = GradedMap::identity(tensor(f).space());
    for (auto& s : word) {
      auto a = act_on_tensor_power(s, cur);
      m = compose(a.map, m);
      std::vector<Complex> nxt;
      for (int p = 0; p < 3; ++p) nxt.push_back(cur[s(p)]);
      cur = nxt;
    }
    return m;
  };
  CHECK(via({s0, s1, s0}) == via({s1, s0, s1}));
  CHECK(via({s0, s1}) == act_on_tensor_power(s0 * s1, f).map);
}

TEST_CASE("block and sum interchange") {
  for (int n = 1; n <= 3; ++n)
    for (auto& sigma : Permutation::all(n))
      for (auto& m : block_tuples(n, 2)) {
        std::vector<int> msig(n);
        for (int j = 0; j < n; ++j) msig[j] = m[sigma(j)];
        // every choice of τ_i ∈ S_{m_i}
        std::vector<std::vector<Permutation>> choices{{}};
        for (int i = 0; i < n; ++i) {
          std::vector<std::vector<Permutation>> next;
          for (auto& c : choices)
            for (auto& t : Permutation::all(m[i])) {
              auto u = c;
              u.push_back(t);
              next.push_back(u);
            }
          choices = next;
        }
        Permutation b = block_permutation(sigma, msig);
        for (auto& tau : choices) {
          std::vector<Permutation> tsig(n);
          for (int j = 0; j < n; ++j) tsig[j] = tau[sigma(j)];
          CHECK(b * sum(tsig) == sum(tau) * b);
        }
      }
}
