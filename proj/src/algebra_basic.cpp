#include "opalg/algebra.hpp"
#include "opalg/errors.hpp"

namespace opalg {

namespace {

// Product of monoid elements y_1 ⋯ y_n in the given order.
SparseVec ordered_product(const Monoid& M, const std::vector<int>& y) {
  SparseVec acc = M.unit;
  for (int b : y) acc = M.product(acc, SparseVec::unit(b));
  return acc;
}

// Arguments of e_τ in evaluation order: e_τ(y) = ±y_{τ⁻¹(1)} ⋯ y_{τ⁻¹(n)}.
std::pair<std::vector<int>, int> ass_order(int n, int theta, const std::vector<int>& y, const GradedSpace& S) {
  Permutation inv = Permutation::from_lex_rank(n, theta).inverse();
  std::vector<int> degs, out;
  for (int i = 0; i < n; ++i) {
    degs.push_back(S.degree(y[i]));
    out.push_back(y[inv(i)]);
  }
  return {out, koszul_sign(inv, degs)};
}

}  // namespace

AlgebraPtr algebra_from_monoid(OperadPtr ass, const Monoid& M, std::string name) {
  auto S = M.carrier.space();
  Monoid copy = M;
  int cap = ass->cap();
  return std::make_shared<OperadAlgebra>(
      ass, M.carrier,
      [copy, S](int n, int theta, const std::vector<int>& y) {
        auto [order, sign] = ass_order(n, theta, y, *S);
        SparseVec v = ordered_product(copy, order);
        v *= sign;
        return v;
      },
      cap, std::move(name));
}

AlgebraPtr commutative_algebra(OperadPtr com, const Monoid& M, std::string name) {
  Monoid copy = M;
  int cap = com->cap();
  return std::make_shared<OperadAlgebra>(
      com, M.carrier, [copy](int, int, const std::vector<int>& y) { return ordered_product(copy, y); }, cap,
      std::move(name));
}

ModulePtr algebra_as_module(const AlgebraPtr& A) {
  AlgebraPtr a = A;
  return std::make_shared<AModule>(
      A, A->carrier(),
      [a](int k, int phi, const std::vector<int>& c, int m) {
        std::vector<int> in = c;
        in.push_back(m);
        return a->mu(k + 1, phi, in);
      },
      A->mult_cap() - 1, A->name());
}

ModulePtr module_from_action(const AlgebraPtr& C, const Monoid& M, Complex carrier,
                             std::function<SparseVec(int, int)> act, std::string name) {
  Monoid copy = M;
  return std::make_shared<AModule>(
      C, std::move(carrier),
      [copy, act](int, int, const std::vector<int>& c, int m) {
        SparseVec a = ordered_product(copy, c);
        VecBuilder out;
        for (auto& [i, ci] : a) out.add(act(i, m), ci);
        return out.build();
      },
      C->operad().cap() - 1, std::move(name));
}

ModulePtr module_from_bimodule(const AlgebraPtr& A, const Monoid& M, Complex carrier,
                               std::function<SparseVec(int, int)> left, std::function<SparseVec(int, int)> right,
                               std::string name) {
  Monoid copy = M;
  auto SA = A->space();
  auto SE = carrier.space();
  return std::make_shared<AModule>(
      A, carrier,
      [copy, left, right, SA, SE](int k, int phi, const std::vector<int>& c, int m) {
        // e_τ applied to (c_1..c_k, m); the module input splits the word
        int n = k + 1;
        Permutation inv = Permutation::from_lex_rank(n, phi).inverse();
        std::vector<int> degs;
        for (int x : c) degs.push_back(SA->degree(x));
        degs.push_back(SE->degree(m));
        int sign = koszul_sign(inv, degs);
        std::vector<int> before, after;
        bool seen = false;
        for (int i = 0; i < n; ++i) {
          int src = inv(i);
          if (src == k) {
            seen = true;
            continue;
          }
          (seen ? after : before).push_back(c[src]);
        }
        SparseVec lp = ordered_product(copy, before), rp = ordered_product(copy, after);
        VecBuilder mid;
        for (auto& [i, ci] : lp) mid.add(left(i, m), ci);
        SparseVec lm = mid.build();
        VecBuilder out;
        for (auto& [e, ce] : lm)
          for (auto& [j, cj] : rp) out.add(right(e, j), ce * cj);
        SparseVec v = out.build();
        v *= sign;
        return v;
      },
      A->operad().cap() - 1, std::move(name));
}

}  // namespace opalg
