#include "substitute.hpp"

#include <algorithm>

namespace opalg::detail {

Slot plain_slot(const Operad& O, const GradedSpace& S, const SparseVec& x, int cls) {
  Slot out;
  for (auto& [u, cu] : O.unit())
    for (auto& [i, c] : x) out.push_back({Piece{1, u, {i}, {S.degree(i)}, {cls}}, c * cu});
  return out;
}

Slot plain_slot(const Operad& O, const GradedSpace& S, int x, int cls) {
  return plain_slot(O, S, SparseVec::unit(x), cls);
}

Slot word_slot(const WordSpace& S, const SparseVec& v, const std::vector<int>& fixed_cls) {
  Slot out;
  for (auto& [b, c] : v) {
    const Word& w = S.representative(b);
    int N = static_cast<int>(w.inputs.size());
    int n = N - S.fixed_count();
    Piece p{N, w.theta, w.inputs, {}, {}};
    for (int j = 0; j < N; ++j) {
      p.degs.push_back(S.input_degree(n, j, w.inputs[j]));
      p.cls.push_back(j < n ? 0 : fixed_cls[j - n]);
    }
    out.push_back({std::move(p), c});
  }
  return out;
}

namespace {

SparseVec substitute_one(const Operad& O, int N, int theta, const std::vector<const Piece*>& ps,
                         const WordSpace& target) {
  std::vector<int> arities{N}, basis{theta};
  std::vector<int> in, degs, cls;
  int parity = 0, before = 0;
  for (const Piece* p : ps) {
    arities.push_back(p->arity);
    basis.push_back(p->theta);
    parity += O.degree(p->arity, p->theta) * before;
    for (size_t j = 0; j < p->inputs.size(); ++j) {
      in.push_back(p->inputs[j]);
      degs.push_back(p->degs[j]);
      cls.push_back(p->cls[j]);
      before += p->degs[j];
    }
  }
  int total = static_cast<int>(in.size());
  if (total > O.cap()) throw TruncationExceeded(target.name(), "composite of arity " + std::to_string(total));
  std::vector<int> img(total);
  for (int j = 0; j < total; ++j) img[j] = j;
  std::stable_sort(img.begin(), img.end(), [&](int a, int b) { return cls[a] < cls[b]; });
  Permutation rho(img);
  std::vector<int> sorted(total);
  for (int j = 0; j < total; ++j) sorted[j] = in[rho(j)];
  SparseVec psi = O.gamma(arities, basis);
  if (psi.empty()) return {};
  return sign_of_parity(parity) * koszul_sign(rho, degs) * target.normal_form(O.act(rho, psi), sorted);
}

}  // namespace

SparseVec substitute(const Operad& O, int N, int theta, const std::vector<Slot>& slots, const WordSpace& target) {
  VecBuilder out;
  std::vector<const Piece*> ps(slots.size());
  std::function<void(size_t, Rational)> rec = [&](size_t i, Rational c) {
    if (i == slots.size()) {
      out.add(substitute_one(O, N, theta, ps, target), c);
      return;
    }
    for (auto& [p, pc] : slots[i]) {
      ps[i] = &p;
      rec(i + 1, c * pc);
    }
  };
  rec(0, Rational(1));
  return out.build();
}

}  // namespace opalg::detail
