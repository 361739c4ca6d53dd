#include "opalg/errors.hpp"
#include "opalg/modules.hpp"

namespace opalg {

namespace {

struct Layered {
  std::vector<WordSpacePtr> layers;
  std::vector<int> offsets;
  Complex carrier;
  std::pair<int, int> locate(int b) const {
    int n = static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), b) - offsets.begin()) - 1;
    return {n, b - offsets[n]};
  }
};

Layered stack(std::vector<WordSpacePtr> layers) {
  Layered L;
  std::vector<BasisElement> basis;
  std::vector<SparseVec> d;
  for (auto& w : layers) {
    int off = static_cast<int>(basis.size());
    L.offsets.push_back(off);
    const GradedSpace& s = *w->complex().space();
    basis.insert(basis.end(), s.basis().begin(), s.basis().end());
    for (auto& c : w->complex().d().columns()) {
      std::vector<SparseVec::Entry> e;
      for (auto& [i, v] : c) e.emplace_back(i + off, v);
      d.push_back(SparseVec::from_sorted(std::move(e)));
    }
  }
  auto space = make_space(std::move(basis));
  L.carrier = Complex(space, GradedMap(space, space, 1, std::move(d)));
  L.layers = std::move(layers);
  return L;
}

SparseVec shifted(const SparseVec& v, int off) {
  std::vector<SparseVec::Entry> e;
  for (auto& [i, c] : v) e.emplace_back(i + off, c);
  return SparseVec::from_sorted(std::move(e));
}

// γ(θ; θ_1..θ_k) applied to words w_i, rewritten with all algebra inputs
// first, then the M inputs, then the E inputs, in block order.
// has_e[i] says that the last input of w_i is the E input.
SparseVec compose_words(const Operad& O, int k, int theta, const std::vector<const WordSpace*>& spaces,
                        const std::vector<const Word*>& words, const std::vector<bool>& has_e,
                        const WordSpace& target) {
  std::vector<int> arities{k}, basis{theta};
  std::vector<int> gamma_in, gamma_deg;
  std::vector<int> cls;  // 0 algebra, 1 M, 2 E
  int parity = 0, before = 0;
  for (size_t i = 0; i < words.size(); ++i) {
    const WordSpace& S = *spaces[i];
    const Word& w = *words[i];
    int N = static_cast<int>(w.inputs.size());
    int n = N - S.fixed_count();
    arities.push_back(N);
    basis.push_back(w.theta);
    parity += O.degree(N, w.theta) * before;
    for (int j = 0; j < N; ++j) {
      int dg = S.input_degree(n, j, w.inputs[j]);
      gamma_in.push_back(w.inputs[j]);
      gamma_deg.push_back(dg);
      before += dg;
      cls.push_back(j < n ? 0 : (has_e[i] && j == N - 1 ? 2 : 1));
    }
  }
  int total = static_cast<int>(gamma_in.size());
  if (total > O.cap())
    throw TruncationExceeded(target.name(), "composite of arity " + std::to_string(total));
  std::vector<int> img;
  for (int c = 0; c < 3; ++c)
    for (int j = 0; j < total; ++j)
      if (cls[j] == c) img.push_back(j);
  Permutation rho(img);
  std::vector<int> in(total);
  for (int j = 0; j < total; ++j) in[j] = gamma_in[rho(j)];
  SparseVec psi = O.gamma(arities, basis);
  return sign_of_parity(parity) * koszul_sign(rho, gamma_deg) * target.normal_form(O.act(rho, psi), in);
}

int word_weight(const WordSpace& S, int b) { return S.complex().space()->weight(b); }

}  // namespace

FreeAAlgebra free_A_algebra(const AlgebraPtr& A, const ModulePtr& M, int order, int weight_cap) {
  std::vector<WordSpacePtr> layers;
  for (int n = 0; n <= order; ++n) layers.push_back(symmetric_product(A, M, n, {}, weight_cap).words);
  auto L = std::make_shared<Layered>(stack(layers));
  OperadPtr Op = A->operad_ptr();
  auto mul = [L, Op, order](int k, int theta, const std::vector<int>& in) -> SparseVec {
    std::vector<const WordSpace*> spaces;
    std::vector<const Word*> words;
    int m = 0, weight = 0;
    for (int b : in) {
      auto [n, i] = L->locate(b);
      spaces.push_back(L->layers[n].get());
      words.push_back(&L->layers[n]->representative(i));
      m += n;
      weight += word_weight(*L->layers[n], i);
    }
    if (m > order) return {};
    const WordSpace& T = *L->layers[m];
    if (T.weight_cap() >= 0 && weight > T.weight_cap()) return {};
    return shifted(compose_words(*Op, k, theta, spaces, words, std::vector<bool>(in.size(), false), T),
                   L->offsets[m]);
  };
  std::string name = "S*(" + M->name() + ")";
  auto S = std::make_shared<OperadAlgebra>(Op, L->carrier, mul, Op->cap(), name);

  std::vector<SparseVec> ucols, mcols;
  for (int a = 0; a < A->dim(); ++a) ucols.push_back(layers[0]->normal_form(Op->unit(), {a}));
  if (order >= 1)
    for (int x = 0; x < M->dim(); ++x) mcols.push_back(shifted(layers[1]->normal_form(Op->unit(), {x}), L->offsets[1]));
  else
    mcols.assign(M->dim(), SparseVec());
  return {S, M, layers, L->offsets, GradedMap(A->space(), S->space(), 0, std::move(ucols)),
          GradedMap(M->space(), S->space(), 0, std::move(mcols))};
}

FreeSAMModule free_SAM_module(const FreeAAlgebra& S, const ModulePtr& E, int weight_cap) {
  const AlgebraPtr& A = E->algebra_ptr();
  const ModulePtr& M = S.generators;
  int order = static_cast<int>(S.layers.size()) - 1;
  std::vector<WordSpacePtr> layers;
  for (int n = 0; n <= order; ++n) layers.push_back(symmetric_product(A, M, n, {E}, weight_cap).words);
  auto L = std::make_shared<Layered>(stack(layers));
  auto SL = std::make_shared<Layered>();
  SL->layers = S.layers;
  SL->offsets = S.offsets;
  OperadPtr Op = A->operad_ptr();
  auto act = [L, SL, Op, order](int k, int phi, const std::vector<int>& c, int x) -> SparseVec {
    std::vector<const WordSpace*> spaces;
    std::vector<const Word*> words;
    int m = 0, weight = 0;
    for (int b : c) {
      auto [n, i] = SL->locate(b);
      spaces.push_back(SL->layers[n].get());
      words.push_back(&SL->layers[n]->representative(i));
      m += n;
      weight += word_weight(*SL->layers[n], i);
    }
    auto [n, i] = L->locate(x);
    spaces.push_back(L->layers[n].get());
    words.push_back(&L->layers[n]->representative(i));
    m += n;
    weight += word_weight(*L->layers[n], i);
    if (m > order) return {};
    const WordSpace& T = *L->layers[m];
    if (T.weight_cap() >= 0 && weight > T.weight_cap()) return {};
    std::vector<bool> has_e(c.size(), false);
    has_e.push_back(true);
    return shifted(compose_words(*Op, k + 1, phi, spaces, words, has_e, T), L->offsets[m]);
  };
  std::string name = "S*(" + M->name() + ";" + E->name() + ")";
  auto mod = std::make_shared<AModule>(S.algebra, L->carrier, act, Op->cap() - 1, name);
  std::vector<SparseVec> inc;
  for (int e = 0; e < E->dim(); ++e) inc.push_back(layers[0]->normal_form(Op->unit(), {e}));
  return {mod, layers, L->offsets, GradedMap(E->space(), mod->space(), 0, std::move(inc))};
}

}  // namespace opalg
