#include "opalg/modules.hpp"

#include "opalg/errors.hpp"

namespace opalg {

namespace {

int min_weight(const GradedSpace& s) {
  int w = s.dim() ? s.weight(0) : 0;
  for (int i = 0; i < s.dim(); ++i) w = std::min(w, s.weight(i));
  return w;
}

int default_cap(const AlgebraPtr& A, const std::vector<const GradedSpace*>& groups, int weight_cap) {
  if (weight_cap >= 0) return weight_cap;
  int w = A->space()->max_weight();
  for (auto* g : groups) w += min_weight(*g);
  return w;
}

std::string joined_names(const std::vector<ModulePtr>& ms) {
  std::string s;
  for (size_t i = 0; i < ms.size(); ++i) s += (i ? "," : "") + ms[i]->name();
  return s;
}

}  // namespace

WordModule free_module(const AlgebraPtr& A, const Complex& W, int weight_cap) {
  WordOptions opt;
  opt.weight_cap = default_cap(A, {W.space().get()}, weight_cap);
  std::string name = "F(" + A->name() + ")";
  auto ws = std::make_shared<WordSpace>(A, std::vector<WordGroup>{{"W", W, 1, false, nullptr}}, opt, name);
  ws->finalize();
  WordSpacePtr words = ws;
  return {word_module(words, name), words};
}

GradedMap free_module_generators(const WordModule& F) {
  const WordSpace& W = *F.words;
  const Complex& g = W.groups()[0].complex;
  std::vector<SparseVec> cols;
  for (int w = 0; w < g.dim(); ++w) cols.push_back(W.normal_form(W.operad().unit(), {w}));
  return GradedMap(g.space(), W.complex().space(), 0, std::move(cols));
}

LaxProduct lax_product(const AlgebraPtr& A, const std::vector<ModulePtr>& factors, int weight_cap) {
  std::vector<WordGroup> groups;
  std::vector<const GradedSpace*> spaces;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i]->algebra_ptr() != A) throw DimensionError("lax_product: factor over another algebra");
    groups.push_back({factors[i]->name(), factors[i]->carrier(), 1, false, factors[i]});
    spaces.push_back(factors[i]->space().get());
  }
  WordOptions opt;
  opt.weight_cap = default_cap(A, spaces, weight_cap);
  std::string name = "P(" + joined_names(factors) + ")";
  auto ws = std::make_shared<WordSpace>(A, std::move(groups), opt, name);
  ws->finalize();
  WordSpacePtr words = ws;
  return {factors, word_module(words, name), words};
}

LaxProduct symmetric_product(const AlgebraPtr& A, const ModulePtr& M, int n, const std::vector<ModulePtr>& extras,
                             int weight_cap) {
  std::vector<WordGroup> groups;
  std::vector<const GradedSpace*> spaces;
  std::vector<ModulePtr> factors;
  if (n > 0) groups.push_back({M->name(), M->carrier(), n, true, M});
  for (int i = 0; i < n; ++i) {
    spaces.push_back(M->space().get());
    factors.push_back(M);
  }
  for (auto& E : extras) {
    groups.push_back({E->name(), E->carrier(), 1, false, E});
    spaces.push_back(E->space().get());
    factors.push_back(E);
  }
  WordOptions opt;
  opt.weight_cap = default_cap(A, spaces, weight_cap);
  std::string name = "S" + std::to_string(n) + "(" + M->name() + (extras.empty() ? "" : ";" + joined_names(extras)) + ")";
  auto ws = std::make_shared<WordSpace>(A, std::move(groups), opt, name);
  ws->finalize();
  WordSpacePtr words = ws;
  return {factors, word_module(words, name), words};
}

GradedMap lax_symmetry(const LaxProduct& P, const LaxProduct& Q, const Permutation& sigma) {
  const WordSpace& W = *P.words;
  int m = static_cast<int>(P.factors.size());
  if (sigma.size() != m || Q.factors.size() != P.factors.size())
    throw DimensionError("lax_symmetry: permutation size");
  for (int i = 0; i < m; ++i)
    if (Q.factors[i] != P.factors[sigma(i)]) throw DimensionError("lax_symmetry: factors not permuted by sigma");
  std::vector<SparseVec> cols;
  for (int b = 0; b < W.dim(); ++b) {
    const Word& w = W.representative(b);
    int N = static_cast<int>(w.inputs.size()), n = N - m;
    std::vector<int> img(N), degs(N);
    for (int i = 0; i < N; ++i) {
      img[i] = i < n ? i : n + sigma(i - n);
      degs[i] = W.input_degree(n, i, w.inputs[i]);
    }
    Permutation rho(img);
    std::vector<int> in(N);
    for (int i = 0; i < N; ++i) in[i] = w.inputs[rho(i)];
    cols.push_back(koszul_sign(rho, degs) * Q.words->normal_form(W.operad().act(rho, w.theta), in));
  }
  return GradedMap(W.complex().space(), Q.words->complex().space(), 0, std::move(cols));
}

GradedMap unit_into_product(const LaxProduct& P) {
  const WordSpace& W = *P.words;
  if (P.factors.size() > 1) throw DimensionError("unit_into_product: at most one factor");
  const Complex& src = P.factors.empty() ? W.algebra().carrier() : P.factors[0]->carrier();
  std::vector<SparseVec> cols;
  // with no factors x is an algebra input, otherwise the single fixed one
  for (int x = 0; x < src.dim(); ++x) cols.push_back(W.normal_form(W.operad().unit(), {x}));
  return GradedMap(src.space(), W.complex().space(), 0, std::move(cols));
}

}  // namespace opalg
