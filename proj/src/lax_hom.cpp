#include "opalg/errors.hpp"
#include "opalg/modules.hpp"

namespace opalg {

namespace {

Complex hole() { return Complex::with_zero_differential(make_space({BasisElement{0, 0, "h"}})); }

// Flattened map coordinates x * dim(target) + r.
SparseVec flatten(const GradedMap& f) {
  int t = f.target()->dim();
  std::vector<SparseVec::Entry> e;
  for (int x = 0; x < f.source()->dim(); ++x)
    for (auto& [r, c] : f.column(x)) e.emplace_back(x * t + r, c);
  return SparseVec::from_sorted(std::move(e));
}

}  // namespace

LaxHom lax_hom(const AlgebraPtr& A, const std::vector<ModulePtr>& others, const ModulePtr& N, int weight_cap) {
  std::vector<WordGroup> groups{{"hole", hole(), 1, false, nullptr}};
  int wcap = A->space()->max_weight();
  for (auto& M : others) {
    groups.push_back({M->name(), M->carrier(), 1, false, M});
    wcap += M->space()->max_weight();
  }
  WordOptions opt;
  opt.weight_cap = weight_cap >= 0 ? weight_cap : wcap;
  std::string pname;
  for (auto& M : others) pname += "," + M->name();
  auto ws = std::make_shared<WordSpace>(A, std::move(groups), opt, "P(-" + pname + ")");
  ws->finalize();
  WordSpacePtr P = ws;
  auto Pmod = word_module(P, P->name());

  const GradedSpace& SP = *P->complex().space();
  const GradedSpace& SN = *N->space();
  int lo = 0, hi = 0;
  if (SP.dim() && SN.dim()) {
    lo = 1 << 20, hi = -(1 << 20);
    for (int r = 0; r < SN.dim(); ++r)
      for (int x = 0; x < SP.dim(); ++x) {
        lo = std::min(lo, SN.degree(r) - SP.degree(x));
        hi = std::max(hi, SN.degree(r) - SP.degree(x));
      }
  }
  auto values = std::make_shared<std::vector<GradedMap>>();
  std::vector<BasisElement> basis;
  // per degree: echelon of flattened basis maps tagged by H index
  auto coords = std::make_shared<std::map<int, TrackedEchelon>>();
  int flat = SP.dim() * SN.dim();
  for (int d = lo; d <= hi; ++d) {
    auto maps = module_map_basis(*Pmod, *N, d, false);
    auto& te = coords->emplace(d, TrackedEchelon(flat)).first->second;
    for (auto& h : maps) {
      int i = static_cast<int>(values->size());
      te.insert(flatten(h), SparseVec::unit(i));
      basis.push_back({d, 0, "h" + std::to_string(i)});
      values->push_back(std::move(h));
    }
  }
  auto space = make_space(std::move(basis));
  auto coordinates = [coords, flat](const GradedMap& f) -> std::optional<SparseVec> {
    SparseVec v = flatten(f);
    if (v.empty()) return SparseVec();
    auto it = coords->find(f.degree());
    if (it == coords->end()) return std::nullopt;
    return it->second.express(v);
  };

  std::string name = "H(" + pname.substr(pname.empty() ? 0 : 1) + ";" + N->name() + ")";
  std::vector<SparseVec> dcols;
  for (auto& h : *values) {
    GradedMap dh = commutator(N->carrier(), h, P->complex());
    auto c = coordinates(dh);
    if (!c) throw IllDefinedQuotient(name + ": differential leaves the A-linear maps");
    dcols.push_back(*c);
  }
  Complex carrier(space, GradedMap(space, space, 1, std::move(dcols)));

  // (u·h)(x) = (−1)^{|u|(|h|+|x|)} h(x·u) with u = [φ; c; hole]
  const Operad& O = A->operad();
  OperadPtr Op = A->operad_ptr();
  auto act = [P, Op, A, values, coordinates, N, name](int k, int phi, const std::vector<int>& c, int hb) {
    const Operad& O = *Op;
    const GradedMap& h = (*values)[hb];
    int udeg = O.degree(k + 1, phi);
    for (int x : c) udeg += A->degree(x);
    int hdeg = h.degree();
    std::vector<SparseVec> cols;
    for (int b = 0; b < P->dim(); ++b) {
      const Word& w = P->representative(b);
      int Nw = static_cast<int>(w.inputs.size());
      int n = Nw - P->fixed_count();
      if (Nw + k > O.cap()) throw TruncationExceeded(name, "action on a word of arity " + std::to_string(Nw));
      int adeg = 0, mdeg = 0;
      for (int i = 0; i < n; ++i) adeg += A->degree(w.inputs[i]);
      for (int i = n; i < Nw; ++i) mdeg += P->input_degree(n, i, w.inputs[i]);
      int xdeg = O.degree(Nw, w.theta) + adeg + mdeg;
      int sign = sign_of_parity(udeg * mdeg + O.degree(k + 1, phi) * adeg + udeg * (hdeg + xdeg));
      std::vector<int> in(w.inputs.begin(), w.inputs.begin() + n);
      in.insert(in.end(), c.begin(), c.end());
      in.insert(in.end(), w.inputs.begin() + n, w.inputs.end());
      SparseVec xu = P->normal_form(O.partial(Nw, n, k + 1, w.theta, phi), in);
      cols.push_back(sign * h.apply(xu));
    }
    GradedMap uh(P->complex().space(), N->space(), hdeg + udeg, std::move(cols));
    auto co = coordinates(uh);
    if (!co) throw IllDefinedQuotient(name + ": action leaves the A-linear maps");
    return *co;
  };
  (void)O;
  auto H = std::make_shared<AModule>(A, carrier, act, O.cap() - P->max_rep_inputs(), name);
  H->truncation_limited = P->truncation_limited();
  return {H, P, N, *values, coordinates};
}

namespace {

void check_pairing(const LaxProduct& P, const LaxHom& H) {
  if (P.factors.empty() || P.factors.size() != H.pairing->groups().size())
    throw DimensionError("adjoint_transpose: factor count");
}

// Sign of moving m_1 past θ and the algebra inputs.
int transpose_sign(const WordSpace& W, const Word& w, int m1deg) {
  int n = static_cast<int>(w.inputs.size()) - W.fixed_count();
  int d = W.operad().degree(static_cast<int>(w.inputs.size()), w.theta);
  for (int i = 0; i < n; ++i) d += W.input_degree(n, i, w.inputs[i]);
  return sign_of_parity(m1deg * d);
}

}  // namespace

GradedMap adjoint_transpose(const LaxProduct& P, const LaxHom& H, const GradedMap& f) {
  check_pairing(P, H);
  const WordSpace& Pp = *H.pairing;
  const AModule& M1 = *P.factors[0];
  std::vector<SparseVec> cols;
  for (int m = 0; m < M1.dim(); ++m) {
    std::vector<SparseVec> vals;
    for (int b = 0; b < Pp.dim(); ++b) {
      const Word& w = Pp.representative(b);
      int n = static_cast<int>(w.inputs.size()) - Pp.fixed_count();
      auto in = w.inputs;
      in[n] = m;
      vals.push_back(transpose_sign(Pp, w, M1.degree(m)) * f.apply(P.words->normal_form(w.theta, in)));
    }
    GradedMap g(Pp.complex().space(), H.target->space(), M1.degree(m) + f.degree(), std::move(vals));
    auto c = H.coordinates(g);
    if (!c) throw NotAChainMap("adjoint_transpose: f is not A-linear");
    cols.push_back(*c);
  }
  return GradedMap(M1.space(), H.module->space(), f.degree(), std::move(cols));
}

GradedMap adjoint_untranspose(const LaxProduct& P, const LaxHom& H, const GradedMap& g) {
  check_pairing(P, H);
  const WordSpace& W = *P.words;
  const WordSpace& Pp = *H.pairing;
  std::vector<SparseVec> cols;
  for (int b = 0; b < W.dim(); ++b) {
    const Word& w = W.representative(b);
    int n = static_cast<int>(w.inputs.size()) - W.fixed_count();
    int m = w.inputs[n];
    auto in = w.inputs;
    in[n] = 0;
    SparseVec x = Pp.normal_form(w.theta, in);
    VecBuilder out;
    for (auto& [i, c] : g.column(m)) out.add(H.values[i].apply(x), c);
    cols.push_back(transpose_sign(W, w, P.factors[0]->degree(m)) * out.build());
  }
  return GradedMap(W.complex().space(), H.target->space(), g.degree(), std::move(cols));
}

}  // namespace opalg
