#include "opalg/curvature.hpp"

namespace opalg {

GradedMap hat_of(const FreeAlgebra& F, const GradedMap& phi) {
  return derivation_from_map(F, algebra_as_module(F.algebra), phi).map;
}

MCElement mc_element(const FreeAlgebra& F, const GradedMap& g) {
  if (g.degree() != 1) throw DimensionError("mc_element: g must have degree +1");
  return {F, g, hat_of(F, g)};
}

GradedMap mc_defect(const MCElement& g) {
  GradedMap D = g.F.algebra->carrier().d() + g.hat;
  return compose(D, D);
}

bool mc_check(const MCElement& g) { return mc_defect(g).is_zero(); }

AlgebraPtr deform(const MCElement& g) {
  if (!mc_check(g)) throw DimensionError("deform: g is not a Maurer–Cartan element");
  const OperadAlgebra& A = *g.F.algebra;
  return std::make_shared<OperadAlgebra>(A.with_differential(A.carrier().d() + g.hat));
}

TwistModule universal_module(const FreeAlgebra& F, int weight_cap) {
  WordModule M = free_module(F.algebra, F.generators, weight_cap);
  Derivation d = derivation_from_map(F, M.module, free_module_generators(M));
  return {F, M, d};
}

GradedMap twist_on_module(const TwistModule& T, const GradedMap& phi) {
  const WordSpace& W = *T.M.words;
  const AModule& M = *T.M.module;
  const OperadAlgebra& A = *T.F.algebra;
  const Operad& O = A.operad();
  int delta = phi.degree();
  GradedMap ph = hat_of(T.F, phi);
  GradedMap dphi = compose(T.d.map, phi);
  std::vector<SparseVec> cols;
  for (int b = 0; b < W.dim(); ++b) {
    const Word& w = W.representative(b);
    int N = static_cast<int>(w.inputs.size());
    int n = N - 1;
    std::vector<SparseVec> as;
    for (int q = 0; q < n; ++q) as.push_back(SparseVec::unit(w.inputs[q]));
    SparseVec th = SparseVec::unit(w.theta);
    int v = w.inputs[n];
    SparseVec gen = W.normal_form(O.unit(), {v});
    VecBuilder out;
    int pre = O.degree(N, w.theta);
    for (int p = 0; p < n; ++p) {
      SparseVec img = ph.column(w.inputs[p]);
      if (!img.empty()) {
        auto ys = as;
        ys[p] = img;
        out.add(M.nu(n, th, ys, gen), sign_of_parity(delta * pre));
      }
      pre += A.degree(w.inputs[p]);
    }
    out.add(M.nu(n, th, as, dphi.column(v)), sign_of_parity(delta * pre));
    cols.push_back(out.build());
  }
  return GradedMap(M.space(), M.space(), delta, std::move(cols));
}

TwistModule deform_module(const TwistModule& T, const MCElement& g, const AlgebraPtr& Ag) {
  ModulePtr M = T.M.module;
  Complex C(M->space(), M->carrier().d() + twist_on_module(T, g.g));
  auto Mg = std::make_shared<AModule>(
      Ag, C, [M](int k, int phi, const std::vector<int>& c, int m) { return M->nu(k, phi, c, m); }, M->action_cap(),
      M->name() + "(g)");
  Mg->truncation_limited = M->truncation_limited;
  return {T.F, WordModule{Mg, T.M.words}, Derivation{Ag, Mg, T.d.map}};
}

GradedMap induced_on_free_A_algebra(const FreeAAlgebra& S, const TwistModule& T, const GradedMap& phi) {
  GradedMap on_A = compose(S.unit_map, hat_of(T.F, phi));
  GradedMap on_M = compose(S.module_map, twist_on_module(T, phi));
  return extend_derivation(S, on_A, on_M);
}

CurvatureMC curvature_mc(const MCElement& g, int order, int weight_cap) {
  CurvatureMC c;
  c.Ag = deform(g);
  c.M0 = universal_module(g.F, weight_cap);
  c.Mg = deform_module(c.M0, g, c.Ag);
  c.nabla = canonical_connection(c.Mg.M, c.Mg.d, weight_cap);
  c.S0 = free_A_algebra(g.F.algebra, c.M0.M.module, order, weight_cap);
  c.Sg = free_A_algebra(c.Ag, c.Mg.M.module, order, weight_cap);
  if (!c.S0.algebra->space()->same_shape(*c.Sg.algebra->space()))
    throw DimensionError("curvature_mc: deformed S*_A(M) has another basis");
  c.Q = q_nabla(c.Sg, c.nabla);
  c.R = total_curvature(c.Sg, c.Q);
  c.Rhat = c.R.map - c.S0.algebra->carrier().d();
  c.restricted = compose(c.Rhat, c.S0.module_map);
  GradedMap D = c.S0.algebra->carrier().d() + c.Rhat;
  c.mc = compose(D, D).is_zero();
  return c;
}

int GaugeFlow::first_bad() const {
  for (int k = 0; k <= order && k < static_cast<int>(defect.size()); ++k)
    if (!defect[k].is_zero()) return k;
  return -1;
}

namespace {

GradedMap coefficient(const std::vector<GradedMap>& series, int k, const GradedMap& zero) {
  return k < static_cast<int>(series.size()) ? series[k] : zero;
}

}  // namespace

GaugeFlow gauge_flow(const MCElement& g0, const std::vector<GradedMap>& xi, int order) {
  const FreeAlgebra& F = g0.F;
  const GradedMap& del = F.algebra->carrier().d();
  GradedMap zero0(F.generators.space(), F.algebra->space(), 0);
  GaugeFlow fl{g0, xi, {g0.g}, {}, order};
  std::vector<GradedMap> xh, gh{g0.hat};
  for (int k = 0; k < order; ++k) xh.push_back(hat_of(F, coefficient(xi, k, zero0)));
  // (k+1) g_{k+1} = Σ_{i+j=k} [ξ̂_i, δ_{j0} ∂ + ĝ_j] on V
  for (int k = 0; k < order; ++k) {
    GradedMap acc(F.algebra->space(), F.algebra->space(), 1);
    for (int i = 0; i <= k; ++i) {
      GradedMap Dj = gh[k - i];
      if (k - i == 0) Dj += del;
      acc += graded_bracket(xh[i], Dj);
    }
    GradedMap next = Rational(1, k + 1) * compose(acc, F.inclusion);
    fl.g.push_back(next);
    gh.push_back(hat_of(F, next));
  }
  for (int k = 0; k <= 2 * order; ++k) {
    GradedMap acc(F.algebra->space(), F.algebra->space(), 2);
    for (int i = 0; i <= k; ++i) {
      int j = k - i;
      if (i > order || j > order) continue;
      GradedMap Di = gh[i], Dj = gh[j];
      if (i == 0) Di += del;
      if (j == 0) Dj += del;
      acc += compose(Di, Dj);
    }
    fl.defect.push_back(acc);
  }
  return fl;
}

bool gauge_transport_check(const GaugeFlow& flow, const CurvatureMC& base, bool drop_exp) {
  const FreeAAlgebra& S = base.S0;
  const GradedMap& d0 = S.algebra->carrier().d();
  const GradedMap& Q = base.Q;
  int T = flow.order;
  GradedMap zero0(flow.g0.F.generators.space(), flow.g0.F.algebra->space(), 0);
  GradedMap base_part = exp_ad(Q, d0) - d0;
  std::vector<GradedMap> Rh;
  for (int k = 0; k <= T; ++k) {
    GradedMap r = exp_ad(Q, induced_on_free_A_algebra(S, base.M0, flow.g[k]));
    if (k == 0) r += base_part;
    Rh.push_back(r);
  }
  if (!(Rh[0] == base.Rhat)) return false;
  std::vector<GradedMap> X;
  for (int i = 0; i < T; ++i) {
    GradedMap xi = induced_on_free_A_algebra(S, base.M0, coefficient(flow.xi, i, zero0));
    X.push_back(drop_exp ? xi : exp_ad(Q, xi));
  }
  for (int k = 0; k < T; ++k) {
    GradedMap lhs = Rational(k + 1) * Rh[k + 1];
    GradedMap rhs(S.algebra->space(), S.algebra->space(), 1);
    for (int i = 0; i <= k; ++i) {
      GradedMap Rj = Rh[k - i];
      if (k - i == 0) Rj += d0;
      rhs += graded_bracket(X[i], Rj);
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace opalg
