#include "commands.hpp"

#include <map>
#include <optional>

#include "opalg/errors.hpp"

namespace cli {

namespace {

std::string join(const std::vector<int>& v) { return join_ints(v, " "); }

// Dimensions by weight 0..W, counting only degrees inside the window.
std::vector<int> weight_dims(const GradedSpace& s, const RunConfig& cfg) {
  std::vector<int> out(std::max(cfg.weight_cap, s.max_weight()) + 1, 0);
  for (const auto& b : s.basis())
    if (b.degree >= cfg.deg_lo && b.degree <= cfg.deg_hi && b.weight >= 0) ++out[b.weight];
  return out;
}

std::string degree_dims(const GradedSpace& s, const RunConfig& cfg) {
  std::string out;
  for (int d = cfg.deg_lo; d <= cfg.deg_hi; ++d) {
    if (!out.empty()) out += " ";
    out += std::to_string(d) + "=" + std::to_string(s.dim_in_degree(d));
  }
  return out;
}

void dims(Report& rep, const std::string& name, const GradedSpace& s, const RunConfig& cfg) {
  rep.line("dims " + name + " by weight", join(weight_dims(s, cfg)));
  rep.line("dims " + name + " by degree", degree_dims(s, cfg));
}

AlgebraPtr base_algebra(Report& rep, const Instance& I) {
  if (!I.has_g) return I.F.algebra;
  bool ok = mc_check(I.g);
  rep.check("mc.equation", ok);
  if (!ok) return nullptr;
  return deform(I.g);
}

}  // namespace

void cmd_check(Report& rep, const std::vector<std::string>& paths, const RunConfig& cfg) {
  for (const auto& p : paths) {
    std::string text = read_file(p);
    if (schema_of(text) == "opalg.operad/1") {
      auto loaded = load_operad(text, false);
      rep.line("operad", loaded.operad->name() + " arity_cap=" + std::to_string(loaded.operad->cap()));
      rep.axioms("operad.axioms", loaded.report, cfg.strict);
      continue;
    }
    Instance I = read_instance(text, cfg);
    rep.line("instance", I.name);
    rep.axioms("operad.axioms", check_operad(*I.operad), cfg.strict);
    AlgebraPtr A = base_algebra(rep, I);
    if (!A) continue;
    rep.axioms("algebra.axioms", check_algebra(*A), cfg.strict);
    TwistModule T = universal_module(I.F);
    if (I.has_g) T = deform_module(T, I.g, A);
    rep.axioms("module.axioms", check_module(*T.M.module), cfg.strict);
    rep.axioms("derivation.axioms", check_derivation(T.d), cfg.strict);
  }
}

void cmd_free(Report& rep, const Instance& I, const RunConfig& cfg) {
  rep.line("operad", I.operad->name());
  dims(rep, "V", *I.F.generators.space(), cfg);
  dims(rep, "F(V)", *I.F.algebra->space(), cfg);
  WordModule W = free_module(I.F.algebra, I.module_generators, cfg.weight_cap);
  dims(rep, "F_A(W)", *W.module->space(), cfg);
  rep.axioms("algebra.axioms", check_algebra(*I.F.algebra), cfg.strict);
}

void cmd_atiyah(Report& rep, const Instance& I, const RunConfig& cfg) {
  AlgebraPtr A = base_algebra(rep, I);
  if (!A) return;
  ModulePtr E;
  std::optional<Connection> nabla;
  Derivation d;
  if (I.module == "universal") {
    TwistModule T = universal_module(I.F, cfg.weight_cap);
    if (I.has_g) T = deform_module(T, I.g, A);
    E = T.M.module;
    d = T.d;
    nabla = canonical_connection(T.M, d, cfg.weight_cap);
  } else {
    d = kahler(A, cfg.weight_cap).d;
    if (I.module == "free") {
      WordModule W = free_module(A, I.module_generators, cfg.weight_cap);
      E = W.module;
      nabla = canonical_connection(W, d, cfg.weight_cap);
    } else {
      E = kahler(A, cfg.weight_cap).omega;
      nabla = find_free_connection(E, d, cfg.weight_cap);
    }
  }
  rep.line("module", I.module);
  dims(rep, "E", *E->space(), cfg);
  JetModule J = jet_module(E, d, cfg.weight_cap);
  dims(rep, "P_A(M,E)", *J.product.module->space(), cfg);
  rep.axioms("module.axioms", check_module(*J.module), cfg.strict);
  rep.check("connection.exists", nabla.has_value());
  if (!nabla) return;
  rep.axioms("connection.free", check_free_connection(*nabla), cfg.strict);
  rep.check("connection.splitting", splits_jet(J, nabla->map, false));
  AtiyahClass a = atiyah_from_connection(*nabla);
  AtiyahClass b = atiyah_from_extension(J);
  rep.line("extension route", b.provenance);
  rep.matrix("atiyah", a.representative);
  const Complex& X = E->carrier();
  const Complex& Y = J.product.module->carrier();
  auto h = null_homotopy(a.representative - b.representative, X, Y);
  rep.check("atiyah.routes_agree", h.has_value());
  if (h) rep.matrix("routes homotopy", h->map);
  auto z = null_homotopy(a.representative, X, Y);
  rep.line("class", z ? "0" : "nonzero");
  if (z) rep.matrix("class homotopy", z->map);
}

void cmd_curvature(Report& rep, const Instance& I, const RunConfig& cfg) {
  if (I.has_g && !mc_check(I.g)) {
    rep.check("mc.equation", false);
    return;
  }
  CurvatureMC cm = curvature_mc(I.g, cfg.order, cfg.weight_cap);
  const FreeAAlgebra& S = cm.Sg;
  std::vector<int> layers;
  for (const auto& l : S.layers) layers.push_back(l->dim());
  rep.line("layers S^n", join(layers));
  rep.axioms("q_nabla.free_derivation", check_free_derivation(S, cm.Q, cm.nabla.d), cfg.strict);
  GradedMap at = atiyah_from_connection(cm.nabla).representative;
  const GradedMap& dM = cm.Mg.M.module->carrier().d();
  auto comp = [&](const CurvatureForm& R, size_t n) {
    return n < R.components.size() ? R.components[n] : GradedMap();
  };
  rep.check("curvature.R0", comp(cm.R, 0).is_zero());
  rep.check("curvature.R1", comp(cm.R, 1) == compose(S.module_map, dM));
  rep.check("curvature.R2", comp(cm.R, 2) == compose(symmetrise(cm.nabla.product, S), at));
  rep.check("curvature.flat", graded_bracket(cm.R.map, cm.R.map).is_zero());
  auto SE = free_SAM_module(S, cm.Mg.M.module, cfg.weight_cap);
  GradedMap D = d_nabla(S, SE, cm.Q, cm.nabla);
  rep.axioms("d_nabla.free_q_connection", check_free_q_connection(S, SE, cm.Q, D), cfg.strict);
  CurvatureForm T = total_curvature_module(SE, D);
  rep.check("curvature.T0", comp(T, 0) == compose(SE.inclusion, dM));
  rep.check("curvature.T1", comp(T, 1) == compose(symmetrise(cm.nabla.product, SE), at));
  rep.check("curvature.module_flat", graded_bracket(T.map, T.map).is_zero());
  rep.matrix("R^(2)", comp(cm.R, 2));
  for (int which = 0; which < 2; ++which) {
    std::string id = which == 0 ? "bianchi" : "bianchi_module";
    try {
      BianchiWitness w = which == 0 ? bianchi_witness(S, cm.R)
                                    : bianchi_witness_module(S, SE, *cm.Mg.M.module, cm.R, T);
      rep.check(id + ".homotopy", true);
      rep.line(id + " relation", std::to_string(w.relation));
      rep.check(id + ".identity", w.relation == 1, w.composite.is_zero() ? "both sides zero" : "");
      rep.matrix(id + " homotopy", w.homotopy);
    } catch (const NoWitness& e) {
      rep.check(id + ".homotopy", false, e.what());
    }
  }
}

void cmd_mc(Report& rep, const Instance& I, const RunConfig& cfg) {
  bool ok = mc_check(I.g);
  rep.check("mc.equation", ok);
  if (!ok) {
    rep.matrix("mc defect", mc_defect(I.g));
    return;
  }
  AlgebraPtr A = deform(I.g);
  dims(rep, "A(g)", *A->space(), cfg);
  CurvatureMC cm = curvature_mc(I.g, cfg.order, cfg.weight_cap);
  rep.check("mc.curvature", cm.mc);
  rep.matrix("R(g) on M", cm.restricted);
  if (I.xi.empty()) return;
  GaugeFlow fl = gauge_flow(I.g, I.xi, cfg.order);
  rep.check("gauge.flow", fl.first_bad() == -1,
            fl.first_bad() == -1 ? "" : "first nonzero defect at t^" + std::to_string(fl.first_bad()));
  for (int k = 1; k <= cfg.order; ++k) rep.matrix("g_" + std::to_string(k), fl.g[k]);
  rep.check("gauge.transport", gauge_transport_check(fl, cm));
  rep.line("transport without exp(ad Q)", gauge_transport_check(fl, cm, true) ? "holds" : "fails");
}

}  // namespace cli
