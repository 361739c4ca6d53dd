#include "opalg/curvature.hpp"

#include <algorithm>

#include "detail.hpp"

namespace opalg {

namespace {

std::pair<int, int> locate(const std::vector<int>& offsets, int b) {
  int n = static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), b) - offsets.begin()) - 1;
  return {n, b - offsets[n]};
}

SparseVec shifted(const SparseVec& v, int off) {
  std::vector<SparseVec::Entry> e;
  for (auto& [i, c] : v) e.emplace_back(i + off, c);
  return SparseVec::from_sorted(std::move(e));
}

// Letters of a word of S^n_A(M) (or S^n_A(M, E) without the last input) as
// elements of S*_A(M), with their degrees.
void letters(const FreeAAlgebra& S, const WordSpace& W, const Word& w, int n, int count, std::vector<SparseVec>& xs,
             std::vector<int>& degs) {
  int k = count - n;
  for (int q = 0; q < count; ++q) {
    int b = w.inputs[q];
    if (q < k) {
      xs.push_back(S.unit_map.column(b));
      degs.push_back(S.unit_map.source()->degree(b));
    } else {
      xs.push_back(S.module_map.column(b));
      degs.push_back(S.generators->degree(b));
    }
  }
  (void)W;
}

}  // namespace

GradedMap extend_derivation(const FreeAAlgebra& S, const GradedMap& on_A, const GradedMap& on_M) {
  if (on_A.degree() != on_M.degree()) throw DimensionError("extend_derivation: degrees differ");
  int delta = on_A.degree();
  const OperadAlgebra& SA = *S.algebra;
  const Operad& O = SA.operad();
  std::vector<SparseVec> cols;
  for (int b = 0; b < SA.dim(); ++b) {
    auto [n, i] = locate(S.offsets, b);
    const WordSpace& W = *S.layers[n];
    const Word& w = W.representative(i);
    int N = static_cast<int>(w.inputs.size());
    int k = N - n;
    std::vector<SparseVec> xs;
    std::vector<int> degs;
    letters(S, W, w, n, N, xs, degs);
    VecBuilder out;
    int pre = O.degree(N, w.theta);
    for (int p = 0; p < N; ++p) {
      SparseVec img = (p < k ? on_A : on_M).column(w.inputs[p]);
      if (!img.empty()) {
        auto ys = xs;
        ys[p] = img;
        out.add(SA.mu(N, SparseVec::unit(w.theta), ys), sign_of_parity(delta * pre));
      }
      pre += degs[p];
    }
    cols.push_back(out.build());
  }
  return GradedMap(SA.space(), SA.space(), delta, std::move(cols));
}

GradedMap extend_module_derivation(const FreeAAlgebra& S, const FreeSAMModule& SE, const GradedMap& over,
                                   const GradedMap& on_E) {
  if (over.degree() != on_E.degree()) throw DimensionError("extend_module_derivation: degrees differ");
  int delta = over.degree();
  const AModule& X = *SE.module;
  const Operad& O = X.operad();
  std::vector<SparseVec> cols;
  for (int b = 0; b < X.dim(); ++b) {
    auto [n, i] = locate(SE.offsets, b);
    const WordSpace& W = *SE.layers[n];
    const Word& w = W.representative(i);
    int N = static_cast<int>(w.inputs.size());
    std::vector<SparseVec> xs;
    std::vector<int> degs;
    letters(S, W, w, n, N - 1, xs, degs);
    int e = w.inputs[N - 1];
    SparseVec xe = SE.inclusion.column(e);
    SparseVec th = SparseVec::unit(w.theta);
    VecBuilder out;
    int pre = O.degree(N, w.theta);
    for (int p = 0; p + 1 < N; ++p) {
      SparseVec img = over.apply(xs[p]);
      if (!img.empty()) {
        auto ys = xs;
        ys[p] = img;
        out.add(X.nu(N - 1, th, ys, xe), sign_of_parity(delta * pre));
      }
      pre += degs[p];
    }
    SparseVec ie = on_E.column(e);
    if (!ie.empty()) out.add(X.nu(N - 1, th, xs, ie), sign_of_parity(delta * pre));
    cols.push_back(out.build());
  }
  return GradedMap(X.space(), X.space(), delta, std::move(cols));
}

namespace {

GradedMap symmetrise_into(const LaxProduct& P, const WordSpace& layer, int offset, const SpacePtr& target) {
  const WordSpace& W = *P.words;
  std::vector<SparseVec> cols;
  for (int b = 0; b < W.dim(); ++b) {
    const Word& w = W.representative(b);
    cols.push_back(shifted(layer.normal_form(w.theta, w.inputs), offset));
  }
  return GradedMap(P.module->space(), target, 0, std::move(cols));
}

}  // namespace

GradedMap symmetrise(const LaxProduct& P, const FreeAAlgebra& S) {
  if (S.layers.size() < 3) return GradedMap(P.module->space(), S.algebra->space(), 0);
  return symmetrise_into(P, *S.layers[2], S.offsets[2], S.algebra->space());
}

GradedMap symmetrise(const LaxProduct& P, const FreeSAMModule& SE) {
  if (SE.layers.size() < 2) return GradedMap(P.module->space(), SE.module->space(), 0);
  return symmetrise_into(P, *SE.layers[1], SE.offsets[1], SE.module->space());
}

GradedMap q_nabla(const FreeAAlgebra& S, const Connection& nabla) {
  if (nabla.module != S.generators || nabla.d.target != S.generators)
    throw DimensionError("q_nabla: connection on another module");
  GradedMap on_A = compose(S.module_map, nabla.d.map);
  GradedMap on_M = compose(symmetrise(nabla.product, S), nabla.map);
  return extend_derivation(S, on_A, on_M);
}

GradedMap d_nabla(const FreeAAlgebra& S, const FreeSAMModule& SE, const GradedMap& Q, const Connection& nabla_E) {
  GradedMap on_E = compose(symmetrise(nabla_E.product, SE), nabla_E.map);
  return extend_module_derivation(S, SE, Q, on_E);
}

AxiomReport check_free_derivation(const FreeAAlgebra& S, const GradedMap& Q, const Derivation& d, int max_arity) {
  AxiomReport r;
  ++r.checked;
  if (!(compose(Q, S.unit_map) == compose(S.module_map, d.map))) r.fail("free_derivation.over_d", "");
  const OperadAlgebra& SA = *S.algebra;
  const Operad& O = SA.operad();
  int delta = Q.degree();
  int W = SA.space()->max_weight();
  for (int k = 0; k <= std::min(max_arity, SA.mult_cap()); ++k)
    for (int th = 0; th < O.dim(k); ++th)
      detail::for_each_input(*SA.space(), k, W, [&](const std::vector<int>& x) {
        try {
          SparseVec lhs = Q.apply(SA.mu(k, th, x));
          VecBuilder rhs;
          int pre = O.degree(k, th);
          std::vector<SparseVec> xs;
          for (int b : x) xs.push_back(SparseVec::unit(b));
          for (int p = 0; p < k; ++p) {
            auto ys = xs;
            ys[p] = Q.column(x[p]);
            rhs.add(SA.mu(k, SparseVec::unit(th), ys), sign_of_parity(delta * pre));
            pre += SA.degree(x[p]);
          }
          ++r.checked;
          if (!(lhs == rhs.build()))
            r.fail("free_derivation.leibniz", "n=" + std::to_string(k) + " theta=" + std::to_string(th) +
                                                  " inputs=(" + join_ints(x) + ")");
        } catch (const TruncationExceeded&) {
          ++r.skipped;
        }
      });
  return r;
}

AxiomReport check_free_q_connection(const FreeAAlgebra& S, const FreeSAMModule& SE, const GradedMap& Q,
                                    const GradedMap& D, int max_arity) {
  AxiomReport r;
  const OperadAlgebra& SA = *S.algebra;
  const AModule& X = *SE.module;
  const Operad& O = SA.operad();
  int delta = D.degree();
  int W = std::max(SA.space()->max_weight(), X.space()->max_weight());
  for (int k = 0; k + 1 <= max_arity && k <= X.action_cap(); ++k)
    for (int phi = 0; phi < O.dim(k + 1); ++phi)
      detail::for_each_input(*SA.space(), k, W, [&](const std::vector<int>& c) {
        for (int m = 0; m < X.dim(); ++m) {
          try {
            SparseVec lhs = D.apply(X.nu(k, phi, c, m));
            VecBuilder rhs;
            std::vector<SparseVec> cs;
            for (int b : c) cs.push_back(SparseVec::unit(b));
            SparseVec th = SparseVec::unit(phi);
            int pre = O.degree(k + 1, phi);
            for (int p = 0; p < k; ++p) {
              auto ys = cs;
              ys[p] = Q.column(c[p]);
              rhs.add(X.nu(k, th, ys, SparseVec::unit(m)), sign_of_parity(delta * pre));
              pre += SA.degree(c[p]);
            }
            rhs.add(X.nu(k, th, cs, D.column(m)), sign_of_parity(delta * pre));
            ++r.checked;
            if (!(lhs == rhs.build()))
              r.fail("q_connection.leibniz", "n=" + std::to_string(k) + " theta=" + std::to_string(phi) +
                                                 " inputs=(" + join_ints(c) + ") x=" + std::to_string(m));
          } catch (const TruncationExceeded&) {
            ++r.skipped;
          }
        }
      });
  return r;
}

GradedMap graded_bracket(const GradedMap& f, const GradedMap& g) {
  return compose(f, g) - Rational(sign_of_parity(f.degree() * g.degree())) * compose(g, f);
}

GradedMap exp_ad(const GradedMap& X, const GradedMap& Y) {
  GradedMap sum = Y, term = Y;
  for (int n = 1;; ++n) {
    term = Rational(1, n) * graded_bracket(X, term);
    if (term.is_zero()) return sum;
    if (n > 64) throw Error("exp_ad: ad X is not nilpotent within 64 steps");
    sum += term;
  }
}

GradedMap layer_part(const GradedMap& f, const std::vector<int>& offsets, int dim, int n) {
  if (n >= static_cast<int>(offsets.size())) return GradedMap(f.source(), f.target(), f.degree());
  int lo = offsets[n], hi = n + 1 < static_cast<int>(offsets.size()) ? offsets[n + 1] : dim;
  std::vector<SparseVec> cols;
  for (auto& c : f.columns()) {
    std::vector<SparseVec::Entry> e;
    for (auto& [i, v] : c)
      if (lo <= i && i < hi) e.emplace_back(i, v);
    cols.push_back(SparseVec::from_sorted(std::move(e)));
  }
  return GradedMap(f.source(), f.target(), f.degree(), std::move(cols));
}

CurvatureForm total_curvature(const FreeAAlgebra& S, const GradedMap& Q) {
  CurvatureForm R{exp_ad(Q, S.algebra->carrier().d()), {}};
  GradedMap onM = compose(R.map, S.module_map);
  for (size_t n = 0; n < S.layers.size(); ++n)
    R.components.push_back(layer_part(onM, S.offsets, S.algebra->dim(), static_cast<int>(n)));
  return R;
}

CurvatureForm total_curvature_module(const FreeSAMModule& SE, const GradedMap& D) {
  CurvatureForm T{exp_ad(D, SE.module->carrier().d()), {}};
  GradedMap onE = compose(T.map, SE.inclusion);
  for (size_t n = 0; n < SE.layers.size(); ++n)
    T.components.push_back(layer_part(onE, SE.offsets, SE.module->dim(), static_cast<int>(n)));
  return T;
}

namespace {

int relation_of(const GradedMap& a, const GradedMap& b) {
  if (a == b) return 1;
  if (a == Rational(-1) * b) return -1;
  return 0;
}

GradedMap component_or_zero(const CurvatureForm& R, size_t n, const GradedMap& like) {
  return n < R.components.size() ? R.components[n] : GradedMap(like.source(), like.target(), 1);
}

}  // namespace

BianchiWitness bianchi_witness(const FreeAAlgebra& S, const CurvatureForm& R) {
  const Complex& X = S.algebra->carrier();
  const Complex& M = S.generators->carrier();
  GradedMap alpha = component_or_zero(R, 2, R.components.at(0));
  GradedMap alpha_hat = extend_derivation(S, GradedMap(S.unit_map.source(), X.space(), 1), alpha);
  GradedMap comp = compose(alpha_hat, alpha);
  auto h = null_homotopy(comp, M, X);
  if (!h) throw NoWitness("bianchi_witness: α̂∘α is not null-homotopic within the caps");
  GradedMap br = commutator(X, component_or_zero(R, 3, alpha), M);
  int rel = relation_of(comp, br);
  return {alpha_hat, comp, h->map, br, rel};
}

BianchiWitness bianchi_witness_module(const FreeAAlgebra& S, const FreeSAMModule& SE, const AModule& E,
                                      const CurvatureForm& R, const CurvatureForm& T) {
  const Complex& X = SE.module->carrier();
  GradedMap alpha = component_or_zero(R, 2, R.components.at(0));
  GradedMap over = extend_derivation(S, GradedMap(S.unit_map.source(), S.algebra->space(), 1), alpha);
  GradedMap alpha_E = component_or_zero(T, 1, T.components.at(0));
  GradedMap alpha_hat = extend_module_derivation(S, SE, over, alpha_E);
  GradedMap comp = compose(alpha_hat, alpha_E);
  auto h = null_homotopy(comp, E.carrier(), X);
  if (!h) throw NoWitness("bianchi_witness_module: α̂_E∘α_E is not null-homotopic within the caps");
  GradedMap br = commutator(X, component_or_zero(T, 2, alpha_E), E.carrier());
  return {alpha_hat, comp, h->map, br, relation_of(comp, br)};
}

}  // namespace opalg
