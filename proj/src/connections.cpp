#include "opalg/connections.hpp"

#include "detail.hpp"
#include "substitute.hpp"

namespace opalg {

using detail::for_each_input;
using detail::plain_slot;
using detail::Slot;
using detail::word_slot;

namespace {

using InsertFn = std::function<SparseVec(int n, int theta, const std::vector<int>& a, int e)>;

// Σ_p ±γ(θ; a_1..d a_p..a_n, tail) in `target`; d a_p goes to fixed slot 0.
SparseVec insertion_into(const Derivation& d, const WordSpace& target, int n, int theta, const std::vector<int>& a,
                         const std::vector<Slot>& tail) {
  const OperadAlgebra& A = *d.algebra;
  const Operad& O = A.operad();
  int delta = d.map.degree();
  int N = n + static_cast<int>(tail.size());
  VecBuilder out;
  int pre = O.degree(N, theta);
  for (int p = 0; p < n; ++p) {
    SparseVec da = d.map.column(a[p]);
    if (!da.empty()) {
      std::vector<Slot> slots;
      for (int i = 0; i < n; ++i)
        slots.push_back(i == p ? plain_slot(O, *d.target->space(), da, 1) : plain_slot(O, *A.space(), a[i], 0));
      slots.insert(slots.end(), tail.begin(), tail.end());
      out.add(detail::substitute(O, N, theta, slots, target), sign_of_parity(delta * pre));
    }
    pre += A.degree(a[p]);
  }
  return out.build();
}

int max_weight_of(const AModule& E, const AModule& T) {
  return std::max(E.algebra().space()->max_weight(), std::max(E.space()->max_weight(), T.space()->max_weight()));
}

// map ν_E(θ; a; e) = insertion + ±ν_T(θ; a; map e), instance by instance.
AxiomReport leibniz_report(const AModule& E, const AModule& T, const Derivation& d, const GradedMap& map,
                           const InsertFn& ins, const std::string& id) {
  AxiomReport r;
  const Operad& O = E.operad();
  const GradedSpace& SA = *E.algebra().space();
  int delta = map.degree();
  int cap = std::min(E.action_cap(), T.action_cap());
  int W = max_weight_of(E, T);
  for (int n = 0; n <= cap; ++n)
    for (int th = 0; th < O.dim(n + 1); ++th)
      for_each_input(SA, n, W, [&](const std::vector<int>& a) {
        int deg = O.degree(n + 1, th);
        for (int x : a) deg += SA.degree(x);
        for (int e = 0; e < E.dim(); ++e) {
          try {
            SparseVec lhs = map.apply(E.nu(n, th, a, e));
            VecBuilder rhs;
            rhs.add(ins(n, th, a, e), Rational(1));
            for (auto& [f, cf] : map.column(e)) rhs.add(T.nu(n, th, a, f), sign_of_parity(delta * deg) * cf);
            ++r.checked;
            if (!(lhs == rhs.build()))
              r.fail(id, "n=" + std::to_string(n) + " theta=" + std::to_string(th) + " inputs=(" + join_ints(a) +
                             ") e=" + std::to_string(e));
          } catch (const TruncationExceeded&) {
            ++r.skipped;
          }
        }
      });
  (void)d;
  return r;
}

void check_shape(const Connection& c) {
  if (c.product.factors.size() != 2 || c.product.factors[0] != c.d.target || c.product.factors[1] != c.module)
    throw DimensionError("connection: product must be P_A(M, E)");
  if (c.map.degree() != c.d.map.degree()) throw DimensionError("connection: degree differs from the derivation");
}

SparseVec shifted(const SparseVec& v, int off) {
  std::vector<SparseVec::Entry> e;
  for (auto& [i, c] : v) e.emplace_back(i + off, c);
  return SparseVec::from_sorted(std::move(e));
}

}  // namespace

SparseVec leibniz_insertion(const Derivation& d, const LaxProduct& P, int n, int theta, const std::vector<int>& a,
                            int e) {
  const AModule& E = *P.factors[1];
  return insertion_into(d, *P.words, n, theta, a, {plain_slot(E.operad(), *E.space(), e, 2)});
}

AxiomReport check_free_connection(const Connection& c) {
  check_shape(c);
  const LaxProduct& P = c.product;
  const Derivation& d = c.d;
  return leibniz_report(*c.module, *P.module, d, c.map,
                        [&](int n, int th, const std::vector<int>& a, int e) {
                          return leibniz_insertion(d, P, n, th, a, e);
                        },
                        "connection.leibniz");
}

AxiomReport check_connection(const Connection& c) {
  AxiomReport r = check_free_connection(c);
  ++r.checked;
  if (!commutator(c.product.module->carrier(), c.map, c.module->carrier()).is_zero()) r.fail("connection.chain", "");
  return r;
}

JetModule jet_module(const ModulePtr& E, const Derivation& d, int weight_cap) {
  if (d.map.degree() != 0) throw DimensionError("jet_module: derivation of nonzero degree");
  const AlgebraPtr& A = E->algebra_ptr();
  LaxProduct P = lax_product(A, {d.target, E}, weight_cap);
  Complex J = direct_sum(E->carrier(), P.module->carrier());
  int dimE = E->dim();
  auto act = [E, d, P, dimE](int k, int phi, const std::vector<int>& c, int x) -> SparseVec {
    if (x >= dimE) return shifted(P.module->nu(k, phi, c, x - dimE), dimE);
    VecBuilder out;
    out.add(E->nu(k, phi, c, x), Rational(1));
    out.add(shifted(leibniz_insertion(d, P, k, phi, c, x), dimE), Rational(1));
    return out.build();
  };
  auto JM = std::make_shared<AModule>(A, J, act, std::min(E->action_cap(), P.module->action_cap()),
                                      "J(" + E->name() + ")");
  JM->truncation_limited = P.module->truncation_limited;
  std::vector<SparseVec> ic, pc;
  for (int j = 0; j < P.module->dim(); ++j) ic.push_back(SparseVec::unit(dimE + j));
  for (int x = 0; x < J.dim(); ++x) pc.push_back(x < dimE ? SparseVec::unit(x) : SparseVec());
  ShortExact ses{ChainMap(GradedMap(P.module->space(), J.space(), 0, std::move(ic)), P.module->carrier(), J),
                 ChainMap(GradedMap(J.space(), E->space(), 0, std::move(pc)), J, E->carrier())};
  return {E, d, P, JM, ses};
}

GradedMap splitting_map(const JetModule& J, const GradedMap& nabla) {
  int dimE = J.base->dim();
  std::vector<SparseVec> cols;
  for (int e = 0; e < dimE; ++e) {
    VecBuilder b;
    b.add(SparseVec::unit(e), Rational(1));
    b.add(shifted(nabla.column(e), dimE), Rational(1));
    cols.push_back(b.build());
  }
  return GradedMap(J.base->space(), J.module->space(), nabla.degree(), std::move(cols));
}

bool splits_jet(const JetModule& J, const GradedMap& nabla, bool chain) {
  GradedMap f = splitting_map(J, nabla);
  if (chain && !is_chain_map(f, J.base->carrier(), J.module->carrier())) return false;
  return is_module_map(f, *J.base, *J.module);
}

bool connection_splitting_test(const JetModule& J, const GradedMap& nabla) {
  bool split = splits_jet(J, nabla, true);
  AxiomReport r = check_connection(Connection{J.base, J.d, J.product, nabla});
  bool diagrams = r.ok();
  if (split != diagrams) throw AxiomError("splitting test and connection diagrams disagree");
  return split;
}

Connection canonical_connection(const WordModule& F, const Derivation& d, int weight_cap) {
  const WordSpace& S = *F.words;
  if (S.groups().size() != 1 || S.groups()[0].module || S.groups()[0].multiplicity != 1)
    throw NotFreeModule("canonical_connection: " + S.name() + " is not U(A) ⊗ W");
  const Operad& O = S.operad();
  LaxProduct P = lax_product(F.module->algebra_ptr(), {d.target, F.module}, weight_cap);
  std::vector<SparseVec> cols;
  for (int b = 0; b < S.dim(); ++b) {
    const Word& w = S.representative(b);
    int n = static_cast<int>(w.inputs.size()) - 1;
    std::vector<int> a(w.inputs.begin(), w.inputs.begin() + n);
    Slot gen = word_slot(S, S.normal_form(O.unit(), {w.inputs[n]}), {2});
    cols.push_back(insertion_into(d, *P.words, n, w.theta, a, {gen}));
  }
  GradedMap map(F.module->space(), P.module->space(), d.map.degree(), std::move(cols));
  return {F.module, d, P, map};
}

std::optional<Connection> find_free_connection(const ModulePtr& E, const Derivation& d, int weight_cap) {
  const AlgebraPtr& A = E->algebra_ptr();
  LaxProduct P = lax_product(A, {d.target, E}, weight_cap);
  const AModule& T = *P.module;
  const Operad& O = E->operad();
  const GradedSpace& SA = *A->space();
  int delta = d.map.degree();
  // unknown entries ∇(r, x); index `count` holds the constant term
  std::vector<std::vector<int>> idx(E->dim(), std::vector<int>(T.dim(), -1));
  int count = 0;
  for (int x = 0; x < E->dim(); ++x)
    for (int r = 0; r < T.dim(); ++r)
      if (T.degree(r) == E->degree(x) + delta) idx[x][r] = count++;
  Echelon ech(count + 1);
  int cap = std::min(E->action_cap(), T.action_cap());
  int W = max_weight_of(*E, T);
  for (int n = 0; n <= cap; ++n)
    for (int th = 0; th < O.dim(n + 1); ++th)
      for_each_input(SA, n, W, [&](const std::vector<int>& a) {
        int deg = O.degree(n + 1, th);
        for (int x : a) deg += SA.degree(x);
        for (int e = 0; e < E->dim(); ++e) {
          std::map<int, VecBuilder> rows;
          try {
            for (auto& [x, cx] : E->nu(n, th, a, e))
              for (int r = 0; r < T.dim(); ++r)
                if (idx[x][r] >= 0) rows[r].add(idx[x][r], cx);
            for (int f = 0; f < T.dim(); ++f) {
              if (idx[e][f] < 0) continue;
              for (auto& [r, v] : T.nu(n, th, a, f)) rows[r].add(idx[e][f], -sign_of_parity(delta * deg) * v);
            }
            for (auto& [r, v] : leibniz_insertion(d, P, n, th, a, e)) rows[r].add(count, -v);
          } catch (const TruncationExceeded&) {
            continue;
          }
          for (auto& [r, b] : rows) ech.insert(b.build());
        }
      });
  auto rows = ech.basis();
  auto src = space_of_dims({{0, count}}, "x");
  auto tgt = space_of_dims({{0, static_cast<int>(rows.size())}}, "r");
  std::vector<VecBuilder> cols(count);
  VecBuilder rhs;
  for (size_t r = 0; r < rows.size(); ++r)
    for (auto& [j, c] : rows[r]) {
      if (j == count)
        rhs.add(static_cast<int>(r), -c);
      else
        cols[j].add(static_cast<int>(r), c);
    }
  std::vector<SparseVec> cv;
  for (auto& b : cols) cv.push_back(b.build());
  auto sol = solve(GradedMap(src, tgt, 0, std::move(cv)), rhs.build());
  if (!sol) return std::nullopt;
  std::vector<VecBuilder> mc(E->dim());
  for (int x = 0; x < E->dim(); ++x)
    for (int r = 0; r < T.dim(); ++r)
      if (idx[x][r] >= 0) {
        Rational v = sol->coeff(idx[x][r]);
        if (v != 0) mc[x].add(r, v);
      }
  std::vector<SparseVec> colv;
  for (auto& b : mc) colv.push_back(b.build());
  return Connection{E, d, P, GradedMap(E->space(), T.space(), delta, std::move(colv))};
}

AtiyahClass atiyah_from_connection(const Connection& c) {
  check_shape(c);
  const AModule& T = *c.product.module;
  GradedMap rep = -Rational(1) * commutator(T.carrier(), c.map, c.module->carrier());
  if (!is_chain_map(rep, c.module->carrier(), T.carrier()))
    throw NotAChainMap("atiyah_from_connection: −[∂,∇] is not a chain map");
  if (!is_module_map(rep, *c.module, T)) throw AxiomError("atiyah_from_connection: −[∂,∇] is not A-linear");
  return {rep, "connection"};
}

AtiyahClass atiyah_from_extension(const JetModule& J) {
  const AModule& E = *J.base;
  int dimE = E.dim();
  auto basis = module_map_basis(E, *J.module, 0, false);
  // λ with p ∘ Σ λ_i b_i = id
  auto src = space_of_dims({{0, static_cast<int>(basis.size())}}, "l");
  auto tgt = space_of_dims({{0, dimE * dimE}}, "e");
  std::vector<SparseVec> cols;
  for (auto& b : basis) {
    GradedMap pb = compose(J.ses.p.map, b);
    VecBuilder v;
    for (int x = 0; x < dimE; ++x)
      for (auto& [y, c] : pb.column(x)) v.add(x * dimE + y, c);
    cols.push_back(v.build());
  }
  VecBuilder id;
  for (int x = 0; x < dimE; ++x) id.add(x * dimE + x, Rational(1));
  auto lam = solve(GradedMap(src, tgt, 0, std::move(cols)), id.build());
  if (!lam) return {extension_class(J.ses), "extension, linear section"};
  GradedMap sigma(E.space(), J.module->space(), 0);
  for (auto& [i, c] : *lam) sigma += c * basis[i];
  return {extension_class(J.ses, sigma), "extension, A-linear section"};
}

namespace {

void check_products(const LaxProduct& P, const LaxProduct& Q, const ModulePtr& M) {
  size_t m = P.factors.size();
  if (Q.factors.size() != m + 1 || Q.factors[0] != M) throw DimensionError("expected Q = P_A(M, E_1..E_m)");
  for (size_t i = 0; i < m; ++i)
    if (Q.factors[i + 1] != P.factors[i]) throw DimensionError("factors of P and Q differ");
}

std::vector<int> e_classes(size_t m) {
  std::vector<int> cls;
  for (size_t i = 0; i < m; ++i) cls.push_back(static_cast<int>(i) + 2);
  return cls;
}

}  // namespace

GradedMap product_connection(const LaxProduct& P, const LaxProduct& Q, const std::vector<Connection>& nablas) {
  size_t m = P.factors.size();
  if (nablas.size() != m) throw DimensionError("product_connection: one connection per factor");
  const Derivation& d = nablas.at(0).d;
  check_products(P, Q, d.target);
  for (size_t j = 0; j < m; ++j) {
    check_shape(nablas[j]);
    if (nablas[j].module != P.factors[j] || nablas[j].d.target != d.target)
      throw DimensionError("product_connection: connection on the wrong factor");
  }
  const WordSpace& S = *P.words;
  const Operad& O = S.operad();
  const GradedSpace& SA = *d.algebra->space();
  int delta = d.map.degree();
  std::vector<SparseVec> cols;
  for (int b = 0; b < S.dim(); ++b) {
    const Word& w = S.representative(b);
    int N = static_cast<int>(w.inputs.size());
    int n = N - static_cast<int>(m);
    std::vector<int> a(w.inputs.begin(), w.inputs.begin() + n);
    std::vector<Slot> tail;
    for (size_t j = 0; j < m; ++j) tail.push_back(plain_slot(O, *P.factors[j]->space(), w.inputs[n + j], j + 2));
    VecBuilder out;
    out.add(insertion_into(d, *Q.words, n, w.theta, a, tail), Rational(1));
    int pre = O.degree(N, w.theta);
    for (int x : a) pre += SA.degree(x);
    for (size_t j = 0; j < m; ++j) {
      int e = w.inputs[n + j];
      std::vector<Slot> slots;
      for (int x : a) slots.push_back(plain_slot(O, SA, x, 0));
      for (size_t i = 0; i < m; ++i)
        slots.push_back(i == j ? word_slot(*nablas[j].product.words, nablas[j].map.column(e), {1, int(j) + 2})
                               : tail[i]);
      out.add(detail::substitute(O, N, w.theta, slots, *Q.words), sign_of_parity(delta * pre));
      pre += P.factors[j]->degree(e);
    }
    cols.push_back(out.build());
  }
  return GradedMap(P.module->space(), Q.module->space(), delta, std::move(cols));
}

AxiomReport check_product_connection(const LaxProduct& P, const LaxProduct& Q, const Derivation& d,
                                     const GradedMap& nabla) {
  check_products(P, Q, d.target);
  std::vector<int> cls = e_classes(P.factors.size());
  return leibniz_report(*P.module, *Q.module, d, nabla,
                        [&](int n, int th, const std::vector<int>& a, int x) {
                          return insertion_into(d, *Q.words, n, th, a, {word_slot(*P.words, SparseVec::unit(x), cls)});
                        },
                        "product_connection.leibniz");
}

GradedMap lax_map(const LaxProduct& PME, const LaxProduct& P, const LaxProduct& Q, const GradedMap& f) {
  if (PME.factors.size() != 2) throw DimensionError("lax_map: expected P_A(M, E)");
  check_products(P, Q, PME.factors[0]);
  const WordSpace& S = *PME.words;
  const Operad& O = S.operad();
  const GradedSpace& SA = *S.algebra().space();
  std::vector<int> cls = e_classes(P.factors.size());
  std::vector<SparseVec> cols;
  for (int b = 0; b < S.dim(); ++b) {
    const Word& w = S.representative(b);
    int N = static_cast<int>(w.inputs.size());
    int n = N - 2;
    std::vector<Slot> slots;
    int pre = O.degree(N, w.theta);
    for (int i = 0; i < n; ++i) {
      slots.push_back(plain_slot(O, SA, w.inputs[i], 0));
      pre += SA.degree(w.inputs[i]);
    }
    slots.push_back(plain_slot(O, *PME.factors[0]->space(), w.inputs[n], 1));
    pre += PME.factors[0]->degree(w.inputs[n]);
    slots.push_back(word_slot(*P.words, f.column(w.inputs[n + 1]), cls));
    cols.push_back(sign_of_parity(f.degree() * pre) * detail::substitute(O, N, w.theta, slots, *Q.words));
  }
  return GradedMap(PME.module->space(), Q.module->space(), f.degree(), std::move(cols));
}

GradedMap derivative_of_morphism(const GradedMap& f, const Connection& nabla, const LaxProduct& P,
                                 const LaxProduct& Q, const std::vector<Connection>& nablas) {
  GradedMap prod = product_connection(P, Q, nablas);
  return compose(prod, f) - compose(lax_map(nabla.product, P, Q, f), nabla.map);
}

}  // namespace opalg
