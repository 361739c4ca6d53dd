#include "opalg/constructions.hpp"

#include "detail.hpp"
#include "opalg/errors.hpp"

namespace opalg {

using detail::for_each_input;

FreeAlgebra free_algebra(OperadPtr O, const Complex& V, int weight_cap, std::string name) {
  if (O->cap() < weight_cap)
    throw TruncationExceeded(name, "arity cap " + std::to_string(O->cap()) + " below weight cap " +
                                       std::to_string(weight_cap));
  std::vector<BasisElement> b = V.space()->basis();
  for (auto& e : b) e.weight = 1;
  auto S = make_space(std::move(b));
  Complex V1(S, GradedMap(S, S, 1, V.d().columns()));

  WordOptions opt;
  opt.weight_cap = weight_cap;
  opt.compose = false;
  opt.max_algebra_inputs = weight_cap;
  auto W = std::make_shared<WordSpace>(O, V1, std::vector<WordGroup>{}, opt, name);
  W->finalize();
  WordSpacePtr words = W;

  auto mul = [words, O, V1, weight_cap](int n, int theta, const std::vector<int>& in) -> SparseVec {
    std::vector<int> arities{n}, basis{theta}, vs;
    int weight = 0;
    for (int x : in) weight += words->complex().space()->weight(x);
    if (weight > weight_cap) return {};
    int parity = 0, prev_vdeg = 0;
    for (int x : in) {
      const Word& w = words->representative(x);
      int m = static_cast<int>(w.inputs.size());
      arities.push_back(m);
      basis.push_back(w.theta);
      // θ_i moves past the v-blocks of the earlier inputs
      parity += O->degree(m, w.theta) * prev_vdeg;
      for (int v : w.inputs) {
        vs.push_back(v);
        prev_vdeg += V1.space()->degree(v);
      }
    }
    SparseVec g = O->gamma(arities, basis);
    return sign_of_parity(parity) * words->normal_form(g, vs);
  };
  auto A = std::make_shared<OperadAlgebra>(O, words->complex(), mul, O->cap(), name);

  std::vector<SparseVec> cols;
  for (int v = 0; v < S->dim(); ++v) cols.push_back(words->normal_form(O->unit(), {v}));
  return {A, words, V1, GradedMap(S, words->complex().space(), 0, std::move(cols))};
}

Coinvariants coinvariants(const Complex& X, const std::vector<GradedMap>& generators) {
  std::vector<SparseVec> rel;
  for (auto& g : generators)
    for (int j = 0; j < X.dim(); ++j) rel.push_back(SparseVec::unit(j) - g.column(j));
  Subspace sub(X.space(), rel);
  Quotient q = quotient(X.space(), sub);
  GradedMap d = compose(q.projection, compose(X.d(), q.section));
  if (!(compose(q.projection, X.d()) == compose(d, q.projection)))
    throw IllDefinedQuotient("coinvariants: the action does not commute with the differential");
  return {Complex(q.space, d), q.projection, q.section};
}

namespace {

Complex hole_complex() {
  auto s = make_space({BasisElement{0, 0, "h"}});
  return Complex::with_zero_differential(s);
}

Envelope envelope(const AlgebraPtr& A, int weight_cap, bool compose, const std::string& name) {
  WordOptions opt;
  opt.weight_cap = weight_cap >= 0 ? weight_cap : A->space()->max_weight();
  opt.compose = compose;
  auto W = std::make_shared<WordSpace>(A, std::vector<WordGroup>{{"hole", hole_complex(), 1, false, nullptr}}, opt,
                                       name);
  W->finalize();
  WordSpacePtr words = W;
  OperadPtr O = A->operad_ptr();
  int wcap = opt.weight_cap;
  auto mul = [words, O, A, wcap, name](int x, int y) -> SparseVec {
    const Word& wx = words->representative(x);
    const Word& wy = words->representative(y);
    int N = static_cast<int>(wx.inputs.size()), M = static_cast<int>(wy.inputs.size());
    std::vector<int> in(wx.inputs.begin(), wx.inputs.end() - 1);
    int adeg = 0, weight = 0;
    for (int a : in) {
      adeg += A->degree(a);
      weight += A->weight(a);
    }
    for (int i = 0; i + 1 < M; ++i) weight += A->weight(wy.inputs[i]);
    if (wcap >= 0 && weight > wcap) return {};
    if (N + M - 1 > O->cap())
      throw TruncationExceeded(name, "product of words of arity " + std::to_string(N) + " and " + std::to_string(M));
    in.insert(in.end(), wy.inputs.begin(), wy.inputs.end());
    SparseVec t = O->partial(N, N - 1, M, wx.theta, wy.theta);
    return sign_of_parity(O->degree(M, wy.theta) * adeg) * words->normal_form(t, in);
  };
  Monoid mon{words->complex(), mul, words->normal_form(O->unit(), {0})};
  return {mon, words};
}

}  // namespace

Envelope tensor_algebra(const AlgebraPtr& A, int weight_cap) {
  return envelope(A, weight_cap, false, "T(" + A->name() + ")");
}

Envelope universal_envelope(const AlgebraPtr& A, int weight_cap) {
  return envelope(A, weight_cap, true, "U(" + A->name() + ")");
}

SparseVec envelope_act(const Envelope& U, const AModule& E, int u, int m) {
  const Word& w = U.words->representative(u);
  std::vector<int> a(w.inputs.begin(), w.inputs.end() - 1);
  return E.nu(static_cast<int>(a.size()), w.theta, a, m);
}

AxiomReport check_envelope_module(const Envelope& U, const AModule& E) {
  AxiomReport r;
  const Monoid& M = U.monoid;
  int du = M.carrier.dim(), de = E.dim();
  auto act_vec = [&](const SparseVec& u, const SparseVec& m) {
    VecBuilder out;
    for (auto& [i, ci] : u)
      for (auto& [j, cj] : m) out.add(envelope_act(U, E, i, j), ci * cj);
    return out.build();
  };
  for (int m = 0; m < de; ++m) {
    ++r.checked;
    if (!(act_vec(M.unit, SparseVec::unit(m)) == SparseVec::unit(m)))
      r.fail("envelope.module.unit", "m=" + std::to_string(m));
  }
  for (int x = 0; x < du; ++x)
    for (int m = 0; m < de; ++m) {
      ++r.checked;
      SparseVec xm = envelope_act(U, E, x, m);
      // chain condition
      SparseVec lhs = E.carrier().d().apply(xm);
      SparseVec rhs = act_vec(M.carrier.d().column(x), SparseVec::unit(m));
      rhs.add_scaled(act_vec(SparseVec::unit(x), E.carrier().d().column(m)),
                     sign_of_parity(M.carrier.space()->degree(x)));
      if (!(lhs == rhs)) r.fail("envelope.module.chain", "u=" + std::to_string(x) + " m=" + std::to_string(m));
      for (int y = 0; y < du; ++y) {
        SparseVec xy;
        try {
          xy = M.mul(x, y);
        } catch (const TruncationExceeded&) {
          continue;
        }
        ++r.checked;
        SparseVec a = act_vec(xy, SparseVec::unit(m));
        SparseVec b = act_vec(SparseVec::unit(x), envelope_act(U, E, y, m));
        if (!(a == b))
          r.fail("envelope.module.assoc",
                 "u=" + std::to_string(x) + " v=" + std::to_string(y) + " m=" + std::to_string(m));
      }
    }
  return r;
}

namespace {

// σ sending the last position to p and keeping the others in order.
Permutation move_to_end(int n, int p) {
  std::vector<int> img(n);
  for (int i = 0; i < n - 1; ++i) img[i] = i < p ? i : i + 1;
  img[n - 1] = p;
  return Permutation(img);
}

int input_degree_at(const AModule& E, const std::vector<int>& in, int p, int i) {
  return i == p ? E.degree(in[i]) : E.algebra().degree(in[i]);
}

// nu_at on vectors, one per input position.
SparseVec nu_at_multi(const AModule& E, int n, int theta, const std::vector<SparseVec>& in, int p) {
  std::vector<const SparseVec*> ptrs;
  for (auto& v : in) ptrs.push_back(&v);
  VecBuilder out;
  for_each_term(ptrs, [&](const std::vector<int>& idx, const Rational& c) { out.add(nu_at(E, n, theta, idx, p), c); });
  return out.build();
}

}  // namespace

SparseVec nu_at(const AModule& E, int n, int theta, const std::vector<int>& in, int p) {
  Permutation s = move_to_end(n, p);
  std::vector<int> degs(n);
  for (int i = 0; i < n; ++i) degs[i] = input_degree_at(E, in, p, i);
  std::vector<SparseVec> c;
  for (int i = 0; i < n - 1; ++i) c.push_back(SparseVec::unit(in[s(i)]));
  SparseVec th = E.operad().act(s, theta);
  return koszul_sign(s, degs) * E.nu(n - 1, th, c, SparseVec::unit(in[p]));
}

AxiomReport check_derivation(const Derivation& d) {
  AxiomReport r;
  const OperadAlgebra& A = *d.algebra;
  const AModule& M = *d.target;
  const Operad& O = A.operad();
  int delta = d.map.degree();
  ++r.checked;
  if (!commutator(M.carrier(), d.map, A.carrier()).is_zero()) r.fail("derivation.chain", "");
  int cap = std::min(A.mult_cap(), M.action_cap() + 1);
  int W = A.space()->max_weight();
  for (int n = 0; n <= cap; ++n)
    for (int th = 0; th < O.dim(n); ++th)
      for_each_input(*A.space(), n, W, [&](const std::vector<int>& a) {
        ++r.checked;
        SparseVec lhs = d.map.apply(A.mu(n, th, a));
        VecBuilder rhs;
        int pre = O.degree(n, th);
        for (int p = 0; p < n; ++p) {
          std::vector<SparseVec> in;
          for (int x : a) in.push_back(SparseVec::unit(x));
          in[p] = d.map.column(a[p]);
          rhs.add(nu_at_multi(M, n, th, in, p), sign_of_parity(delta * pre));
          pre += A.degree(a[p]);
        }
        if (!(lhs == rhs.build()))
          r.fail("derivation.leibniz", "n=" + std::to_string(n) + " theta=" + std::to_string(th) + " inputs=(" +
                                           join_ints(a) + ")");
      });
  return r;
}

Derivation derivation_from_map(const FreeAlgebra& F, const ModulePtr& M, const GradedMap& phi) {
  const WordSpace& W = *F.words;
  const Operad& O = W.operad();
  int delta = phi.degree();
  std::vector<SparseVec> cols;
  for (int b = 0; b < W.dim(); ++b) {
    const Word& w = W.representative(b);
    int n = static_cast<int>(w.inputs.size());
    VecBuilder out;
    int pre = O.degree(n, w.theta);
    for (int p = 0; p < n; ++p) {
      std::vector<SparseVec> in;
      for (int v : w.inputs) in.push_back(F.inclusion.column(v));
      in[p] = phi.column(w.inputs[p]);
      out.add(nu_at_multi(*M, n, w.theta, in, p), sign_of_parity(delta * pre));
      pre += F.generators.space()->degree(w.inputs[p]);
    }
    cols.push_back(out.build());
  }
  return {F.algebra, M, GradedMap(W.complex().space(), M->space(), delta, std::move(cols))};
}

GradedMap restrict_to_generators(const FreeAlgebra& F, const Derivation& d) {
  std::vector<SparseVec> cols;
  for (auto& c : F.inclusion.columns()) cols.push_back(d.map.apply(c));
  return GradedMap(F.generators.space(), d.target->space(), d.map.degree(), std::move(cols));
}

namespace {

// Unknown entries X(r, c) of a homogeneous map of degree delta.
struct MapUnknowns {
  std::vector<std::vector<int>> idx;  // [c][r] -> unknown or -1
  int count = 0;
  MapUnknowns(const GradedSpace& src, const GradedSpace& tgt, int delta) {
    idx.assign(src.dim(), std::vector<int>(tgt.dim(), -1));
    for (int c = 0; c < src.dim(); ++c)
      for (int r = 0; r < tgt.dim(); ++r)
        if (tgt.degree(r) == src.degree(c) + delta) idx[c][r] = count++;
  }
};

// Rows of  d_tgt X − (−1)^δ X d_src = 0.
void chain_rows(const Complex& src, const Complex& tgt, int delta, const MapUnknowns& u, Echelon& ech) {
  for (int c = 0; c < src.dim(); ++c) {
    std::map<int, VecBuilder> rows;  // output row r
    for (int s = 0; s < tgt.dim(); ++s) {
      if (u.idx[c][s] < 0) continue;
      for (auto& [r, v] : tgt.d().column(s)) rows[r].add(u.idx[c][s], v);
    }
    for (auto& [t, v] : src.d().column(c))
      for (int r = 0; r < tgt.dim(); ++r)
        if (u.idx[t][r] >= 0) rows[r].add(u.idx[t][r], -sign_of_parity(delta) * v);
    for (auto& [r, b] : rows) ech.insert(b.build());
  }
}

void insert_rows(std::map<int, VecBuilder>& rows, Echelon& ech) {
  for (auto& [r, b] : rows) ech.insert(b.build());
}

}  // namespace

int derivation_space_dim(const OperadAlgebra& A, const AModule& M, int delta) {
  MapUnknowns u(*A.space(), *M.space(), delta);
  Echelon ech(u.count);
  chain_rows(A.carrier(), M.carrier(), delta, u, ech);
  const Operad& O = A.operad();
  int cap = std::min(A.mult_cap(), M.action_cap() + 1);
  int W = A.space()->max_weight();
  for (int n = 0; n <= cap; ++n)
    for (int th = 0; th < O.dim(n); ++th)
      for_each_input(*A.space(), n, W, [&](const std::vector<int>& a) {
        std::map<int, VecBuilder> rows;
        for (auto& [x, cx] : A.mu(n, th, a))
          for (int r = 0; r < M.dim(); ++r)
            if (u.idx[x][r] >= 0) rows[r].add(u.idx[x][r], cx);
        int pre = O.degree(n, th);
        for (int p = 0; p < n; ++p) {
          Rational s = -sign_of_parity(delta * pre);
          for (int e = 0; e < M.dim(); ++e) {
            int var = u.idx[a[p]][e];
            if (var < 0) continue;
            auto in = a;
            in[p] = e;
            for (auto& [r, v] : nu_at(M, n, th, in, p)) rows[r].add(var, s * v);
          }
          pre += A.degree(a[p]);
        }
        insert_rows(rows, ech);
      });
  return u.count - ech.rank();
}

namespace {

// Rows of the module-map conditions on unknowns u; chain rows optional.
std::vector<SparseVec> module_map_rows(const AModule& E, const AModule& M, int delta, const MapUnknowns& u,
                                       bool chain) {
  Echelon ech(u.count);
  if (chain) chain_rows(E.carrier(), M.carrier(), delta, u, ech);
  const Operad& O = E.operad();
  const GradedSpace& SA = *E.algebra().space();
  int cap = std::min(E.action_cap(), M.action_cap());
  int W = std::max(SA.max_weight(), std::max(E.space()->max_weight(), M.space()->max_weight()));
  for (int k = 0; k <= cap; ++k)
    for (int phi = 0; phi < O.dim(k + 1); ++phi)
      for_each_input(SA, k, W, [&](const std::vector<int>& c) {
        int cdeg = O.degree(k + 1, phi);
        for (int x : c) cdeg += SA.degree(x);
        for (int m = 0; m < E.dim(); ++m) {
          std::map<int, VecBuilder> rows;
          for (auto& [x, cx] : E.nu(k, phi, c, m))
            for (int r = 0; r < M.dim(); ++r)
              if (u.idx[x][r] >= 0) rows[r].add(u.idx[x][r], cx);
          for (int e = 0; e < M.dim(); ++e) {
            int var = u.idx[m][e];
            if (var < 0) continue;
            for (auto& [r, v] : M.nu(k, phi, c, e)) rows[r].add(var, -sign_of_parity(delta * cdeg) * v);
          }
          insert_rows(rows, ech);
        }
      });
  return ech.basis();
}

}  // namespace

int module_map_space_dim(const AModule& E, const AModule& M, int delta) {
  MapUnknowns u(*E.space(), *M.space(), delta);
  return u.count - static_cast<int>(module_map_rows(E, M, delta, u, true).size());
}

std::vector<GradedMap> module_map_basis(const AModule& E, const AModule& M, int delta, bool chain) {
  MapUnknowns u(*E.space(), *M.space(), delta);
  auto rows = module_map_rows(E, M, delta, u, chain);
  // kernel of the row matrix, read as a map unknowns -> rows
  auto src = space_of_dims({{0, u.count}}, "x");
  auto tgt = space_of_dims({{0, static_cast<int>(rows.size())}}, "r");
  std::vector<VecBuilder> cols(u.count);
  for (size_t r = 0; r < rows.size(); ++r)
    for (auto& [j, c] : rows[r]) cols[j].add(static_cast<int>(r), c);
  std::vector<SparseVec> cv;
  for (auto& b : cols) cv.push_back(b.build());
  Subspace ker = kernel(GradedMap(src, tgt, 0, std::move(cv)));
  std::vector<GradedMap> out;
  for (auto& v : ker.basis()) {
    std::vector<VecBuilder> mc(E.dim());
    for (auto& [j, c] : v)
      for (int x = 0; x < E.dim(); ++x)
        for (int r = 0; r < M.dim(); ++r)
          if (u.idx[x][r] == j) mc[x].add(r, c);
    std::vector<SparseVec> colv;
    for (auto& b : mc) colv.push_back(b.build());
    out.emplace_back(E.space(), M.space(), delta, std::move(colv));
  }
  return out;
}

bool is_module_map(const GradedMap& f, const AModule& E, const AModule& M) {
  const Operad& O = E.operad();
  const GradedSpace& SA = *E.algebra().space();
  int delta = f.degree();
  int cap = std::min(E.action_cap(), M.action_cap());
  int W = std::max(SA.max_weight(), std::max(E.space()->max_weight(), M.space()->max_weight()));
  bool ok = true;
  for (int k = 0; k <= cap && ok; ++k)
    for (int phi = 0; phi < O.dim(k + 1) && ok; ++phi)
      for_each_input(SA, k, W, [&](const std::vector<int>& c) {
        if (!ok) return;
        int cdeg = O.degree(k + 1, phi);
        for (int x : c) cdeg += SA.degree(x);
        for (int m = 0; m < E.dim() && ok; ++m) {
          SparseVec lhs = f.apply(E.nu(k, phi, c, m));
          VecBuilder rhs;
          for (auto& [e, ce] : f.column(m)) rhs.add(M.nu(k, phi, c, e), sign_of_parity(delta * cdeg) * ce);
          if (!(lhs == rhs.build())) ok = false;
        }
      });
  return ok;
}

Kahler kahler(const AlgebraPtr& A, int weight_cap) {
  WordOptions opt;
  opt.weight_cap = weight_cap >= 0 ? weight_cap : A->space()->max_weight();
  std::string name = "Omega(" + A->name() + ")";
  auto W = std::make_shared<WordSpace>(A, std::vector<WordGroup>{{"d", A->carrier(), 1, false, nullptr}}, opt, name);
  const Operad& O = A->operad();
  int ncap = W->max_algebra_inputs();
  int cap = std::min(A->mult_cap(), ncap + 1);
  if (A->mult_cap() < ncap + 1) W->mark_limited();
  std::vector<SparseVec> leibniz;
  // d μ(θ; a) = Σ_p ± ν(θ σ_p; a_{≠p}; d a_p)
  for (int n = 0; n <= cap; ++n)
    for (int th = 0; th < O.dim(n); ++th)
      for_each_input(*A->space(), n, opt.weight_cap, [&](const std::vector<int>& a) {
        VecBuilder rel;
        for (auto& [b, cb] : A->mu(n, th, a)) rel.add(W->word_vector(O.unit(), {b}), cb);
        std::vector<int> degs;
        for (int x : a) degs.push_back(A->degree(x));
        for (int p = 0; p < n; ++p) {
          Permutation s = move_to_end(n, p);
          std::vector<int> in(n);
          for (int i = 0; i < n; ++i) in[i] = a[s(i)];
          rel.add(W->word_vector(O.act(s, th), in), -koszul_sign(s, degs));
        }
        SparseVec r = rel.build();
        if (!r.empty()) leibniz.push_back(r);
      });
  // the relations must span a submodule
  for (auto& r : leibniz) {
    W->add_relation(r);
    for (int k = 1; k <= ncap; ++k)
      for (int phi = 0; phi < O.dim(k + 1); ++phi)
        for_each_input(*A->space(), k, opt.weight_cap, [&](const std::vector<int>& c) {
          try {
            W->add_relation(W->act_words(k, phi, c, r));
          } catch (const TruncationExceeded&) {
            W->mark_limited();
          }
        });
  }
  W->finalize();
  WordSpacePtr words = W;
  ModulePtr omega = word_module(words, name);
  std::vector<SparseVec> cols;
  for (int b = 0; b < A->dim(); ++b) cols.push_back(words->normal_form(O.unit(), {b}));
  Derivation d{A, omega, GradedMap(A->space(), omega->space(), 0, std::move(cols))};
  return {omega, words, d};
}

GradedMap extend_to_morphism(const FreeAlgebra& F, const OperadAlgebra& B, const GradedMap& f) {
  const WordSpace& W = *F.words;
  std::vector<SparseVec> cols;
  for (int b = 0; b < W.dim(); ++b) {
    const Word& w = W.representative(b);
    std::vector<SparseVec> in;
    for (int v : w.inputs) in.push_back(f.column(v));
    cols.push_back(B.mu(static_cast<int>(in.size()), SparseVec::unit(w.theta), in));
  }
  return GradedMap(W.complex().space(), B.space(), 0, std::move(cols));
}

bool is_algebra_morphism(const OperadAlgebra& A, const OperadAlgebra& B, const GradedMap& f) {
  if (f.degree() != 0 || !is_chain_map(f, A.carrier(), B.carrier())) return false;
  const Operad& O = A.operad();
  int cap = std::min(A.mult_cap(), B.mult_cap());
  bool ok = true;
  for (int n = 0; n <= cap && ok; ++n)
    for (int th = 0; th < O.dim(n) && ok; ++th)
      for_each_input(*A.space(), n, A.space()->max_weight(), [&](const std::vector<int>& a) {
        if (!ok) return;
        std::vector<SparseVec> in;
        for (int x : a) in.push_back(f.column(x));
        if (!(f.apply(A.mu(n, th, a)) == B.mu(n, SparseVec::unit(th), in))) ok = false;
      });
  return ok;
}

}  // namespace opalg
