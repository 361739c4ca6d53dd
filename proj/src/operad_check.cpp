#include <functional>
#include <map>

#include "opalg/operad.hpp"

namespace opalg {

namespace {

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Calls f on every tuple of indices with 0 ≤ t[k] < dims[k].
void for_each_tuple(const std::vector<int>& dims, const std::function<void(const std::vector<int>&)>& f) {
  for (int d : dims)
    if (d == 0) return;
  std::vector<int> t(dims.size(), 0);
  while (true) {
    f(t);
    int k = static_cast<int>(dims.size()) - 1;
    while (k >= 0 && ++t[k] == dims[k]) t[k--] = 0;
    if (k < 0) return;
  }
}

// Compositions of at most `budget` into `parts` non-negative entries.
void for_each_composition(int parts, int budget, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> t;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(t.size()) == parts) {
      f(t);
      return;
    }
    for (int m = 0; m <= left; ++m) {
      t.push_back(m);
      rec(left - m);
      t.pop_back();
    }
  };
  rec(budget);
}

std::string tuple_str(const std::vector<int>& ar, const std::vector<int>& basis) {
  return "(" + join_ints(ar) + ") basis (" + join_ints(basis) + ")";
}

void check_smodule(const Operad& O, AxiomReport& r) {
  for (int n = 2; n <= O.cap(); ++n) {
    const Complex& C = O.component(n);
    auto id = GradedMap::identity(C.space());
    for (int i = 0; i + 1 < n; ++i) {
      const GradedMap& g = O.generator(n, i);
      ++r.checked;
      if (!is_chain_map(g, C, C)) r.fail("smodule.action.chain", "n=" + std::to_string(n) + " s" + std::to_string(i));
      ++r.checked;
      if (!(compose(g, g) == id)) r.fail("smodule.action.involution", "n=" + std::to_string(n) + " s" + std::to_string(i));
      for (int j = i + 1; j + 1 < n; ++j) {
        const GradedMap& h = O.generator(n, j);
        ++r.checked;
        bool ok = j == i + 1 ? compose(g, compose(h, g)) == compose(h, compose(g, h)) : compose(g, h) == compose(h, g);
        if (!ok)
          r.fail("smodule.action.braid", "n=" + std::to_string(n) + " s" + std::to_string(i) + " s" + std::to_string(j));
      }
    }
    for (auto& s : Permutation::all(n))
      for (int b = 0; b < O.dim(n); ++b) {
        SparseVec v = SparseVec::unit(b);
        for (int i : s.adjacent_word()) v = O.generator(n, i).apply(v);
        ++r.checked;
        if (!(v == O.act(s, b))) r.fail("smodule.action.word", "n=" + std::to_string(n) + " sigma=" + s.to_string());
      }
  }
}

void check_gamma_chain(const Operad& O, AxiomReport& r) {
  if (O.cap() >= 1) {
    ++r.checked;
    if (!O.component(1).d().apply(O.unit()).empty()) r.fail("operad.unit.cycle", "n=1");
  }
  for (auto& ar : O.gamma_tuples()) {
    std::vector<Complex> f;
    int m = 0;
    for (size_t i = 0; i < ar.size(); ++i) {
      f.push_back(O.component(ar[i]));
      if (i) m += ar[i];
    }
    Complex T = tensor(f);
    GradedMap g = O.gamma_matrix(ar);
    GradedMap gm(T.space(), O.component(m).space(), 0, g.columns());
    ++r.checked;
    if (!is_chain_map(gm, T, O.component(m))) r.fail("operad.gamma.chain", "(" + join_ints(ar) + ")");
  }
}

// Mixed-radix encoding of a basis tuple.
long long encode(const std::vector<int>& t, const std::vector<int>& dims, size_t from, size_t to) {
  long long k = 0;
  for (size_t i = from; i < to; ++i) k = k * dims[i] + t[i];
  return k;
}

// Associativity on every basis tuple (θ; θ_i; θ_ij). A tuple is evaluated
// whenever either path can be nonzero: the outer composite γ(θ;θ_i) is
// nonzero, or every inner composite γ(θ_i;θ_ij) is nonzero. On all other
// tuples both paths are zero by multilinearity.
void check_assoc_shape(const Operad& O, int n, const std::vector<int>& m, const std::vector<int>& l,
                       AxiomReport& r) {
  int M = static_cast<int>(l.size());
  std::vector<int> ar_outer{n};
  ar_outer.insert(ar_outer.end(), m.begin(), m.end());
  std::vector<int> outer_dims{O.dim(n)};
  for (int x : m) outer_dims.push_back(O.dim(x));
  for (int d : outer_dims)
    if (d == 0) return;
  for (int x : l)
    if (O.dim(x) == 0) return;

  // inner tables per group: (θ_i, θ_ij..) -> γ value, degree data
  struct Inner {
    std::vector<int> basis;  // θ_i then θ_ij
    SparseVec value;
    long long leaf_degree;
  };
  std::vector<std::vector<Inner>> groups(n);
  std::vector<std::vector<int>> group_dims(n);
  std::vector<int> group_off(n);
  int off = 0;
  for (int i = 0; i < n; ++i) {
    group_off[i] = off;
    std::vector<int> ar_i{m[i]}, dims{O.dim(m[i])};
    for (int j = 0; j < m[i]; ++j) {
      ar_i.push_back(l[off + j]);
      dims.push_back(O.dim(l[off + j]));
    }
    group_dims[i] = dims;
    for_each_tuple(dims, [&](const std::vector<int>& b) {
      long long deg = 0;
      for (int j = 0; j < m[i]; ++j) deg += O.degree(l[off + j], b[1 + j]);
      groups[i].push_back({b, O.gamma(ar_i, b), deg});
    });
    off += m[i];
  }
  std::vector<int> leaf_dims;
  for (int x : l) leaf_dims.push_back(O.dim(x));

  auto evaluate = [&](const std::vector<int>& theta_tuple, const std::vector<const Inner*>& inner,
                      const SparseVec& first) {
    std::vector<std::pair<int, SparseVec>> ins;
    long long parity = 0, prefix = 0;
    std::vector<int> leaves;
    for (int i = 0; i < n; ++i) {
      int Li = 0;
      for (int j = 0; j < m[i]; ++j) Li += l[group_off[i] + j];
      ins.emplace_back(Li, inner[i]->value);
      parity += static_cast<long long>(O.degree(m[i], theta_tuple[1 + i])) * prefix;
      prefix += inner[i]->leaf_degree;
      leaves.insert(leaves.end(), inner[i]->basis.begin() + 1, inner[i]->basis.end());
    }
    SparseVec right = O.gamma(n, SparseVec::unit(theta_tuple[0]), ins);
    SparseVec down;
    if (!first.empty()) {
      std::vector<std::pair<int, SparseVec>> rest;
      for (int k = 0; k < M; ++k) rest.emplace_back(l[k], SparseVec::unit(leaves[k]));
      down = O.gamma(M, first, rest);
      down *= sign_of_parity(parity);
    }
    ++r.checked;
    if (!(right == down)) {
      std::vector<int> ar = ar_outer, b = theta_tuple;
      ar.push_back(-1);
      ar.insert(ar.end(), l.begin(), l.end());
      b.insert(b.end(), leaves.begin(), leaves.end());
      r.fail("operad.assoc", tuple_str(ar, b));
    }
  };

  // index inner entries by (θ_i, leaf tuple) for lookup
  std::vector<std::vector<int>> lookup(n);
  for (int i = 0; i < n; ++i) {
    lookup[i].assign(groups[i].size(), 0);
    for (size_t k = 0; k < groups[i].size(); ++k) lookup[i][k] = static_cast<int>(k);
  }

  // pass A: nonzero outer composites, all leaves
  std::vector<char> nonzero_first;
  long long outer_count = 1;
  for (int d : outer_dims) outer_count *= d;
  nonzero_first.assign(outer_count, 0);
  for_each_tuple(outer_dims, [&](const std::vector<int>& tb) {
    SparseVec first = O.gamma(ar_outer, tb);
    if (first.empty()) return;
    nonzero_first[encode(tb, outer_dims, 0, tb.size())] = 1;
    // iterate all leaf tuples group by group
    std::vector<int> per_group_count(n);
    for (int i = 0; i < n; ++i) {
      long long c = 1;
      for (size_t j = 1; j < group_dims[i].size(); ++j) c *= group_dims[i][j];
      per_group_count[i] = static_cast<int>(c);
    }
    std::vector<const Inner*> inner(n);
    for_each_tuple(per_group_count, [&](const std::vector<int>& lt) {
      for (int i = 0; i < n; ++i) inner[i] = &groups[i][static_cast<size_t>(tb[1 + i]) * per_group_count[i] + lt[i]];
      evaluate(tb, inner, first);
    });
  });

  // pass B: every inner composite nonzero, outer composite zero
  std::vector<std::vector<const Inner*>> nz(n);
  for (int i = 0; i < n; ++i)
    for (auto& e : groups[i])
      if (!e.value.empty()) nz[i].push_back(&e);
  std::vector<int> nz_dims{O.dim(n)};
  for (int i = 0; i < n; ++i) nz_dims.push_back(static_cast<int>(nz[i].size()));
  for_each_tuple(nz_dims, [&](const std::vector<int>& t) {
    std::vector<int> tb{t[0]};
    std::vector<const Inner*> inner(n);
    for (int i = 0; i < n; ++i) {
      inner[i] = nz[i][t[1 + i]];
      tb.push_back(inner[i]->basis[0]);
    }
    if (nonzero_first[encode(tb, outer_dims, 0, tb.size())]) return;
    evaluate(tb, inner, SparseVec());
  });
}

void check_assoc(const Operad& O, AxiomReport& r) {
  int N = O.cap();
  for (int n = 0; n <= N; ++n)
    for_each_composition(n, N, [&](const std::vector<int>& m) {
      int M = 0;
      for (int x : m) M += x;
      for_each_composition(M, N, [&](const std::vector<int>& l) { check_assoc_shape(O, n, m, l, r); });
    });
}

void check_equivariance(const Operad& O, AxiomReport& r) {
  int N = O.cap();
  for (int n = 0; n <= N; ++n)
    for_each_composition(n, N, [&](const std::vector<int>& m) {
      std::vector<int> dims{O.dim(n)};
      for (int x : m) dims.push_back(O.dim(x));
      std::vector<int> ar{n};
      ar.insert(ar.end(), m.begin(), m.end());
      auto perms = Permutation::all(n);
      for_each_tuple(dims, [&](const std::vector<int>& b) {
        SparseVec base = O.gamma(ar, b);
        std::vector<int> degs(n);
        for (int i = 0; i < n; ++i) degs[i] = O.degree(m[i], b[1 + i]);
        for (auto& s : perms) {
          // γ(θσ; θ_σ(1)..θ_σ(n)) with the Koszul sign of the reordering
          std::vector<int> ar_s{n};
          std::vector<std::pair<int, SparseVec>> ins;
          std::vector<int> msig(n);
          for (int p = 0; p < n; ++p) {
            msig[p] = m[s(p)];
            ins.emplace_back(m[s(p)], SparseVec::unit(b[1 + s(p)]));
          }
          SparseVec lhs = O.gamma(n, O.act(s, b[0]), ins);
          lhs *= koszul_sign(s, degs);
          SparseVec rhs = O.act(block_permutation(s, msig), base);
          ++r.checked;
          if (!(lhs == rhs)) r.fail("operad.equiv.block", tuple_str(ar, b) + " sigma=" + s.to_string());
        }
        // γ(θ; θ_1τ_1, ..) = γ(θ; θ_1, ..)·(τ_1+..+τ_n)
        std::vector<int> pdims;
        for (int x : m) pdims.push_back(static_cast<int>(Permutation::all(x).size()));
        for_each_tuple(pdims, [&](const std::vector<int>& pi) {
          std::vector<Permutation> taus;
          std::vector<std::pair<int, SparseVec>> ins;
          for (int i = 0; i < n; ++i) {
            taus.push_back(Permutation::from_lex_rank(m[i], pi[i]));
            ins.emplace_back(m[i], O.act(taus.back(), b[1 + i]));
          }
          SparseVec lhs = O.gamma(n, SparseVec::unit(b[0]), ins);
          SparseVec rhs = O.act(sum(taus), base);
          ++r.checked;
          if (!(lhs == rhs)) r.fail("operad.equiv.sum", tuple_str(ar, b) + " taus=" + join_ints(pi));
        });
      });
    });
}

void check_units(const Operad& O, AxiomReport& r) {
  if (O.cap() < 1) return;
  for (int n = 0; n <= O.cap(); ++n)
    for (int b = 0; b < O.dim(n); ++b) {
      std::vector<std::pair<int, SparseVec>> ins(n, {1, O.unit()});
      ++r.checked;
      if (!(O.gamma(n, SparseVec::unit(b), ins) == SparseVec::unit(b)))
        r.fail("operad.unit.right", "n=" + std::to_string(n) + " basis " + std::to_string(b));
      ++r.checked;
      if (!(O.gamma(1, O.unit(), {{n, SparseVec::unit(b)}}) == SparseVec::unit(b)))
        r.fail("operad.unit.left", "n=" + std::to_string(n) + " basis " + std::to_string(b));
    }
}

// ---------------------------------------------------------------- monomial path
// When every γ value and every action value is 0 or ±(basis vector), the same
// diagrams are evaluated on integer tables instead of rational vectors.

struct Mono {
  int idx = -1;  // -1 encodes zero
  int sgn = 0;
};

bool to_mono(const SparseVec& v, Mono& out) {
  if (v.empty()) {
    out = Mono{};
    return true;
  }
  if (v.size() != 1) return false;
  const Rational& c = v.entries()[0].second;
  if (c == 1) out = Mono{v.entries()[0].first, 1};
  else if (c == -1) out = Mono{v.entries()[0].first, -1};
  else return false;
  return true;
}

class MonoOperad {
 public:
  explicit MonoOperad(const Operad& O) : O_(O) {}

  const std::vector<Mono>* table(const std::vector<int>& ar) {
    auto it = tables_.find(ar);
    if (it != tables_.end()) return &it->second;
    const auto& t = O_.gamma_table(ar);
    std::vector<Mono> mt(t.size());
    for (size_t k = 0; k < t.size(); ++k)
      if (!to_mono(t[k], mt[k])) return nullptr;
    return &tables_.emplace(ar, std::move(mt)).first->second;
  }

  const std::vector<Mono>* act(const Permutation& s) {
    auto it = acts_.find(s.images());
    if (it != acts_.end()) return &it->second;
    int n = s.size();
    std::vector<Mono> mt(O_.dim(n));
    for (int b = 0; b < O_.dim(n); ++b)
      if (!to_mono(O_.act(s, b), mt[b])) return nullptr;
    return &acts_.emplace(s.images(), std::move(mt)).first->second;
  }

  bool applicable() {
    for (auto& ar : O_.gamma_tuples())
      if (!table(ar)) return false;
    for (int n = 2; n <= O_.cap(); ++n)
      for (int i = 0; i + 1 < n; ++i)
        if (!act(Permutation::transposition(n, i))) return false;
    return true;
  }

  const Operad& O_;

 private:
  std::map<std::vector<int>, std::vector<Mono>> tables_;
  std::map<std::vector<int>, std::vector<Mono>> acts_;
};

long long product(const std::vector<int>& dims) {
  long long p = 1;
  for (int d : dims) p *= d;
  return p;
}

void mono_assoc_shape(MonoOperad& F, int n, const std::vector<int>& m, const std::vector<int>& l,
                      AxiomReport& r) {
  const Operad& O = F.O_;
  int M = static_cast<int>(l.size());
  std::vector<int> ar_outer{n};
  ar_outer.insert(ar_outer.end(), m.begin(), m.end());
  std::vector<int> outer_dims{O.dim(n)};
  for (int x : m) outer_dims.push_back(O.dim(x));
  std::vector<int> leaf_dims;
  for (int x : l) leaf_dims.push_back(O.dim(x));
  if (product(outer_dims) == 0 || product(leaf_dims) == 0) return;

  const auto& T0 = *F.table(ar_outer);
  std::vector<int> ar_down{M};
  ar_down.insert(ar_down.end(), l.begin(), l.end());
  const auto& TD = *F.table(ar_down);
  long long total_leaf = product(leaf_dims);

  std::vector<const std::vector<Mono>*> Ti(n);
  std::vector<int> pgc(n), L(n);
  std::vector<std::vector<long long>> leafdeg(n);
  std::vector<int> right_dims{O.dim(n)};
  int off = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> ar_i{m[i]}, dims;
    L[i] = 0;
    for (int j = 0; j < m[i]; ++j) {
      ar_i.push_back(l[off + j]);
      dims.push_back(O.dim(l[off + j]));
      L[i] += l[off + j];
    }
    Ti[i] = F.table(ar_i);
    pgc[i] = static_cast<int>(product(dims));
    leafdeg[i].assign(pgc[i], 0);
    for (int k = 0; k < pgc[i]; ++k) {
      int rem = k;
      long long d = 0;
      for (int j = m[i] - 1; j >= 0; --j) {
        d += O.degree(l[off + j], rem % dims[j]);
        rem /= dims[j];
      }
      leafdeg[i][k] = d;
    }
    right_dims.push_back(O.dim(L[i]));
    off += m[i];
  }
  std::vector<int> ar_right{n};
  ar_right.insert(ar_right.end(), L.begin(), L.end());
  const auto& TR = *F.table(ar_right);

  std::vector<std::vector<int>> thetadeg(n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < O.dim(m[i]); ++a) thetadeg[i].push_back(O.degree(m[i], a) & 1);
  std::vector<std::vector<int>> leafpar(n);
  for (int i = 0; i < n; ++i)
    for (long long d : leafdeg[i]) leafpar[i].push_back(static_cast<int>(d & 1));

  std::vector<int> tb(n + 1), k(n);
  long long checked = 0;
  auto eval = [&](const Mono& first) {
    // right path
    Mono right;
    long long ridx = tb[0];
    int rs = 1;
    bool zero = false;
    for (int i = 0; i < n; ++i) {
      const Mono& v = (*Ti[i])[static_cast<size_t>(tb[1 + i]) * pgc[i] + k[i]];
      if (v.idx < 0) {
        zero = true;
        break;
      }
      ridx = ridx * right_dims[1 + i] + v.idx;
      rs *= v.sgn;
    }
    if (!zero) {
      const Mono& t = TR[ridx];
      if (t.idx >= 0) right = Mono{t.idx, t.sgn * rs};
    }
    // down path
    Mono down;
    if (first.idx >= 0) {
      long long leaf = 0;
      int parity = 0, prefix = 0;
      for (int i = 0; i < n; ++i) {
        leaf = leaf * pgc[i] + k[i];
        parity ^= thetadeg[i][tb[1 + i]] & prefix;
        prefix ^= leafpar[i][k[i]];
      }
      const Mono& t = TD[first.idx * total_leaf + leaf];
      if (t.idx >= 0) down = Mono{t.idx, parity ? -t.sgn * first.sgn : t.sgn * first.sgn};
    }
    ++checked;
    if (right.idx != down.idx || (right.idx >= 0 && right.sgn != down.sgn)) {
      std::vector<int> ar = ar_outer;
      ar.push_back(-1);
      ar.insert(ar.end(), l.begin(), l.end());
      std::vector<int> b = tb;
      b.push_back(-1);
      b.insert(b.end(), k.begin(), k.end());
      r.fail("operad.assoc", tuple_str(ar, b));
    }
  };

  // Tuples where some inner composite vanishes and the down composite
  // vanishes are zero on both paths and are skipped.
  // pass B: every inner composite nonzero
  std::vector<std::vector<std::pair<int, int>>> nz(n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < O.dim(m[i]); ++a)
      for (int kk = 0; kk < pgc[i]; ++kk)
        if ((*Ti[i])[static_cast<size_t>(a) * pgc[i] + kk].idx >= 0) nz[i].emplace_back(a, kk);
  std::vector<int> nz_dims{O.dim(n)};
  for (int i = 0; i < n; ++i) nz_dims.push_back(static_cast<int>(nz[i].size()));
  for_each_tuple(nz_dims, [&](const std::vector<int>& t) {
    tb[0] = t[0];
    for (int i = 0; i < n; ++i) {
      tb[1 + i] = nz[i][t[1 + i]].first;
      k[i] = nz[i][t[1 + i]].second;
    }
    eval(T0[encode(tb, outer_dims, 0, tb.size())]);
  });
  // pass A: outer and down composites nonzero, some inner composite zero
  std::map<int, std::vector<long long>> down_rows;
  for_each_tuple(outer_dims, [&](const std::vector<int>& t) {
    const Mono& first = T0[encode(t, outer_dims, 0, t.size())];
    if (first.idx < 0) return;
    auto it = down_rows.find(first.idx);
    if (it == down_rows.end()) {
      std::vector<long long> row;
      for (long long leaf = 0; leaf < total_leaf; ++leaf)
        if (TD[first.idx * total_leaf + leaf].idx >= 0) row.push_back(leaf);
      it = down_rows.emplace(first.idx, std::move(row)).first;
    }
    tb = t;
    for (long long leaf : it->second) {
      long long rem = leaf;
      bool all_inner = true;
      for (int i = n - 1; i >= 0; --i) {
        k[i] = static_cast<int>(rem % pgc[i]);
        rem /= pgc[i];
        if ((*Ti[i])[static_cast<size_t>(tb[1 + i]) * pgc[i] + k[i]].idx < 0) all_inner = false;
      }
      if (!all_inner) eval(first);
    }
  });
  r.checked += checked;
}

void mono_equivariance(MonoOperad& F, AxiomReport& r) {
  const Operad& O = F.O_;
  int N = O.cap();
  for (int n = 0; n <= N; ++n)
    for_each_composition(n, N, [&](const std::vector<int>& m) {
      std::vector<int> dims{O.dim(n)};
      for (int x : m) dims.push_back(O.dim(x));
      if (product(dims) == 0) return;
      std::vector<int> ar{n};
      ar.insert(ar.end(), m.begin(), m.end());
      const auto& T0 = *F.table(ar);
      int M = 0;
      for (int x : m) M += x;
      for (auto& s : Permutation::all(n)) {
        std::vector<int> msig(n), ar_s{n}, dims_s{O.dim(n)};
        for (int p = 0; p < n; ++p) {
          msig[p] = m[s(p)];
          ar_s.push_back(msig[p]);
          dims_s.push_back(O.dim(msig[p]));
        }
        const auto& Ts = *F.table(ar_s);
        const auto& acts = *F.act(s);
        const auto& actb = *F.act(block_permutation(s, msig));
        std::vector<int> degs(n), tsig(n + 1);
        for_each_tuple(dims, [&](const std::vector<int>& tb) {
          Mono lhs, rhs;
          const Mono& a = acts[tb[0]];
          if (a.idx >= 0) {
            tsig[0] = a.idx;
            for (int p = 0; p < n; ++p) {
              tsig[1 + p] = tb[1 + s(p)];
              degs[p] = O.degree(m[p], tb[1 + p]);
            }
            const Mono& v = Ts[encode(tsig, dims_s, 0, tsig.size())];
            if (v.idx >= 0) lhs = Mono{v.idx, v.sgn * a.sgn * koszul_sign(s, degs)};
          }
          const Mono& base = T0[encode(tb, dims, 0, tb.size())];
          if (base.idx >= 0) {
            const Mono& w = actb[base.idx];
            if (w.idx >= 0) rhs = Mono{w.idx, w.sgn * base.sgn};
          }
          ++r.checked;
          if (lhs.idx != rhs.idx || (lhs.idx >= 0 && lhs.sgn != rhs.sgn))
            r.fail("operad.equiv.block", tuple_str(ar, tb) + " sigma=" + s.to_string());
        });
      }
      // sum diagram
      std::vector<int> pdims;
      for (int x : m) pdims.push_back(static_cast<int>(factorial(x)));
      for_each_tuple(pdims, [&](const std::vector<int>& pi) {
        std::vector<Permutation> taus;
        std::vector<const std::vector<Mono>*> at;
        for (int i = 0; i < n; ++i) {
          taus.push_back(Permutation::from_lex_rank(m[i], pi[i]));
          at.push_back(F.act(taus.back()));
        }
        const auto& asum = *F.act(sum(taus));
        std::vector<int> tt(n + 1);
        for_each_tuple(dims, [&](const std::vector<int>& tb) {
          Mono lhs, rhs;
          tt[0] = tb[0];
          int sg = 1;
          bool zero = false;
          for (int i = 0; i < n; ++i) {
            const Mono& v = (*at[i])[tb[1 + i]];
            if (v.idx < 0) zero = true;
            tt[1 + i] = v.idx;
            sg *= v.sgn;
          }
          if (!zero) {
            const Mono& v = T0[encode(tt, dims, 0, tt.size())];
            if (v.idx >= 0) lhs = Mono{v.idx, v.sgn * sg};
          }
          const Mono& base = T0[encode(tb, dims, 0, tb.size())];
          if (base.idx >= 0) {
            const Mono& w = asum[base.idx];
            if (w.idx >= 0) rhs = Mono{w.idx, w.sgn * base.sgn};
          }
          ++r.checked;
          if (lhs.idx != rhs.idx || (lhs.idx >= 0 && lhs.sgn != rhs.sgn))
            r.fail("operad.equiv.sum", tuple_str(ar, tb) + " taus=" + join_ints(pi));
        });
      });
      (void)M;
    });
}

}  // namespace

AxiomReport check_operad(const Operad& O) {
  AxiomReport r;
  check_smodule(O, r);
  check_gamma_chain(O, r);
  check_units(O, r);
  MonoOperad F(O);
  if (F.applicable()) {
    mono_equivariance(F, r);
    int N = O.cap();
    for (int n = 0; n <= N; ++n)
      for_each_composition(n, N, [&](const std::vector<int>& m) {
        int M = 0;
        for (int x : m) M += x;
        for_each_composition(M, N, [&](const std::vector<int>& l) { mono_assoc_shape(F, n, m, l, r); });
      });
  } else {
    check_equivariance(O, r);
    check_assoc(O, r);
  }
  return r;
}

}  // namespace opalg
