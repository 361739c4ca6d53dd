#include "opalg/operad.hpp"

#include <numeric>

namespace opalg {

Operad::Operad(std::string name, std::vector<Complex> components, GammaFn gamma, SparseVec unit, ActionFn action)
    : name_(std::move(name)),
      components_(std::move(components)),
      gamma_(std::move(gamma)),
      unit_(std::move(unit)),
      action_(std::move(action)),
      cache_(std::make_shared<Cache>()) {
  if (components_.empty()) throw DimensionError("operad needs at least arity 0");
  if (cap() >= 1) {
    for (auto& [i, c] : unit_)
      if (i >= dim(1) || degree(1, i) != 0) throw DimensionError("unit must lie in degree 0 of O(1)");
  }
  if (!action_) action_ = [](const Permutation&, int b) { return SparseVec::unit(b); };
}

const Complex& Operad::component(int n) const {
  if (n < 0 || n > cap())
    throw TruncationExceeded("operad " + name_, "arity " + std::to_string(n) + " above cap " + std::to_string(cap()));
  return components_[n];
}

SparseVec Operad::act(const Permutation& sigma, int basis) const {
  if (sigma.is_identity()) return SparseVec::unit(basis);
  component(sigma.size());
  std::pair<std::vector<int>, int> key{sigma.images(), basis};
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->actions.find(key);
    if (it != cache_->actions.end()) return it->second;
  }
  SparseVec v = action_(sigma, basis);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->actions.emplace(key, v);
  return v;
}

SparseVec Operad::act(const Permutation& sigma, const SparseVec& v) const {
  if (sigma.is_identity()) return v;
  SparseVec r;
  for (auto& [b, c] : v) r.add_scaled(act(sigma, b), c);
  return r;
}

const GradedMap& Operad::generator(int n, int i) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->generators.find({n, i});
    if (it != cache_->generators.end()) return it->second;
  }
  auto s = Permutation::transposition(n, i);
  std::vector<SparseVec> cols;
  for (int b = 0; b < dim(n); ++b) cols.push_back(action_(s, b));
  GradedMap g(component(n).space(), component(n).space(), 0, std::move(cols));
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->generators.emplace(std::make_pair(n, i), std::move(g)).first->second;
}

SparseVec Operad::gamma(const std::vector<int>& arities, const std::vector<int>& basis) const {
  int n = arities[0];
  if (static_cast<int>(arities.size()) != n + 1 || basis.size() != arities.size())
    throw DimensionError("gamma: tuple length mismatch");
  int m = 0;
  for (int i = 1; i <= n; ++i) m += arities[i];
  component(n);
  component(m);
  return gamma_(arities, basis);
}

SparseVec Operad::gamma(int n, const SparseVec& theta, const std::vector<std::pair<int, SparseVec>>& inputs) const {
  std::vector<int> ar{n}, basis(n + 1);
  for (auto& in : inputs) ar.push_back(in.first);
  VecBuilder out;
  // iterate over the product of supports
  std::vector<size_t> pos(n, 0);
  for (auto& [t, ct] : theta) {
    basis[0] = t;
    bool empty = false;
    for (auto& in : inputs) empty |= in.second.empty();
    if (empty) break;
    std::fill(pos.begin(), pos.end(), 0);
    while (true) {
      Rational c = ct;
      for (int i = 0; i < n; ++i) {
        auto& e = inputs[i].second.entries()[pos[i]];
        basis[i + 1] = e.first;
        c *= e.second;
      }
      out.add(gamma(ar, basis), c);
      int k = n - 1;
      while (k >= 0 && ++pos[k] == inputs[k].second.size()) pos[k--] = 0;
      if (k < 0) break;
    }
  }
  return out.build();
}

const std::vector<SparseVec>& Operad::gamma_table(const std::vector<int>& arities) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->tables.find(arities);
    if (it != cache_->tables.end()) return *it->second;
  }
  auto t = std::make_shared<const std::vector<SparseVec>>(gamma_matrix(arities).columns());
  std::lock_guard<std::mutex> lock(cache_->mu);
  return *cache_->tables.emplace(arities, std::move(t)).first->second;
}

GradedMap Operad::gamma_matrix(const std::vector<int>& arities) const {
  std::vector<SpacePtr> f;
  int m = 0;
  for (size_t i = 0; i < arities.size(); ++i) {
    f.push_back(component(arities[i]).space());
    if (i) m += arities[i];
  }
  SpacePtr S = tensor_space(f);
  std::vector<SparseVec> cols(S->dim());
  std::vector<int> basis(arities.size());
  for (int j = 0; j < S->dim(); ++j) {
    int rem = j;
    for (int k = static_cast<int>(arities.size()) - 1; k >= 0; --k) {
      basis[k] = rem % f[k]->dim();
      rem /= f[k]->dim();
    }
    cols[j] = gamma(arities, basis);
  }
  return GradedMap(S, component(m).space(), 0, std::move(cols));
}

const SparseVec& Operad::partial(int n, int i, int k, int a, int b) const {
  std::vector<int> key{n, i, k, a, b};
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->partials.find(key);
    if (it != cache_->partials.end()) return it->second;
  }
  std::vector<std::pair<int, SparseVec>> inputs;
  for (int s = 0; s < n; ++s) inputs.emplace_back(s == i ? k : 1, s == i ? SparseVec::unit(b) : unit_);
  SparseVec v = gamma(n, SparseVec::unit(a), inputs);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->partials.emplace(key, std::move(v)).first->second;
}

SparseVec Operad::partial(int n, int i, int k, const SparseVec& a, const SparseVec& b) const {
  SparseVec r;
  for (auto& [x, cx] : a)
    for (auto& [y, cy] : b) r.add_scaled(partial(n, i, k, x, y), cx * cy);
  return r;
}

std::vector<std::vector<int>> Operad::gamma_tuples() const {
  std::vector<std::vector<int>> out;
  for (int n = 0; n <= cap(); ++n) {
    std::vector<int> t{n};
    std::function<void(int, int)> rec = [&](int slot, int used) {
      if (slot == n) {
        out.push_back(t);
        return;
      }
      for (int m = 0; used + m <= cap(); ++m) {
        t.push_back(m);
        rec(slot + 1, used + m);
        t.pop_back();
      }
    };
    rec(0, 0);
  }
  return out;
}

Operad Operad::with_gamma_override(const std::vector<int>& arities, const std::vector<int>& basis,
                                   SparseVec value) const {
  GammaFn base = gamma_;
  auto g = [=](const std::vector<int>& a, const std::vector<int>& b) {
    if (a == arities && b == basis) return value;
    return base(a, b);
  };
  return Operad(name_ + "*", components_, g, unit_, action_);
}

// ---------------------------------------------------------------- built-ins

OperadPtr com_operad(int cap) {
  std::vector<Complex> comps;
  for (int n = 0; n <= cap; ++n)
    comps.push_back(Complex::with_zero_differential(make_space({{0, 0, "mu" + std::to_string(n)}})));
  auto g = [](const std::vector<int>&, const std::vector<int>&) { return SparseVec::unit(0); };
  return std::make_shared<const Operad>("Com", comps, g, cap >= 1 ? SparseVec::unit(0) : SparseVec());
}

OperadPtr ass_operad(int cap) {
  std::vector<Complex> comps;
  for (int n = 0; n <= cap; ++n) {
    std::vector<BasisElement> b;
    for (auto& p : Permutation::all(n)) b.push_back({0, 0, "e" + p.to_string()});
    comps.push_back(Complex::with_zero_differential(make_space(std::move(b))));
  }
  auto g = [](const std::vector<int>& ar, const std::vector<int>& basis) {
    int n = ar[0];
    Permutation tau = Permutation::from_lex_rank(n, basis[0]);
    std::vector<int> blocks(ar.begin() + 1, ar.end());
    std::vector<Permutation> rhos;
    for (int i = 0; i < n; ++i) rhos.push_back(Permutation::from_lex_rank(ar[i + 1], basis[i + 1]));
    return SparseVec::unit((block_permutation(tau, blocks) * sum(rhos)).lex_rank());
  };
  auto act = [](const Permutation& s, int b) {
    return SparseVec::unit((Permutation::from_lex_rank(s.size(), b) * s).lex_rank());
  };
  return std::make_shared<const Operad>("Ass", comps, g, cap >= 1 ? SparseVec::unit(0) : SparseVec(), act);
}

namespace {

// Basis bookkeeping for V^{⊗n}: digits and total degree of each basis tuple.
struct PowerTable {
  std::vector<std::vector<int>> digits;
  std::vector<int> degree;
};

}  // namespace

OperadPtr end_operad(const Complex& V, int cap) {
  int dv = V.dim();
  auto tables = std::make_shared<std::vector<PowerTable>>();
  std::vector<Complex> comps;
  for (int n = 0; n <= cap; ++n) {
    std::vector<Complex> f(n, V);
    Complex Vn = n == 0 ? Complex::unit() : tensor(f);
    comps.push_back(inner_hom(Vn, V));
    PowerTable t;
    for (int j = 0; j < Vn.dim(); ++j) {
      std::vector<int> d(n);
      int rem = j, deg = 0;
      for (int k = n - 1; k >= 0; --k) {
        d[k] = rem % dv;
        rem /= dv;
        deg += V.space()->degree(d[k]);
      }
      t.digits.push_back(d);
      t.degree.push_back(deg);
    }
    tables->push_back(std::move(t));
  }
  auto vdeg = [V](int v) { return V.space()->degree(v); };
  auto pow_dim = [tables](int n) { return static_cast<int>((*tables)[n].degree.size()); };

  auto g = [tables, vdeg, pow_dim](const std::vector<int>& ar, const std::vector<int>& basis) {
    int n = ar[0];
    int yn = pow_dim(n);
    int z = basis[0] / yn, y = basis[0] % yn;
    const auto& ydig = (*tables)[n].digits[y];
    std::vector<int> u_all;
    long long parity = 0, prefix = 0;
    for (int i = 0; i < n; ++i) {
      int mi = ar[i + 1], ud = pow_dim(mi);
      int w = basis[i + 1] / ud, u = basis[i + 1] % ud;
      if (w != ydig[i]) return SparseVec();
      int udeg = (*tables)[mi].degree[u];
      parity += static_cast<long long>(vdeg(w) - udeg) * prefix;
      prefix += udeg;
      for (int x : (*tables)[mi].digits[u]) u_all.push_back(x);
    }
    int idx = 0;
    for (int x : u_all) idx = idx * (pow_dim(1)) + x;
    int m = static_cast<int>(u_all.size());
    return SparseVec::unit(z * pow_dim(m) + idx, sign_of_parity(parity));
  };
  auto act = [tables, vdeg, pow_dim](const Permutation& s, int b) {
    int n = s.size(), yn = pow_dim(n);
    int z = b / yn, y = b % yn;
    const auto& ydig = (*tables)[n].digits[y];
    std::vector<int> yp(n), degs(n);
    for (int q = 0; q < n; ++q) {
      yp[q] = ydig[s(q)];
      degs[q] = vdeg(yp[q]);
    }
    int idx = 0;
    for (int x : yp) idx = idx * pow_dim(1) + x;
    return SparseVec::unit(z * yn + idx, koszul_sign(s.inverse(), degs));
  };
  SparseVec unit;
  if (cap >= 1) {
    VecBuilder u;
    for (int v = 0; v < dv; ++v) u.add(v * dv + v, 1);
    unit = u.build();
  }
  return std::make_shared<const Operad>("End", comps, g, unit, act);
}

}  // namespace opalg
