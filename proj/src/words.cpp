#include "opalg/words.hpp"

#include <algorithm>
#include <deque>

#include "opalg/errors.hpp"

namespace opalg {

WordSpace::WordSpace(AlgebraPtr A, std::vector<WordGroup> fixed, WordOptions opt, std::string name)
    : O_(A->operad_ptr()), var_(A->carrier()), A_(std::move(A)), fixed_(std::move(fixed)), opt_(opt),
      name_(std::move(name)) {
  init();
}

WordSpace::WordSpace(OperadPtr O, Complex variable, std::vector<WordGroup> fixed, WordOptions opt, std::string name)
    : O_(std::move(O)), var_(std::move(variable)), fixed_(std::move(fixed)), opt_(opt), name_(std::move(name)) {
  init();
}

void WordSpace::init() {
  for (size_t g = 0; g < fixed_.size(); ++g)
    for (int r = 0; r < fixed_[g].multiplicity; ++r) fixed_group_of_.push_back(static_cast<int>(g));
  F_ = static_cast<int>(fixed_group_of_.size());
  ncap_ = O_->cap() - F_;
  if (opt_.max_algebra_inputs >= 0) ncap_ = std::min(ncap_, opt_.max_algebra_inputs);
  if (ncap_ < 0)
    throw TruncationExceeded(name_, "arity cap " + std::to_string(O_->cap()) + " below the " + std::to_string(F_) +
                                        " fixed inputs");
  long long off = 0;
  for (int n = 0; n <= ncap_; ++n) {
    Component c;
    c.n = n;
    c.N = n + F_;
    c.offset = off;
    c.radix.assign(n, var_.dim());
    for (int q = 0; q < F_; ++q) c.radix.push_back(fixed_[fixed_group_of_[q]].complex.dim());
    c.inner = 1;
    for (int r : c.radix) c.inner *= r;
    c.size = c.inner * O_->dim(c.N);
    if (off + c.size > 50'000'000)
      throw TruncationExceeded(name_, "ambient word space too large at " + std::to_string(n) + " algebra inputs");
    off += c.size;
    comps_.push_back(c);
  }
  build_coinvariants();
  if (opt_.compose) add_compose_relations();
}

const WordGroup& WordSpace::group_at(int q) const { return fixed_[fixed_group_of_[q]]; }

const Complex& WordSpace::input_complex(int n, int position) const {
  return position < n ? var_ : group_at(position - n).complex;
}

int WordSpace::input_degree(int n, int position, int basis) const {
  return input_complex(n, position).space()->degree(basis);
}

int WordSpace::input_weight(int n, int position, int basis) const {
  return input_complex(n, position).space()->weight(basis);
}

long long WordSpace::encode(int theta, const std::vector<int>& inputs) const {
  int n = static_cast<int>(inputs.size()) - F_;
  const Component& c = comps_[n];
  long long k = theta;
  for (size_t i = 0; i < inputs.size(); ++i) k = k * c.radix[i] + inputs[i];
  return c.offset + k;
}

Word WordSpace::decode(long long idx) const {
  size_t ci = 0;
  while (ci + 1 < comps_.size() && comps_[ci + 1].offset <= idx) ++ci;
  const Component& c = comps_[ci];
  long long rem = idx - c.offset;
  Word w;
  w.inputs.assign(c.radix.size(), 0);
  for (int i = static_cast<int>(c.radix.size()) - 1; i >= 0; --i) {
    w.inputs[i] = static_cast<int>(rem % c.radix[i]);
    rem /= c.radix[i];
  }
  w.theta = static_cast<int>(rem);
  return w;
}

int WordSpace::word_weight(const std::vector<int>& inputs) const {
  int n = static_cast<int>(inputs.size()) - F_;
  int w = 0;
  for (size_t i = 0; i < inputs.size(); ++i) w += input_weight(n, static_cast<int>(i), inputs[i]);
  return w;
}

int WordSpace::word_degree(int theta, const std::vector<int>& inputs) const {
  int n = static_cast<int>(inputs.size()) - F_;
  int d = O_->degree(n + F_, theta);
  for (size_t i = 0; i < inputs.size(); ++i) d += input_degree(n, static_cast<int>(i), inputs[i]);
  return d;
}

void WordSpace::for_each_inputs(int n, const std::function<void(const std::vector<int>&)>& f) const {
  std::vector<int> t(n + F_);
  int W = opt_.weight_cap;
  std::function<void(int, int)> rec = [&](int i, int w) {
    if (i == n + F_) {
      f(t);
      return;
    }
    const GradedSpace& s = *input_complex(n, i).space();
    for (int b = 0; b < s.dim(); ++b) {
      int w2 = w + s.weight(b);
      if (W >= 0 && w2 > W) continue;
      t[i] = b;
      rec(i + 1, w2);
    }
  };
  rec(0, 0);
}

namespace {

// Adjacent transpositions (positions i, i+1) that generate the symmetric
// groups of a word with n algebra inputs.
std::vector<int> symmetric_positions(int n, const std::vector<WordGroup>& fixed) {
  std::vector<int> out;
  for (int i = 0; i + 1 < n; ++i) out.push_back(i);
  int pos = n;
  for (auto& g : fixed) {
    if (g.symmetric)
      for (int r = 0; r + 1 < g.multiplicity; ++r) out.push_back(pos + r);
    pos += g.multiplicity;
  }
  return out;
}

}  // namespace

void WordSpace::build_coinvariants() {
  const Operad& O = *O_;
  for (auto& c : comps_)
    for (int i : symmetric_positions(c.n, fixed_)) {
      auto s = Permutation::transposition(c.N, i);
      for (int t = 0; t < O.dim(c.N) && monomial_; ++t) {
        SparseVec v = O.act(s, t);
        if (v.size() != 1 || (v.entries()[0].second != 1 && v.entries()[0].second != -1)) monomial_ = false;
      }
    }
  long long total = comps_.back().offset + comps_.back().size;
  orbit_.assign(total, -2);
  orbit_sign_.assign(total, 0);
  int W = opt_.weight_cap;

  if (!monomial_) {
    // every admissible word is a coordinate; symmetry enters as relations
    for (long long idx = 0; idx < total; ++idx) {
      Word w = decode(idx);
      if (W >= 0 && word_weight(w.inputs) > W) {
        orbit_[idx] = -1;
        continue;
      }
      orbit_[idx] = static_cast<int>(roots_.size());
      orbit_sign_[idx] = 1;
      roots_.push_back(idx);
    }
    for (size_t r = 0; r < roots_.size(); ++r) {
      Word w = decode(roots_[r]);
      int n = static_cast<int>(w.inputs.size()) - F_;
      for (int i : symmetric_positions(n, fixed_)) {
        auto s = Permutation::transposition(n + F_, i);
        auto x = w.inputs;
        std::swap(x[i], x[i + 1]);
        int kz = sign_of_parity(input_degree(n, i, w.inputs[i]) * input_degree(n, i + 1, w.inputs[i + 1]));
        SparseVec rel = SparseVec::unit(static_cast<int>(r));
        for (auto& [t, c] : O.act(s, w.theta)) rel.add_scaled(SparseVec::unit(orbit_[encode(t, x)]), -c * kz);
        if (!rel.empty()) relations_.push_back(std::move(rel));
      }
    }
    return;
  }

  std::vector<std::pair<long long, int>> members;
  std::deque<long long> queue;
  std::unordered_map<long long, int> seen;
  for (long long idx = 0; idx < total; ++idx) {
    if (orbit_[idx] != -2) continue;
    Word w0 = decode(idx);
    if (W >= 0 && word_weight(w0.inputs) > W) {
      orbit_[idx] = -1;
      continue;
    }
    int n = static_cast<int>(w0.inputs.size()) - F_;
    auto gens = symmetric_positions(n, fixed_);
    seen.clear();
    members.clear();
    queue.clear();
    seen[idx] = 1;
    queue.push_back(idx);
    bool zero = false;
    while (!queue.empty()) {
      long long cur = queue.front();
      queue.pop_front();
      int sg = seen[cur];
      members.emplace_back(cur, sg);
      Word w = decode(cur);
      for (int i : gens) {
        SparseVec a = O.act(Permutation::transposition(n + F_, i), w.theta);
        auto x = w.inputs;
        std::swap(x[i], x[i + 1]);
        int kz = sign_of_parity(input_degree(n, i, w.inputs[i]) * input_degree(n, i + 1, w.inputs[i + 1]));
        int s2 = sg * kz * (a.entries()[0].second > 0 ? 1 : -1);
        long long nb = encode(a.entries()[0].first, x);
        auto it = seen.find(nb);
        if (it == seen.end()) {
          seen[nb] = s2;
          queue.push_back(nb);
        } else if (it->second != s2) {
          zero = true;
        }
      }
    }
    if (zero) {
      for (auto& [m, s] : members) orbit_[m] = -1;
      continue;
    }
    int id = static_cast<int>(roots_.size());
    roots_.push_back(idx);
    for (auto& [m, s] : members) {
      orbit_[m] = id;
      orbit_sign_[m] = static_cast<signed char>(s);
    }
  }
}

SparseVec WordSpace::word_vector(int theta, const std::vector<int>& inputs) const {
  int n = static_cast<int>(inputs.size()) - F_;
  if (opt_.weight_cap >= 0 && word_weight(inputs) > opt_.weight_cap) return {};
  if (n > ncap_ || n < 0)
    throw TruncationExceeded(name_, "word with " + std::to_string(n) + " algebra inputs above cap " +
                                        std::to_string(ncap_));
  long long idx = encode(theta, inputs);
  int o = orbit_[idx];
  if (o < 0) return {};
  return SparseVec::unit(o, orbit_sign_[idx]);
}

SparseVec WordSpace::word_vector(const SparseVec& theta, const std::vector<int>& inputs) const {
  VecBuilder out;
  for (auto& [t, c] : theta) out.add(word_vector(t, inputs), c);
  return out.build();
}

SparseVec WordSpace::act_words(int k, int phi, const std::vector<int>& c, const SparseVec& coinv) const {
  VecBuilder out;
  int cdeg = 0;
  for (int x : c) cdeg += var_.space()->degree(x);
  for (auto& [i, coef] : coinv) {
    Word w = decode(roots_[i]);
    int N = static_cast<int>(w.inputs.size());
    if (k + N > O_->cap())
      throw TruncationExceeded(name_, "action with " + std::to_string(k) + " inputs on a word of arity " +
                                          std::to_string(N));
    SparseVec psi = O_->partial(k + 1, k, N, phi, w.theta);
    std::vector<int> in = c;
    in.insert(in.end(), w.inputs.begin(), w.inputs.end());
    out.add(word_vector(psi, in), coef * sign_of_parity(O_->degree(N, w.theta) * cdeg));
  }
  return out.build();
}

void WordSpace::add_relation(SparseVec coinv) {
  if (!coinv.empty()) relations_.push_back(std::move(coinv));
}

void WordSpace::add_compose_relations() {
  const Operad& O = *O_;
  for (int np = 0; np <= ncap_; ++np)
    for_each_inputs(np, [&](const std::vector<int>& z) {
      // composing into the first algebra slot
      if (A_)
        for (int n = 1; n <= ncap_ && n <= np + 1; ++n) {
          int k = np - n + 1;
          if (k > A_->mult_cap() || k > O.cap()) {
            limited_ = true;
            continue;
          }
          int N = n + F_;
          std::vector<int> y(z.begin(), z.begin() + k);
          std::vector<int> rest(z.begin() + k, z.end());
          for (int tp = 0; tp < O.dim(k); ++tp) {
            SparseVec m = A_->mu(k, tp, y);
            for (int th = 0; th < O.dim(N); ++th) {
              VecBuilder rel;
              std::vector<int> in(1 + rest.size());
              std::copy(rest.begin(), rest.end(), in.begin() + 1);
              for (auto& [e, c] : m) {
                in[0] = e;
                rel.add(word_vector(th, in), c);
              }
              rel.add(word_vector(O.partial(N, 0, k, th, tp), z), -1);
              add_relation(rel.build());
            }
          }
        }
      // composing into a fixed slot carrying a module
      for (int q = 0; q < F_; ++q) {
        const WordGroup& g = group_at(q);
        if (!g.module) continue;
        if (g.symmetric && q > 0 && fixed_group_of_[q - 1] == fixed_group_of_[q]) continue;
        for (int k = 1; k <= np + 1; ++k) {
          int n = np - k + 1;
          int N = n + F_;
          if (k - 1 > g.module->action_cap() || k > O.cap()) {
            limited_ = true;
            continue;
          }
          std::vector<int> yA(z.begin() + n, z.begin() + np);
          int yk = z[np + q];
          int adeg = 0, yadeg = 0, mdeg = 0;
          for (int i = 0; i < n; ++i) adeg += input_degree(np, i, z[i]);
          for (int i = n; i < np; ++i) yadeg += input_degree(np, i, z[i]);
          for (int j = 0; j < q; ++j) mdeg += input_degree(np, np + j, z[np + j]);
          // block order of θ ∘ θ': a, m_<q, y_A, y_k, m_>q; canonical order is z
          std::vector<int> canon_of_block;
          for (int i = 0; i < n; ++i) canon_of_block.push_back(i);
          for (int j = 0; j < q; ++j) canon_of_block.push_back(np + j);
          for (int i = n; i < np; ++i) canon_of_block.push_back(i);
          canon_of_block.push_back(np + q);
          for (int j = q + 1; j < F_; ++j) canon_of_block.push_back(np + j);
          std::vector<int> img(canon_of_block.size());
          for (size_t b = 0; b < canon_of_block.size(); ++b) img[canon_of_block[b]] = static_cast<int>(b);
          Permutation sigma(img);
          std::vector<int> base(z.begin(), z.begin() + n);
          base.insert(base.end(), z.begin() + np, z.end());
          for (int tp = 0; tp < O.dim(k); ++tp) {
            SparseVec nu = g.module->nu(k - 1, tp, yA, yk);
            int tdeg = O.degree(k, tp);
            int eps = sign_of_parity(tdeg * adeg + (tdeg + yadeg) * mdeg);
            for (int th = 0; th < O.dim(N); ++th) {
              VecBuilder rel;
              auto in = base;
              for (auto& [e, c] : nu) {
                in[n + q] = e;
                rel.add(word_vector(th, in), c * eps);
              }
              rel.add(word_vector(O.act(sigma, O.partial(N, n + q, k, th, tp)), z), -1);
              add_relation(rel.build());
            }
          }
        }
      }
    });
}

void WordSpace::finalize() {
  const Operad& O = *O_;
  int nc = coinvariant_dim();
  ech_ = Echelon(nc);
  for (auto& r : relations_) ech_.insert(r);
  final_of_.assign(nc, -1);
  std::vector<BasisElement> basis;
  for (int i : ech_.non_pivots()) {
    final_of_[i] = static_cast<int>(rep_coinv_.size());
    rep_coinv_.push_back(i);
    Word w = decode(roots_[i]);
    max_rep_inputs_ = std::max(max_rep_inputs_, static_cast<int>(w.inputs.size()));
    basis.push_back({word_degree(w.theta, w.inputs), word_weight(w.inputs),
                     name_ + "[" + std::to_string(w.theta) + ";" + join_ints(w.inputs) + "]"});
    reps_.push_back(std::move(w));
  }
  auto space = make_space(std::move(basis));

  // differential of a word in coinvariant coordinates
  auto d_word = [&](long long root) {
    Word w = decode(root);
    int N = static_cast<int>(w.inputs.size());
    int n = N - F_;
    VecBuilder out;
    out.add(word_vector(O.component(N).d().apply(SparseVec::unit(w.theta)), w.inputs));
    int sd = O.degree(N, w.theta);
    for (int i = 0; i < N; ++i) {
      SparseVec dx = input_complex(n, i).d().apply(SparseVec::unit(w.inputs[i]));
      auto in = w.inputs;
      for (auto& [e, c] : dx) {
        in[i] = e;
        out.add(word_vector(w.theta, in), c * sign_of_parity(sd));
      }
      sd += input_degree(n, i, w.inputs[i]);
    }
    return out.build();
  };
  std::vector<SparseVec> d_coinv(nc);
  std::vector<char> have(nc, 0);
  auto d_of = [&](int i) -> const SparseVec& {
    if (!have[i]) {
      d_coinv[i] = d_word(roots_[i]);
      have[i] = 1;
    }
    return d_coinv[i];
  };
  // the relation span has to be closed under the differential
  for (auto& r : relations_) {
    VecBuilder dr;
    for (auto& [i, c] : r) dr.add(d_of(i), c);
    if (!reduce(dr.build()).empty())
      throw IllDefinedQuotient(name_ + ": differential does not preserve the relations");
  }
  std::vector<SparseVec> cols;
  for (int i : rep_coinv_) cols.push_back(reduce(d_of(i)));
  try {
    complex_ = Complex(space, GradedMap(space, space, 1, std::move(cols)));
  } catch (const Error& e) {
    throw IllDefinedQuotient(name_ + ": induced differential: " + e.what());
  }
  relations_.clear();
  relations_.shrink_to_fit();
}

SparseVec WordSpace::reduce(const SparseVec& coinv) const {
  VecBuilder out;
  for (auto& [i, c] : coinv) {
    if (final_of_[i] >= 0) {
      out.add(final_of_[i], c);
      continue;
    }
    SparseVec red;
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->reduced.find(i);
      if (it != cache_->reduced.end()) red = it->second;
    }
    if (red.empty() && !cache_->reduced.count(i)) {
      SparseVec r = ech_.reduce(SparseVec::unit(i));
      std::vector<std::pair<int, Rational>> e;
      for (auto& [j, cj] : r) e.emplace_back(final_of_[j], cj);
      red = SparseVec::from_unsorted(std::move(e));
      std::lock_guard<std::mutex> lock(cache_->mu);
      cache_->reduced.emplace(i, red);
    }
    out.add(red, c);
  }
  return out.build();
}

SparseVec WordSpace::normal_form(int theta, const std::vector<int>& inputs) const {
  return reduce(word_vector(theta, inputs));
}

SparseVec WordSpace::normal_form(const SparseVec& theta, const std::vector<int>& inputs) const {
  return reduce(word_vector(theta, inputs));
}

SparseVec WordSpace::act(int k, int phi, const std::vector<int>& c, int basis) const {
  return reduce(act_words(k, phi, c, SparseVec::unit(rep_coinv_[basis])));
}

SparseVec WordSpace::lift(const SparseVec& v) const {
  VecBuilder out;
  for (auto& [i, c] : v) out.add(rep_coinv_[i], c);
  return out.build();
}

ModulePtr word_module(const WordSpacePtr& W, std::string name) {
  if (!W->algebra_ptr()) throw DimensionError("word_module needs an algebra");
  auto m = std::make_shared<AModule>(
      W->algebra_ptr(), W->complex(),
      [W](int k, int phi, const std::vector<int>& c, int b) { return W->act(k, phi, c, b); },
      W->operad().cap() - W->max_rep_inputs(), std::move(name));
  m->truncation_limited = W->truncation_limited();
  return m;
}

}  // namespace opalg
