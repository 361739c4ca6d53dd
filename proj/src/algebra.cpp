#include "opalg/algebra.hpp"

#include "opalg/errors.hpp"

namespace opalg {

OperadAlgebra::OperadAlgebra(OperadPtr O, Complex carrier, MulFn mu, int mult_cap, std::string name)
    : O_(std::move(O)),
      carrier_(std::move(carrier)),
      mu_(std::move(mu)),
      mult_cap_(mult_cap),
      name_(std::move(name)),
      cache_(std::make_shared<Cache>()) {
  if (mult_cap_ > O_->cap()) mult_cap_ = O_->cap();
}

SparseVec OperadAlgebra::mu(int n, int theta, const std::vector<int>& inputs) const {
  if (n > mult_cap_)
    throw TruncationExceeded("algebra " + name_, "multiplication of arity " + std::to_string(n) + " above cap " +
                                                     std::to_string(mult_cap_));
  std::vector<int> key{n, theta};
  key.insert(key.end(), inputs.begin(), inputs.end());
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  SparseVec v = mu_(n, theta, inputs);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->values.emplace(std::move(key), v);
  return v;
}

SparseVec OperadAlgebra::mu(int n, const SparseVec& theta, const std::vector<SparseVec>& inputs) const {
  std::vector<const SparseVec*> vs{&theta};
  for (auto& x : inputs) vs.push_back(&x);
  VecBuilder out;
  for_each_term(vs, [&](const std::vector<int>& idx, const Rational& c) {
    out.add(mu(n, idx[0], std::vector<int>(idx.begin() + 1, idx.end())), c);
  });
  return out.build();
}

OperadAlgebra OperadAlgebra::with_differential(const GradedMap& d) const {
  OperadAlgebra r = *this;
  r.carrier_ = Complex(carrier_.space(), d);
  return r;
}

OperadAlgebra OperadAlgebra::with_mu_override(int n, int theta, const std::vector<int>& inputs, SparseVec value) const {
  OperadAlgebra r = *this;
  auto base = mu_;
  std::vector<int> key = inputs;
  r.mu_ = [base, n, theta, key, value](int n2, int t2, const std::vector<int>& in) {
    if (n2 == n && t2 == theta && in == key) return value;
    return base(n2, t2, in);
  };
  r.cache_ = std::make_shared<Cache>();
  return r;
}

AModule::AModule(AlgebraPtr A, Complex carrier, ActFn nu, int action_cap, std::string name)
    : A_(std::move(A)),
      carrier_(std::move(carrier)),
      nu_(std::move(nu)),
      action_cap_(action_cap),
      name_(std::move(name)),
      cache_(std::make_shared<Cache>()) {
  if (action_cap_ > A_->operad().cap() - 1) action_cap_ = A_->operad().cap() - 1;
}

SparseVec AModule::nu(int k, int phi, const std::vector<int>& c, int m) const {
  if (k > action_cap_)
    throw TruncationExceeded("module " + name_, "action with " + std::to_string(k) + " algebra inputs above cap " +
                                                    std::to_string(action_cap_));
  std::vector<int> key{k, phi, m};
  key.insert(key.end(), c.begin(), c.end());
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  SparseVec v = nu_(k, phi, c, m);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->values.emplace(std::move(key), v);
  return v;
}

SparseVec AModule::nu(int k, const SparseVec& phi, const std::vector<SparseVec>& c, const SparseVec& m) const {
  std::vector<const SparseVec*> vs{&phi};
  for (auto& x : c) vs.push_back(&x);
  vs.push_back(&m);
  VecBuilder out;
  for_each_term(vs, [&](const std::vector<int>& idx, const Rational& coef) {
    out.add(nu(k, idx[0], std::vector<int>(idx.begin() + 1, idx.end() - 1), idx.back()), coef);
  });
  return out.build();
}

AModule AModule::with_differential(const GradedMap& d) const {
  AModule r = *this;
  r.carrier_ = Complex(carrier_.space(), d);
  return r;
}

AModule AModule::with_nu_override(int k, int phi, const std::vector<int>& c, int m, SparseVec value) const {
  AModule r = *this;
  auto base = nu_;
  std::vector<int> key = c;
  r.nu_ = [base, k, phi, key, m, value](int k2, int p2, const std::vector<int>& c2, int m2) {
    if (k2 == k && p2 == phi && c2 == key && m2 == m) return value;
    return base(k2, p2, c2, m2);
  };
  r.cache_ = std::make_shared<Cache>();
  return r;
}

SparseVec Monoid::product(const SparseVec& a, const SparseVec& b) const {
  VecBuilder out;
  for (auto& [i, ci] : a)
    for (auto& [j, cj] : b) out.add(mul(i, j), ci * cj);
  return out.build();
}

}  // namespace opalg
