#include <functional>

#include "opalg/algebra.hpp"
#include "opalg/errors.hpp"
#include "detail.hpp"

namespace opalg {

namespace {

using detail::for_each_input;

// Instances needing data beyond the caps are counted as skipped.
void for_each_guarded(AxiomReport& r, const GradedSpace& space, int n, int max_weight,
                      const std::function<void(const std::vector<int>&)>& f) {
  for_each_input(space, n, max_weight, [&](const std::vector<int>& t) {
    try {
      f(t);
    } catch (const TruncationExceeded&) {
      ++r.skipped;
    }
  });
}

std::string tuple_text(int n, int theta, const std::vector<int>& in) {
  return "n=" + std::to_string(n) + " theta=" + std::to_string(theta) + " inputs=(" + join_ints(in) + ")";
}

int degree_sum(const GradedSpace& s, const std::vector<int>& in, size_t from, size_t to) {
  int d = 0;
  for (size_t i = from; i < to; ++i) d += s.degree(in[i]);
  return d;
}

// μ(θ; z) written with the arguments in z as given.
using Eval = std::function<SparseVec(int n, const SparseVec& theta, const std::vector<SparseVec>& in)>;

}  // namespace

AxiomReport check_algebra(const OperadAlgebra& A) {
  AxiomReport r;
  const Operad& O = A.operad();
  const GradedSpace& S = *A.space();
  int W = S.max_weight();
  int cap = A.mult_cap();
  const GradedMap& dA = A.carrier().d();

  for (int n = 0; n <= cap; ++n)
    for (int th = 0; th < O.dim(n); ++th)
      for_each_guarded(r, S, n, W, [&](const std::vector<int>& a) {
        SparseVec v = A.mu(n, th, a);
        int deg = O.degree(n, th) + degree_sum(S, a, 0, n);
        ++r.checked;
        for (auto& [i, c] : v)
          if (S.degree(i) != deg) {
            r.fail("algebra.mu.degree", tuple_text(n, th, a));
            break;
          }
        // chain map
        SparseVec lhs = dA.apply(v);
        VecBuilder rhs;
        std::vector<SparseVec> units;
        for (int x : a) units.push_back(SparseVec::unit(x));
        rhs.add(A.mu(n, O.component(n).d().apply(SparseVec::unit(th)), units));
        int sign_deg = O.degree(n, th);
        for (int i = 0; i < n; ++i) {
          auto in = units;
          in[i] = dA.apply(units[i]);
          rhs.add(A.mu(n, SparseVec::unit(th), in), sign_of_parity(sign_deg));
          sign_deg += S.degree(a[i]);
        }
        ++r.checked;
        if (!(lhs == rhs.build())) r.fail("algebra.mu.chain", tuple_text(n, th, a));
        // equivariance
        if (n >= 2)
          for (auto& s : Permutation::all(n)) {
            if (s.is_identity()) continue;
            std::vector<int> degs;
            std::vector<SparseVec> moved;
            for (int i = 0; i < n; ++i) {
              degs.push_back(S.degree(a[i]));
              moved.push_back(SparseVec::unit(a[s(i)]));
            }
            SparseVec w = A.mu(n, O.act(s, th), moved);
            w *= koszul_sign(s, degs);
            ++r.checked;
            if (!(w == v)) r.fail("algebra.equiv", tuple_text(n, th, a) + " sigma=" + s.to_string());
          }
      });

  // unit
  if (cap >= 1)
    for (int b = 0; b < A.dim(); ++b) {
      ++r.checked;
      if (!(A.mu(1, O.unit(), {SparseVec::unit(b)}) == SparseVec::unit(b)))
        r.fail("algebra.unit", "basis " + std::to_string(b));
    }

  // associativity through partial compositions θ ∘_s θ'
  for (int n = 1; n <= cap; ++n)
    for (int k = 0; n - 1 + k <= cap && k <= cap; ++k)
      for_each_guarded(r, S, n - 1 + k, W, [&](const std::vector<int>& z) {
        for (int s = 0; s < n; ++s) {
          int before = degree_sum(S, z, 0, s);
          std::vector<int> inner(z.begin() + s, z.begin() + s + k);
          for (int th = 0; th < O.dim(n); ++th)
            for (int tp = 0; tp < O.dim(k); ++tp) {
              SparseVec down = A.mu(n - 1 + k, O.partial(n, s, k, th, tp), [&] {
                std::vector<SparseVec> u;
                for (int x : z) u.push_back(SparseVec::unit(x));
                return u;
              }());
              std::vector<SparseVec> outer;
              for (int i = 0; i < s; ++i) outer.push_back(SparseVec::unit(z[i]));
              outer.push_back(A.mu(k, tp, inner));
              for (int i = s + k; i < n - 1 + k; ++i) outer.push_back(SparseVec::unit(z[i]));
              SparseVec right = A.mu(n, SparseVec::unit(th), outer);
              right *= sign_of_parity(O.degree(k, tp) * before);
              ++r.checked;
              if (!(down == right))
                r.fail("algebra.assoc", "n=" + std::to_string(n) + " slot=" + std::to_string(s) + " k=" +
                                            std::to_string(k) + " theta=" + std::to_string(th) + " theta'=" +
                                            std::to_string(tp) + " inputs=(" + join_ints(z) + ")");
            }
        }
      });
  return r;
}

AxiomReport check_module(const AModule& E) {
  AxiomReport r;
  const OperadAlgebra& A = E.algebra();
  const Operad& O = A.operad();
  const GradedSpace& SA = *A.space();
  const GradedSpace& SE = *E.space();
  int W = std::max(SA.max_weight(), SE.max_weight());
  bool weighted = W > 0;
  int cap = E.action_cap();
  const GradedMap& dA = A.carrier().d();
  const GradedMap& dE = E.carrier().d();
  auto units_of = [](const std::vector<int>& v) {
    std::vector<SparseVec> u;
    for (int x : v) u.push_back(SparseVec::unit(x));
    return u;
  };

  for (int k = 0; k <= cap; ++k)
    for (int ph = 0; ph < O.dim(k + 1); ++ph)
      for (int m = 0; m < E.dim(); ++m)
        for_each_guarded(r, SA, k, weighted ? W - SE.weight(m) : -1, [&](const std::vector<int>& c) {
          if (weighted && SE.weight(m) > W) return;
          SparseVec v = E.nu(k, ph, c, m);
          std::string where = "k=" + std::to_string(k) + " phi=" + std::to_string(ph) + " c=(" + join_ints(c) +
                              ") m=" + std::to_string(m);
          int deg = O.degree(k + 1, ph) + degree_sum(SA, c, 0, k) + SE.degree(m);
          ++r.checked;
          for (auto& [i, co] : v)
            if (SE.degree(i) != deg) {
              r.fail("module.nu.degree", where);
              break;
            }
          auto cu = units_of(c);
          SparseVec lhs = dE.apply(v);
          VecBuilder rhs;
          rhs.add(E.nu(k, O.component(k + 1).d().apply(SparseVec::unit(ph)), cu, SparseVec::unit(m)));
          int sd = O.degree(k + 1, ph);
          for (int i = 0; i < k; ++i) {
            auto in = cu;
            in[i] = dA.apply(cu[i]);
            rhs.add(E.nu(k, SparseVec::unit(ph), in, SparseVec::unit(m)), sign_of_parity(sd));
            sd += SA.degree(c[i]);
          }
          rhs.add(E.nu(k, SparseVec::unit(ph), cu, dE.apply(SparseVec::unit(m))), sign_of_parity(sd));
          ++r.checked;
          if (!(lhs == rhs.build())) r.fail("module.nu.chain", where);
          if (k >= 2)
            for (auto& s : Permutation::all(k)) {
              if (s.is_identity()) continue;
              std::vector<int> degs;
              std::vector<SparseVec> moved;
              for (int i = 0; i < k; ++i) {
                degs.push_back(SA.degree(c[i]));
                moved.push_back(SparseVec::unit(c[s(i)]));
              }
              Permutation s1 = sum({s, Permutation::identity(1)});
              SparseVec w = E.nu(k, O.act(s1, ph), moved, SparseVec::unit(m));
              w *= koszul_sign(s, degs);
              ++r.checked;
              if (!(w == v)) r.fail("module.equiv", where + " sigma=" + s.to_string());
            }
        });

  for (int m = 0; m < E.dim(); ++m) {
    ++r.checked;
    if (!(E.nu(0, O.unit(), {}, SparseVec::unit(m)) == SparseVec::unit(m)))
      r.fail("module.unit", "basis " + std::to_string(m));
  }

  // associativity: φ ∘_s θ' at an algebra slot and at the module slot; t is
  // the number of algebra inputs after composing
  for (int t = 0; t <= cap; ++t)
    for (int m = 0; m < E.dim(); ++m) {
      if (weighted && SE.weight(m) > W) continue;
      for_each_guarded(r, SA, t, weighted ? W - SE.weight(m) : -1, [&](const std::vector<int>& z) {
        auto zu = units_of(z);
        for (int k = 1; k <= cap && k <= t + 1; ++k) {
          int jp = t - k + 1;
          if (jp > A.mult_cap()) continue;
          for (int s = 0; s < k; ++s) {
            int before = degree_sum(SA, z, 0, s);
            std::vector<int> inner(z.begin() + s, z.begin() + s + jp);
            for (int ph = 0; ph < O.dim(k + 1); ++ph)
              for (int tp = 0; tp < O.dim(jp); ++tp) {
                SparseVec down = E.nu(t, O.partial(k + 1, s, jp, ph, tp), zu, SparseVec::unit(m));
                std::vector<SparseVec> outer;
                for (int i = 0; i < s; ++i) outer.push_back(zu[i]);
                outer.push_back(A.mu(jp, tp, inner));
                for (int i = s + jp; i < t; ++i) outer.push_back(zu[i]);
                SparseVec right = E.nu(k, SparseVec::unit(ph), outer, SparseVec::unit(m));
                right *= sign_of_parity(O.degree(jp, tp) * before);
                ++r.checked;
                if (!(down == right))
                  r.fail("module.assoc.algebra", "k=" + std::to_string(k) + " slot=" + std::to_string(s) +
                                                     " phi=" + std::to_string(ph) + " theta'=" + std::to_string(tp) +
                                                     " z=(" + join_ints(z) + ") m=" + std::to_string(m));
              }
          }
        }
        // module slot: φ ∈ O(k+1), θ' ∈ O(j+1) acting with z[k..t)
        for (int k = 0; k <= t; ++k) {
          int j = t - k;
          int before = degree_sum(SA, z, 0, k);
          std::vector<int> inner(z.begin() + k, z.end());
          std::vector<SparseVec> outer(zu.begin(), zu.begin() + k);
          for (int ph = 0; ph < O.dim(k + 1); ++ph)
            for (int tp = 0; tp < O.dim(j + 1); ++tp) {
              SparseVec down = E.nu(t, O.partial(k + 1, k, j + 1, ph, tp), zu, SparseVec::unit(m));
              SparseVec right = E.nu(k, SparseVec::unit(ph), outer, E.nu(j, tp, inner, m));
              right *= sign_of_parity(O.degree(j + 1, tp) * before);
              ++r.checked;
              if (!(down == right))
                r.fail("module.assoc.module", "k=" + std::to_string(k) + " j=" + std::to_string(j) + " phi=" +
                                                  std::to_string(ph) + " theta'=" + std::to_string(tp) + " z=(" +
                                                  join_ints(z) + ") m=" + std::to_string(m));
            }
        }
      });
    }
  return r;
}

AxiomReport check_monoid(const Monoid& M) {
  AxiomReport r;
  int n = M.carrier.dim();
  const GradedSpace& S = *M.carrier.space();
  const GradedMap& d = M.carrier.d();
  for (int a = 0; a < n; ++a) {
    ++r.checked;
    if (!(M.product(M.unit, SparseVec::unit(a)) == SparseVec::unit(a))) r.fail("monoid.unit.left", std::to_string(a));
    ++r.checked;
    if (!(M.product(SparseVec::unit(a), M.unit) == SparseVec::unit(a))) r.fail("monoid.unit.right", std::to_string(a));
    for (int b = 0; b < n; ++b) {
      SparseVec ab;
      try {
        ab = M.mul(a, b);
      } catch (const TruncationExceeded&) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      for (auto& [i, c] : ab)
        if (S.degree(i) != S.degree(a) + S.degree(b)) {
          r.fail("monoid.mul.degree", std::to_string(a) + "," + std::to_string(b));
          break;
        }
      try {
        SparseVec lhs = d.apply(ab);
        SparseVec rhs = M.product(d.apply(SparseVec::unit(a)), SparseVec::unit(b));
        rhs.add_scaled(M.product(SparseVec::unit(a), d.apply(SparseVec::unit(b))), sign_of_parity(S.degree(a)));
        ++r.checked;
        if (!(lhs == rhs)) r.fail("monoid.mul.chain", std::to_string(a) + "," + std::to_string(b));
      } catch (const TruncationExceeded&) {
        ++r.skipped;
      }
      for (int c = 0; c < n; ++c) {
        try {
          bool eq = M.product(ab, SparseVec::unit(c)) == M.product(SparseVec::unit(a), M.mul(b, c));
          ++r.checked;
          if (!eq) r.fail("monoid.assoc", std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
        } catch (const TruncationExceeded&) {
          ++r.skipped;
        }
      }
    }
  }
  ++r.checked;
  if (!d.apply(M.unit).empty()) r.fail("monoid.unit.cycle", "");
  return r;
}

}  // namespace opalg
