#pragma once

#include <functional>
#include <vector>

#include "opalg/linalg.hpp"

namespace opalg::detail {

// Tuples of basis indices of `space` of length n whose weights sum to at most
// max_weight (no bound when max_weight < 0).
inline void for_each_input(const GradedSpace& space, int n, int max_weight,
                           const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> t(n);
  std::function<void(int, int)> rec = [&](int i, int w) {
    if (i == n) {
      f(t);
      return;
    }
    for (int b = 0; b < space.dim(); ++b) {
      int w2 = w + space.weight(b);
      if (max_weight >= 0 && w2 > max_weight) continue;
      t[i] = b;
      rec(i + 1, w2);
    }
  };
  rec(0, 0);
}

}  // namespace opalg::detail
