#pragma once

// Substitution of words into the slots of an operation, rewritten in the
// canonical input order of a target word space.

#include "opalg/words.hpp"

namespace opalg::detail {

// One operation with its inputs. cls orders inputs in the target: 0 for
// algebra inputs, j + 1 for the fixed slot j.
struct Piece {
  int arity = 1;
  int theta = 0;
  std::vector<int> inputs, degs, cls;
};

// A linear combination of pieces filling one slot.
using Slot = std::vector<std::pair<Piece, Rational>>;

// x as the identity operation on one input.
Slot plain_slot(const Operad& O, const GradedSpace& S, const SparseVec& x, int cls);
Slot plain_slot(const Operad& O, const GradedSpace& S, int x, int cls);
// A quotient vector of a word space; fixed slot j of the words goes to fixed_cls[j].
Slot word_slot(const WordSpace& S, const SparseVec& v, const std::vector<int>& fixed_cls);

// γ(θ; slots) in the target. Throws TruncationExceeded above the arity cap.
SparseVec substitute(const Operad& O, int N, int theta, const std::vector<Slot>& slots, const WordSpace& target);

}  // namespace opalg::detail
