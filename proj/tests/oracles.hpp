#pragma once
// Independent test-side computations. Nothing here calls into the library's
// algorithms; only plain containers and rationals are shared.

#include <vector>

#include "opalg/rational.hpp"

namespace oracle {

using Q = opalg::Rational;
using Matrix = std::vector<std::vector<Q>>;

// Rank by textbook Gaussian elimination on a dense copy.
int rank(Matrix m);
Matrix multiply(const Matrix& a, const Matrix& b);
long long factorial(int n);
long long binomial(int n, int k);
// Number of monomials of total degree d in k commuting variables.
long long monomials(int k, int d);

}  // namespace oracle

namespace oracle {

// dim of M_1 ⊗_A ... ⊗_A M_m for bimodules given by dense action matrices
// left[i][a], right[i][a] (a over a spanning set of A; rows = output).
int tensor_over_dim(const std::vector<int>& dims, const std::vector<std::vector<Matrix>>& left,
                    const std::vector<std::vector<Matrix>>& right);

// dim of the S_2-coinvariants of M ⊗_A M for a commutative A acting by the
// matrices act[a], all in degree 0.
int symmetric_square_over_dim(int dim, const std::vector<Matrix>& act);

}  // namespace oracle
