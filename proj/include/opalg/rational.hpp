#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace opalg {

// mpq_class keeps numerator/denominator coprime with positive denominator
// as long as every value is canonicalized on construction from text.
using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline int koszul(long long a, long long b) { return ((a * b) % 2 == 0) ? 1 : -1; }
inline int sign_of_parity(long long p) { return (p % 2 == 0) ? 1 : -1; }

}  // namespace opalg
