#pragma once

// Element orders in GL(n, F_l) and the torsion exponent D(g).

#include "weil/polynomial.hpp"

namespace weil {

struct TorsionBounds {
  int g = 0;
  BigInt e2;
  BigInt e3;
  BigInt exp2;
  BigInt exp3;
  BigInt D;
};

/// Largest element order in GL(n, F_l), n <= 16.
BigInt max_order(int l, int n);
/// Exponent of GL(n, F_l).
BigInt exponent(int l, int n);
TorsionBounds torsion_bound_D(int g);

/// Divisors of n in increasing order, only those <= limit.
std::vector<BigInt> divisors_up_to(const BigInt& n, const BigInt& limit);

}  // namespace weil
