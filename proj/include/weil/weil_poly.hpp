#pragma once

// Weil q-polynomials: parsing of q, exact validation, squarefree structure,
// base change and Newton polygon slopes.

#include <map>
#include <string_view>
#include <vector>

#include "weil/polynomial.hpp"

namespace weil {

struct PrimePower {
  BigInt p;
  int a = 0;
  BigInt q;

  bool operator==(const PrimePower& o) const { return p == o.p && a == o.a; }
};

/// Factors q as p^a; throws NotPrimePower.
PrimePower make_prime_power(const BigInt& q);
/// Accepts "p^a" or a plain integer.
PrimePower parse_prime_power(std::string_view text);
bool is_prime(const BigInt& n);

/// A distinct real root x of h, where P(t) = t^g h(t + q/t). It carries the
/// eigenvalues x/2 +- i sqrt(q - x^2/4); when x = +-2 sqrt(q) these coincide.
struct HRoot {
  DyadicRootInterval interval;  // isolating for the radical of h
  int mult_h = 0;
  int fixed_sign = 0;  // +1 for x = 2 sqrt(q), -1 for x = -2 sqrt(q)
};

struct WeilPolynomial {
  IntPoly coeffs;  // c_0..c_{2g}
  PrimePower q;
  int g = 0;
  IntPoly h;
  IntPoly h_radical;
  std::vector<HRoot> h_roots;  // decreasing x
  IntPoly radical;
  /// Multiplicities of the distinct roots in canonical order: decreasing real
  /// part, then decreasing imaginary part.
  std::vector<int> multiplicities;

  int sqfree_roots() const { return static_cast<int>(multiplicities.size()); }
};

WeilPolynomial validate(const IntPoly& coeffs, const PrimePower& q);
WeilPolynomial validate(const IntPoly& coeffs, const BigInt& q);

struct SquarefreeStructure {
  IntPoly radical;
  std::vector<int> multiplicities;
};
SquarefreeStructure squarefree_structure(const WeilPolynomial& P);

/// Polynomial whose roots are the m-th powers of the roots of P, over q^m.
WeilPolynomial base_change(const WeilPolynomial& P, int m);
/// Coefficients only, no validation.
IntPoly power_polynomial(const IntPoly& monic, int m);

/// Slope -> multiplicity; slopes normalized so that ord(q) = 1.
using SlopeMultiset = std::map<BigRat, int>;
SlopeMultiset newton_polygon(const WeilPolynomial& P);

/// h with P(t) = t^g h(t + q/t), assuming the functional equation holds.
IntPoly real_polynomial(const IntPoly& coeffs, const BigInt& q);

}  // namespace weil
