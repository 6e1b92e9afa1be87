#pragma once

// Exact univariate polynomial arithmetic over Z and Q, Sturm sequences and
// real root isolation. Coefficient vectors are stored lowest degree first.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace weil {

using BigInt = mpz_class;
using BigRat = mpq_class;
using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<BigRat>;

/// Degree of p, or -1 for the zero polynomial.
int degree(const IntPoly& p);
int degree(const RatPoly& p);
void trim(IntPoly& p);
void trim(RatPoly& p);

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly derivative(const IntPoly& p);
RatPoly to_rat(const IntPoly& p);

/// Scales p to a primitive integer polynomial with the sign of the leading
/// coefficient preserved (multiplication by a positive rational only).
IntPoly primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);

struct RatDivision {
  RatPoly quotient;
  RatPoly remainder;
};
RatDivision divide(const RatPoly& a, const RatPoly& b);
/// Monic gcd over Q.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
bool divides(const IntPoly& d, const IntPoly& p);

/// Exact quotient of integer polynomials; throws if the division is inexact.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p') as a primitive integer polynomial.
IntPoly squarefree_part(const IntPoly& p);

struct YunFactor {
  IntPoly factor;  // squarefree, primitive, pairwise coprime
  int multiplicity;
};
/// Yun's squarefree decomposition of a nonconstant polynomial: p equals
/// (up to a rational constant) the product of factor^multiplicity.
std::vector<YunFactor> yun_decomposition(const IntPoly& p);

BigInt evaluate(const IntPoly& p, const BigInt& x);
/// Sign of p(num / 2^shift).
int sign_at_dyadic(const IntPoly& p, const BigInt& num, std::uint64_t shift);
int sign_at(const IntPoly& p, const BigRat& x);

/// Sturm sequence of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& squarefree);

  /// Number of distinct real roots in (a, b].
  int count(const BigRat& a, const BigRat& b) const;
  /// Number of distinct real roots in (a, +inf).
  int count_above(const BigRat& a) const;
  int count_all() const;

 private:
  int variations_at(const BigRat& x) const;
  int variations_at_infinity(bool positive) const;

  std::vector<IntPoly> chain_;
};

/// A real algebraic number given as the unique root of a squarefree integer
/// polynomial in the dyadic interval (lo, hi] = (lo_num, hi_num] / 2^shift.
/// When exact is set, lo_num == hi_num and the root is that dyadic value.
struct DyadicRootInterval {
  BigInt lo_num;
  BigInt hi_num;
  std::uint64_t shift = 0;
  bool exact = false;

  BigRat lo() const;
  BigRat hi() const;
  /// Upper bound on log2 of the width (very negative when exact).
  double log2_width() const;
};

/// Isolates all real roots of a squarefree polynomial, in increasing order.
std::vector<DyadicRootInterval> isolate_real_roots(const IntPoly& squarefree);

/// Shrinks the interval until its width is at most 2^-bits.
void refine_root(const IntPoly& squarefree, DyadicRootInterval& root,
                 std::uint64_t bits);

std::string to_string(const IntPoly& p, const char* var = "t");

}  // namespace weil
