#pragma once

// Closed real intervals with MPFR endpoints under directed rounding, and
// rectangular complex intervals built from them. Every operation returns an
// enclosure of the exact result.

#include <mpfr.h>

#include <cstdint>

#include "weil/polynomial.hpp"

namespace weil {

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval point(const BigInt& v, mpfr_prec_t prec);
  static Interval from_rational(const BigRat& v, mpfr_prec_t prec);
  static Interval from_bounds(const BigRat& lo, const BigRat& hi, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

  bool contains_zero() const;
  /// Upper bound of max(|lo|, |hi|).
  void mag(mpfr_ptr out) const;
  double mid_double() const;
  /// Midpoint rounded to nearest at the interval's precision.
  void mid(mpfr_ptr out) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval sqr(const Interval& a);
  /// Square root of the nonnegative part of a.
  friend Interval sqrt_nonneg(const Interval& a);
  /// arccos of a clipped to [-1, 1].
  friend Interval acos_clipped(const Interval& a);
  friend Interval mul_2exp(const Interval& a, long e);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

struct ComplexInterval {
  Interval re;
  Interval im;

  explicit ComplexInterval(mpfr_prec_t prec) : re(prec), im(prec) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexInterval one(mpfr_prec_t prec);
  static ComplexInterval real(const BigInt& v, mpfr_prec_t prec);

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  /// Upper bound on log2 of max |z| over the rectangle (-inf for {0}).
  double log2_sup_abs() const;
  /// Upper bound on max |z| over the rectangle.
  void sup_abs(mpfr_ptr out) const;
  /// Upper bound on log2 of the rectangle's diameter.
  double log2_width() const;
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval pow(const ComplexInterval& a, std::uint64_t n);

}  // namespace weil
