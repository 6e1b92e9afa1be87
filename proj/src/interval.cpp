#include "weil/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace weil {

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::point(const BigInt& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_rational(const BigRat& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_bounds(const BigRat& lo, const BigRat& hi, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

void Interval::mag(mpfr_ptr out) const {
  mpfr_t a;
  mpfr_init2(a, precision());
  mpfr_abs(a, lo_, MPFR_RNDU);
  mpfr_abs(out, hi_, MPFR_RNDU);
  if (mpfr_cmp(a, out) > 0) mpfr_set(out, a, MPFR_RNDU);
  mpfr_clear(a);
}

double Interval::mid_double() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

void Interval::mid(mpfr_ptr out) const {
  mpfr_add(out, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(out, out, 1, MPFR_RNDN);
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval r(prec);
  const int sa_lo = mpfr_sgn(a.lo_), sa_hi = mpfr_sgn(a.hi_);
  const int sb_lo = mpfr_sgn(b.lo_), sb_hi = mpfr_sgn(b.hi_);
  if (sa_lo >= 0 && sb_lo >= 0) {
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  if (sa_hi <= 0 && sb_hi <= 0) {
    mpfr_mul(r.lo_, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    return r;
  }
  if (sa_lo >= 0 && sb_hi <= 0) {
    mpfr_mul(r.lo_, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.lo_, b.hi_, MPFR_RNDU);
    return r;
  }
  if (sa_hi <= 0 && sb_lo >= 0) {
    mpfr_mul(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  // b must not contain zero
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval inv(prec);
  if (mpfr_sgn(b.lo_) > 0 || mpfr_sgn(b.hi_) < 0) {
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  } else {
    mpfr_set_inf(inv.lo_, -1);
    mpfr_set_inf(inv.hi_, 1);
  }
  return a * inv;
}

Interval sqr(const Interval& a) {
  Interval r(a.precision());
  if (a.contains_zero()) {
    mpfr_set_zero(r.lo_, 1);
    a.mag(r.hi_);
    mpfr_sqr(r.hi_, r.hi_, MPFR_RNDU);
    return r;
  }
  if (mpfr_sgn(a.lo_) > 0) {
    mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
  } else {
    mpfr_sqr(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
  }
  return r;
}

Interval sqrt_nonneg(const Interval& a) {
  Interval r(a.precision());
  if (mpfr_sgn(a.lo_) <= 0)
    mpfr_set_zero(r.lo_, 1);
  else
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  if (mpfr_sgn(a.hi_) <= 0)
    mpfr_set_zero(r.hi_, 1);
  else
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval acos_clipped(const Interval& a) {
  Interval r(a.precision());
  mpfr_t c;
  mpfr_init2(c, a.precision());
  // acos is decreasing
  mpfr_set(c, a.hi_, MPFR_RNDU);
  if (mpfr_cmp_si(c, 1) > 0) mpfr_set_si(c, 1, MPFR_RNDU);
  if (mpfr_cmp_si(c, -1) < 0) mpfr_set_si(c, -1, MPFR_RNDU);
  mpfr_acos(r.lo_, c, MPFR_RNDD);
  mpfr_set(c, a.lo_, MPFR_RNDD);
  if (mpfr_cmp_si(c, 1) > 0) mpfr_set_si(c, 1, MPFR_RNDD);
  if (mpfr_cmp_si(c, -1) < 0) mpfr_set_si(c, -1, MPFR_RNDD);
  mpfr_acos(r.hi_, c, MPFR_RNDU);
  mpfr_clear(c);
  return r;
}

Interval mul_2exp(const Interval& a, long e) {
  Interval r(a.precision());
  if (e >= 0) {
    mpfr_mul_2ui(r.lo_, a.lo_, static_cast<unsigned long>(e), MPFR_RNDD);
    mpfr_mul_2ui(r.hi_, a.hi_, static_cast<unsigned long>(e), MPFR_RNDU);
  } else {
    mpfr_div_2ui(r.lo_, a.lo_, static_cast<unsigned long>(-e), MPFR_RNDD);
    mpfr_div_2ui(r.hi_, a.hi_, static_cast<unsigned long>(-e), MPFR_RNDU);
  }
  return r;
}

ComplexInterval ComplexInterval::one(mpfr_prec_t prec) {
  return {Interval::point(1, prec), Interval::point(0, prec)};
}

ComplexInterval ComplexInterval::real(const BigInt& v, mpfr_prec_t prec) {
  return {Interval::point(v, prec), Interval::point(0, prec)};
}

void ComplexInterval::sup_abs(mpfr_ptr out) const {
  const mpfr_prec_t prec = std::max(re.precision(), im.precision());
  mpfr_t a, b;
  mpfr_inits2(prec, a, b, static_cast<mpfr_ptr>(nullptr));
  re.mag(a);
  im.mag(b);
  mpfr_sqr(a, a, MPFR_RNDU);
  mpfr_sqr(b, b, MPFR_RNDU);
  mpfr_add(a, a, b, MPFR_RNDU);
  mpfr_sqrt(out, a, MPFR_RNDU);
  mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
}

double ComplexInterval::log2_sup_abs() const {
  mpfr_t s;
  mpfr_init2(s, 64);
  sup_abs(s);
  double r;
  if (mpfr_zero_p(s)) {
    r = -std::numeric_limits<double>::infinity();
  } else {
    mpfr_log2(s, s, MPFR_RNDU);
    r = mpfr_get_d(s, MPFR_RNDU);
  }
  mpfr_clear(s);
  return r;
}

double ComplexInterval::log2_width() const {
  mpfr_t a, b;
  mpfr_inits2(64, a, b, static_cast<mpfr_ptr>(nullptr));
  mpfr_sub(a, re.hi(), re.lo(), MPFR_RNDU);
  mpfr_sub(b, im.hi(), im.lo(), MPFR_RNDU);
  mpfr_max(a, a, b, MPFR_RNDU);
  double r;
  if (mpfr_zero_p(a)) {
    r = -std::numeric_limits<double>::infinity();
  } else {
    mpfr_log2(a, a, MPFR_RNDU);
    r = mpfr_get_d(a, MPFR_RNDU) + 0.5;
  }
  mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
  return r;
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval pow(const ComplexInterval& a, std::uint64_t n) {
  ComplexInterval result = ComplexInterval::one(a.re.precision());
  ComplexInterval base = a;
  bool first = true;
  while (n > 0) {
    if (n & 1U) {
      if (first) {
        result = base;
        first = false;
      } else {
        result = result * base;
      }
    }
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace weil
