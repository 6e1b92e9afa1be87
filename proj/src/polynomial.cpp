#include "weil/polynomial.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace weil {

int degree(const IntPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (sgn(p[i]) != 0) return i;
  return -1;
}

int degree(const RatPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (sgn(p[i]) != 0) return i;
  return -1;
}

void trim(IntPoly& p) { p.resize(static_cast<std::size_t>(degree(p) + 1)); }
void trim(RatPoly& p) { p.resize(static_cast<std::size_t>(degree(p) + 1)); }

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
  trim(d);
  return d;
}

RatPoly to_rat(const IntPoly& p) {
  RatPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i];
  return r;
}

IntPoly primitive_part(const RatPoly& p) {
  RatPoly q = p;
  trim(q);
  if (q.empty()) return {};
  BigInt den = 1;
  for (const auto& c : q) den = lcm(den, BigInt(c.get_den()));
  IntPoly r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    BigRat v = q[i] * den;
    r[i] = v.get_num();
  }
  return primitive_part(r);
}

IntPoly primitive_part(const IntPoly& p) {
  IntPoly r = p;
  trim(r);
  BigInt content = 0;
  for (const auto& c : r) content = gcd(content, c);
  if (content > 1)
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return r;
}

RatDivision divide(const RatPoly& a, const RatPoly& b) {
  RatPoly rem = a;
  trim(rem);
  RatPoly den = b;
  trim(den);
  if (den.empty()) throw std::domain_error("polynomial division by zero");
  const int db = degree(den);
  RatPoly quo(std::max<int>(0, degree(rem) - db + 1));
  while (degree(rem) >= db) {
    const int dr = degree(rem);
    BigRat c = rem[dr] / den[db];
    quo[dr - db] = c;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= c * den[i];
    rem[dr] = 0;
    trim(rem);
  }
  trim(quo);
  return {quo, rem};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    RatPoly r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return x;
  BigRat lead = x.back();
  for (auto& c : x) c /= lead;
  return x;
}

bool divides(const IntPoly& d, const IntPoly& p) {
  return divide(to_rat(p), to_rat(d)).remainder.empty();
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  auto [quo, rem] = divide(to_rat(a), to_rat(b));
  if (!rem.empty()) throw std::domain_error("inexact polynomial quotient");
  IntPoly r(quo.size());
  for (std::size_t i = 0; i < quo.size(); ++i) {
    if (quo[i].get_den() != 1) throw std::domain_error("non-integral polynomial quotient");
    r[i] = quo[i].get_num();
  }
  return r;
}

IntPoly squarefree_part(const IntPoly& p) {
  RatPoly pr = to_rat(p);
  RatPoly g = gcd(pr, to_rat(derivative(p)));
  return primitive_part(divide(pr, g).quotient);
}

std::vector<YunFactor> yun_decomposition(const IntPoly& p) {
  auto rat_derivative = [](const RatPoly& x) {
    RatPoly d(x.size() > 1 ? x.size() - 1 : 0);
    for (std::size_t i = 1; i < x.size(); ++i) d[i - 1] = x[i] * static_cast<unsigned long>(i);
    trim(d);
    return d;
  };
  auto rat_sub = [](const RatPoly& x, const RatPoly& y) {
    RatPoly r(std::max(x.size(), y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) r[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
    trim(r);
    return r;
  };

  std::vector<YunFactor> out;
  RatPoly f = to_rat(p);
  trim(f);
  if (degree(f) < 1) return out;
  const RatPoly fp = rat_derivative(f);
  const RatPoly a = gcd(f, fp);
  RatPoly b = divide(f, a).quotient;
  RatPoly d = rat_sub(divide(fp, a).quotient, rat_derivative(b));
  for (int k = 1; degree(b) >= 1; ++k) {
    RatPoly ak = gcd(b, d);
    if (degree(ak) >= 1) out.push_back({primitive_part(ak), k});
    b = divide(b, ak).quotient;
    d = rat_sub(divide(d, ak).quotient, rat_derivative(b));
  }
  return out;
}

BigInt evaluate(const IntPoly& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at_dyadic(const IntPoly& p, const BigInt& num, std::uint64_t shift) {
  const int n = degree(p);
  if (n < 0) return 0;
  // 2^(shift*n) p(num/2^shift) = sum c_i num^i 2^(shift (n-i))
  BigInt acc = p[n];
  BigInt term;
  for (int i = n - 1; i >= 0; --i) {
    acc *= num;
    mpz_mul_2exp(term.get_mpz_t(), p[i].get_mpz_t(), shift * static_cast<std::uint64_t>(n - i));
    acc += term;
  }
  return sgn(acc);
}

int sign_at(const IntPoly& p, const BigRat& x) {
  const int n = degree(p);
  if (n < 0) return 0;
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  BigInt acc = p[n];
  BigInt bpow = 1;
  for (int i = n - 1; i >= 0; --i) {
    bpow *= b;
    acc = acc * a + p[i] * bpow;
  }
  return sgn(acc);
}

SturmSequence::SturmSequence(const IntPoly& squarefree) {
  IntPoly p0 = primitive_part(squarefree);
  if (degree(p0) < 0) throw std::domain_error("Sturm sequence of zero polynomial");
  chain_.push_back(p0);
  IntPoly p1 = primitive_part(derivative(p0));
  if (degree(p1) < 0) return;
  chain_.push_back(p1);
  while (true) {
    const RatPoly r = divide(to_rat(chain_[chain_.size() - 2]), to_rat(chain_.back())).remainder;
    if (r.empty()) break;
    RatPoly neg(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    chain_.push_back(primitive_part(neg));
  }
}

int SturmSequence::variations_at(const BigRat& x) const {
  int prev = 0;
  int changes = 0;
  for (const auto& p : chain_) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int prev = 0;
  int changes = 0;
  for (const auto& p : chain_) {
    const int n = degree(p);
    int s = sgn(p[n]);
    if (!positive && (n % 2 == 1)) s = -s;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmSequence::count(const BigRat& a, const BigRat& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_above(const BigRat& a) const {
  return variations_at(a) - variations_at_infinity(true);
}

int SturmSequence::count_all() const {
  return variations_at_infinity(false) - variations_at_infinity(true);
}

BigRat DyadicRootInterval::lo() const {
  BigRat r(lo_num);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), shift);
  return r;
}

BigRat DyadicRootInterval::hi() const {
  BigRat r(hi_num);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), shift);
  return r;
}

double DyadicRootInterval::log2_width() const {
  if (exact) return -1e300;
  BigInt w = hi_num - lo_num;
  return static_cast<double>(mpz_sizeinbase(w.get_mpz_t(), 2)) - static_cast<double>(shift);
}

namespace {

BigRat dyadic(const BigInt& num, std::uint64_t shift) {
  BigRat r(num);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), shift);
  return r;
}

void bisect(const IntPoly& p, DyadicRootInterval& root) {
  root.lo_num <<= 1;
  root.hi_num <<= 1;
  root.shift += 1;
  BigInt mid = (root.lo_num + root.hi_num) / 2;
  const int s_mid = sign_at_dyadic(p, mid, root.shift);
  if (s_mid == 0) {
    root.lo_num = root.hi_num = mid;
    root.exact = true;
    return;
  }
  const int s_hi = sign_at_dyadic(p, root.hi_num, root.shift);
  if (s_mid == s_hi)
    root.hi_num = mid;
  else
    root.lo_num = mid;
}

void horner_mpfr(const IntPoly& p, mpfr_t out, const mpfr_t x) {
  const int n = degree(p);
  mpfr_set_z(out, p[n].get_mpz_t(), MPFR_RNDN);
  for (int i = n - 1; i >= 0; --i) {
    mpfr_mul(out, out, x, MPFR_RNDN);
    mpfr_add_z(out, out, p[i].get_mpz_t(), MPFR_RNDN);
  }
}

// One Newton step from the midpoint at roughly twice the current accuracy,
// certified by an exact sign change. Returns false when it did not help.
bool newton_step(const IntPoly& p, const IntPoly& dp, DyadicRootInterval& root,
                 std::uint64_t target_bits) {
  const double cur = -root.log2_width();
  if (cur < 24) return false;
  const std::uint64_t want =
      std::min<std::uint64_t>(target_bits + 4, static_cast<std::uint64_t>(2 * cur) - 8);
  if (want <= static_cast<std::uint64_t>(cur) + 2) return false;
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(want + 64 + mpz_sizeinbase(root.hi_num.get_mpz_t(), 2));
  mpfr_t x, fx, dfx;
  mpfr_inits2(prec, x, fx, dfx, static_cast<mpfr_ptr>(nullptr));
  BigInt mid = root.lo_num + root.hi_num;
  mpfr_set_z(x, mid.get_mpz_t(), MPFR_RNDN);
  mpfr_div_2ui(x, x, root.shift + 1, MPFR_RNDN);
  for (int it = 0; it < 2; ++it) {
    horner_mpfr(p, fx, x);
    horner_mpfr(dp, dfx, x);
    if (mpfr_zero_p(dfx)) break;
    mpfr_div(fx, fx, dfx, MPFR_RNDN);
    mpfr_sub(x, x, fx, MPFR_RNDN);
  }
  const std::uint64_t s = want + 2;
  mpfr_mul_2ui(x, x, s, MPFR_RNDN);
  BigInt center;
  mpfr_get_z(center.get_mpz_t(), x, MPFR_RNDN);
  mpfr_clears(x, fx, dfx, static_cast<mpfr_ptr>(nullptr));

  BigInt lo = center - 2, hi = center + 2;
  // containment in the current interval, compared at the finer scale
  BigInt cur_lo = root.lo_num, cur_hi = root.hi_num;
  if (s < root.shift) return false;
  cur_lo <<= (s - root.shift);
  cur_hi <<= (s - root.shift);
  if (lo < cur_lo || hi > cur_hi) return false;
  const int s_lo = sign_at_dyadic(p, lo, s);
  const int s_hi = sign_at_dyadic(p, hi, s);
  if (s_hi == 0) {
    root.lo_num = root.hi_num = hi;
    root.shift = s;
    root.exact = true;
    return true;
  }
  if (s_lo == 0) {
    if (lo == cur_lo) return false;
    root.lo_num = root.hi_num = lo;
    root.shift = s;
    root.exact = true;
    return true;
  }
  if (s_lo == s_hi) return false;
  root.lo_num = lo;
  root.hi_num = hi;
  root.shift = s;
  return true;
}

}  // namespace

std::vector<DyadicRootInterval> isolate_real_roots(const IntPoly& squarefree) {
  IntPoly p = primitive_part(squarefree);
  std::vector<DyadicRootInterval> out;
  const int n = degree(p);
  if (n < 1) return out;
  SturmSequence sturm(p);
  // Cauchy bound 1 + max |c_i / c_n|
  BigInt bound = 0;
  for (int i = 0; i < n; ++i) {
    BigInt a = abs(p[i]);
    BigInt c = (a + abs(p[n]) - 1) / abs(p[n]);
    if (c > bound) bound = c;
  }
  bound += 1;
  BigInt pow2 = 1;
  while (pow2 < bound) pow2 <<= 1;

  struct Pending {
    BigInt lo, hi;
    std::uint64_t shift;
    int roots;
  };
  std::vector<Pending> stack;
  const int total = sturm.count(BigRat(-pow2), BigRat(pow2));
  if (total > 0) stack.push_back({-pow2, pow2, 0, total});
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.roots == 1) {
      DyadicRootInterval r{cur.lo, cur.hi, cur.shift, false};
      if (sign_at_dyadic(p, r.hi_num, r.shift) == 0) {
        r.lo_num = r.hi_num;
        r.exact = true;
      }
      out.push_back(r);
      continue;
    }
    BigInt lo = cur.lo << 1, hi = cur.hi << 1;
    const std::uint64_t s = cur.shift + 1;
    BigInt mid = (lo + hi) / 2;
    const int left = sturm.count(dyadic(lo, s), dyadic(mid, s));
    const int right = cur.roots - left;
    if (right > 0) stack.push_back({mid, hi, s, right});
    if (left > 0) stack.push_back({lo, mid, s, left});
  }
  std::sort(out.begin(), out.end(), [](const DyadicRootInterval& a, const DyadicRootInterval& b) {
    return a.hi() < b.hi();
  });
  return out;
}

void refine_root(const IntPoly& squarefree, DyadicRootInterval& root, std::uint64_t bits) {
  if (root.exact) return;
  const IntPoly dp = derivative(squarefree);
  const double target = -static_cast<double>(bits);
  while (!root.exact && root.log2_width() > target) {
    if (newton_step(squarefree, dp, root, bits)) continue;
    for (int i = 0; i < 8 && !root.exact && root.log2_width() > target; ++i) bisect(squarefree, root);
  }
}

std::string to_string(const IntPoly& p, const char* var) {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    if (sgn(p[i]) == 0) continue;
    BigInt c = p[i];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0) {
      os << "-";
      c = abs(c);
    }
    if (c != 1 || i == 0) os << c.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace weil
