#include "weil/weil_poly.hpp"

#include <algorithm>
#include <string>

#include "weil/error.hpp"

namespace weil {

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  // BPSW in current GMP; exact below 2^64
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

PrimePower make_prime_power(const BigInt& q) {
  if (q < 2) throw WeilError(ErrorCode::NotPrimePower, q.get_str() + " is not a prime power");
  const int bits = static_cast<int>(mpz_sizeinbase(q.get_mpz_t(), 2));
  for (int a = bits; a >= 1; --a) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(a)) != 0 &&
        is_prime(root))
      return {root, a, q};
  }
  throw WeilError(ErrorCode::NotPrimePower, q.get_str() + " is not a prime power");
}

PrimePower parse_prime_power(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  try {
    const auto caret = s.find('^');
    if (caret == std::string::npos) return make_prime_power(BigInt(s));
    const BigInt p(s.substr(0, caret));
    const int a = std::stoi(s.substr(caret + 1));
    if (a < 1 || !is_prime(p)) throw WeilError(ErrorCode::NotPrimePower, s);
    BigInt q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(a));
    return {p, a, q};
  } catch (const std::invalid_argument&) {
    throw WeilError(ErrorCode::NotPrimePower, "cannot parse '" + s + "'");
  } catch (const std::out_of_range&) {
    throw WeilError(ErrorCode::NotPrimePower, "cannot parse '" + s + "'");
  }
}

namespace {

BigInt power(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

BigInt binom(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// K with K(x^2) = h(x) h(-x)
IntPoly even_part_square(const IntPoly& h) {
  IntPoly hm = h;
  for (std::size_t i = 1; i < hm.size(); i += 2) hm[i] = -hm[i];
  IntPoly prod = mul(h, hm);
  IntPoly k;
  for (std::size_t i = 0; i < prod.size(); i += 2) k.push_back(prod[i]);
  trim(k);
  return k;
}

}  // namespace

IntPoly real_polynomial(const IntPoly& c, const BigInt& q) {
  const int g = degree(c) / 2;
  IntPoly b(static_cast<std::size_t>(g + 1));
  for (int i = g; i >= 0; --i) {
    BigInt v = c[static_cast<std::size_t>(g + i)];
    for (int k = i + 2; k <= g; k += 2) {
      const int j = (k - i) / 2;
      v -= b[static_cast<std::size_t>(k)] * binom(static_cast<unsigned long>(k), static_cast<unsigned long>(j)) *
           power(q, static_cast<unsigned long>(j));
    }
    b[static_cast<std::size_t>(i)] = v;
  }
  return b;
}

WeilPolynomial validate(const IntPoly& coeffs, const BigInt& q) {
  return validate(coeffs, make_prime_power(q));
}

WeilPolynomial validate(const IntPoly& coeffs, const PrimePower& q) {
  if (q.q < 2 || !is_prime(q.p) || power(q.p, static_cast<unsigned long>(q.a)) != q.q)
    throw WeilError(ErrorCode::NotPrimePower, q.q.get_str());
  IntPoly c = coeffs;
  trim(c);
  const int n = degree(c);
  if (n < 0 || c.back() != 1) throw WeilError(ErrorCode::NotMonic, "leading coefficient must be 1");
  if (n % 2 != 0 || n == 0)
    throw WeilError(ErrorCode::OddDegree, "degree " + std::to_string(n) + " is not a positive even number");
  const int g = n / 2;
  for (int i = 0; i <= g; ++i) {
    if (c[static_cast<std::size_t>(i)] !=
        power(q.q, static_cast<unsigned long>(g - i)) * c[static_cast<std::size_t>(2 * g - i)])
      throw WeilError(ErrorCode::FunctionalEquationFails,
                      "c_" + std::to_string(i) + " != q^" + std::to_string(g - i) + " c_" +
                          std::to_string(2 * g - i));
  }

  WeilPolynomial P;
  P.coeffs = c;
  P.q = q;
  P.g = g;
  P.h = real_polynomial(c, q.q);
  P.h_radical = squarefree_part(P.h);
  const SturmSequence sturm(P.h_radical);
  if (sturm.count_all() != degree(P.h_radical))
    throw WeilError(ErrorCode::RootsOffCircle, "a root has nonzero imaginary part in t + q/t");
  const IntPoly krad = squarefree_part(even_part_square(P.h_radical));
  if (SturmSequence(krad).count_above(BigRat(4 * q.q)) != 0)
    throw WeilError(ErrorCode::RootsOffCircle, "a root is real and off the circle");

  auto roots = isolate_real_roots(P.h_radical);
  std::reverse(roots.begin(), roots.end());
  const auto yun = yun_decomposition(P.h);
  std::vector<SturmSequence> factor_sturm;
  for (const auto& f : yun) factor_sturm.emplace_back(f.factor);

  int top_fixed = 0, bottom_fixed = 0;
  BigInt s;
  if (mpz_perfect_square_p(q.q.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), q.q.get_mpz_t());
    if (evaluate(P.h_radical, 2 * s) == 0) top_fixed = 1;
    if (evaluate(P.h_radical, -2 * s) == 0) bottom_fixed = 1;
  } else if (divides(IntPoly{-4 * q.q, 0, 1}, P.h_radical)) {
    top_fixed = bottom_fixed = 1;
  }

  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    HRoot hr;
    hr.interval = roots[idx];
    for (std::size_t f = 0; f < yun.size(); ++f) {
      const bool hit = roots[idx].exact
                           ? sign_at(yun[f].factor, roots[idx].lo()) == 0
                           : factor_sturm[f].count(roots[idx].lo(), roots[idx].hi()) == 1;
      if (hit) {
        hr.mult_h = yun[f].multiplicity;
        break;
      }
    }
    if (hr.mult_h == 0) throw WeilError(ErrorCode::IsolationFailure, "root not found in any squarefree factor");
    if (idx == 0 && top_fixed) hr.fixed_sign = 1;
    if (idx + 1 == roots.size() && bottom_fixed) hr.fixed_sign = -1;
    P.h_roots.push_back(hr);
  }
  for (const auto& hr : P.h_roots) {
    if (hr.fixed_sign != 0) {
      P.multiplicities.push_back(2 * hr.mult_h);
    } else {
      P.multiplicities.push_back(hr.mult_h);
      P.multiplicities.push_back(hr.mult_h);
    }
  }
  P.radical = squarefree_part(c);
  return P;
}

SquarefreeStructure squarefree_structure(const WeilPolynomial& P) {
  return {P.radical, P.multiplicities};
}

IntPoly power_polynomial(const IntPoly& c, int m) {
  const int n = degree(c);
  // a_k: coefficient of t^{n-k}
  std::vector<BigInt> a(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(n - k)];
  const int top = n * m;
  std::vector<BigInt> s(static_cast<std::size_t>(top + 1));
  for (int k = 1; k <= top; ++k) {
    BigInt v = 0;
    for (int i = 1; i < k && i <= n; ++i) v -= a[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
    if (k <= n) v -= k * a[static_cast<std::size_t>(k)];
    s[static_cast<std::size_t>(k)] = v;
  }
  // elementary symmetric functions of the m-th powers
  std::vector<BigInt> e(static_cast<std::size_t>(n + 1));
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt v = 0;
    for (int i = 1; i <= k; ++i) {
      const BigInt term = e[static_cast<std::size_t>(k - i)] * s[static_cast<std::size_t>(i * m)];
      if (i % 2 == 1) v += term; else v -= term;
    }
    e[static_cast<std::size_t>(k)] = v / k;
  }
  IntPoly out(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    const BigInt& ek = e[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(n - k)] = (k % 2 == 0) ? ek : BigInt(-ek);
  }
  return out;
}

WeilPolynomial base_change(const WeilPolynomial& P, int m) {
  if (m < 1) throw WeilError(ErrorCode::InvalidArgument, "base change exponent must be positive");
  if (m == 1) return P;
  PrimePower qm{P.q.p, P.q.a * m, power(P.q.q, static_cast<unsigned long>(m))};
  return validate(power_polynomial(P.coeffs, m), qm);
}

SlopeMultiset newton_polygon(const WeilPolynomial& P) {
  struct Pt {
    long x;
    long y;
  };
  std::vector<Pt> pts;
  const int n = 2 * P.g;
  for (int i = 0; i <= n; ++i) {
    BigInt c = abs(P.coeffs[static_cast<std::size_t>(n - i)]);
    if (c == 0) continue;
    const long v = static_cast<long>(mpz_remove(c.get_mpz_t(), c.get_mpz_t(), P.q.p.get_mpz_t()));
    pts.push_back({i, v});
  }
  std::vector<Pt> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      // drop b unless it lies strictly below segment a-p
      if ((b.y - a.y) * (p.x - a.x) >= (p.y - a.y) * (b.x - a.x))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  SlopeMultiset out;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    BigRat slope(hull[i].y - hull[i - 1].y, (hull[i].x - hull[i - 1].x) * P.q.a);
    slope.canonicalize();
    out[slope] += static_cast<int>(hull[i].x - hull[i - 1].x);
  }
  return out;
}

}  // namespace weil
