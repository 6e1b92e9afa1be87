#include "weil/glbounds.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <utility>

#include "weil/error.hpp"

namespace weil {

namespace {

BigInt upow(int b, int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
  return r;
}

BigInt lcm_big(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// l^ceil(log_l s) for s >= 1
BigInt unipotent_order(int l, int s) {
  BigInt p = 1;
  while (p < s) p *= l;
  return p;
}

std::mutex cache_mutex;
std::map<std::pair<int, int>, BigInt> order_cache;

// max over multisets of block degrees summing to n (degrees <= cap) of
// lcm_big(acc, l^d - 1, ...)
void semisimple_search(int l, int n, int cap, const BigInt& acc, BigInt& best) {
  if (n == 0) {
    if (acc > best) best = acc;
    return;
  }
  for (int d = std::min(n, cap); d >= 1; --d)
    semisimple_search(l, n - d, d, lcm_big(acc, upow(l, d) - 1), best);
}

}  // namespace

BigInt max_order(int l, int n) {
  if (n < 1 || n > 16) throw WeilError(ErrorCode::InvalidArgument, "max_order needs 1 <= n <= 16");
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = order_cache.find({l, n});
    if (it != order_cache.end()) return it->second;
  }
  BigInt best = 1;
  for (int s = 0; s <= n; ++s) {
    const BigInt u = s >= 1 ? unipotent_order(l, s) : BigInt(1);
    semisimple_search(l, n - s, n - s, u, best);
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  order_cache[{l, n}] = best;
  return best;
}

BigInt exponent(int l, int n) {
  BigInt e = 1;
  for (int d = 1; d <= n; ++d) e = lcm_big(e, upow(l, d) - 1);
  return unipotent_order(l, n) * e;
}

TorsionBounds torsion_bound_D(int g) {
  if (g < 1) throw WeilError(ErrorCode::InvalidArgument, "g must be positive");
  TorsionBounds t;
  t.g = g;
  t.e2 = max_order(2, 2 * g);
  t.e3 = max_order(3, 2 * g);
  t.exp2 = exponent(2, 2 * g);
  t.exp3 = exponent(3, 2 * g);
  t.D = lcm_big(2 * t.exp2, t.exp3);
  return t;
}

std::vector<BigInt> divisors_up_to(const BigInt& n, const BigInt& limit) {
  std::vector<BigInt> out;
  for (BigInt d = 1; d <= limit && d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace weil
