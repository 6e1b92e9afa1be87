#include "corpus.hpp"

#include <cmath>
#include <random>
#include <set>

#include "weil/error.hpp"
#include "weil/weil_poly.hpp"

namespace weil::testing {

IntPoly high_first(std::initializer_list<long long> c) {
  IntPoly p;
  for (long long x : c) p.insert(p.begin(), BigInt(static_cast<long>(x)));
  return p;
}

IntPoly weil_from_real(const IntPoly& h, const BigInt& q) {
  // t^g h(t + q/t) = sum h_k (t^2 + q)^k t^(g-k)
  const int g = static_cast<int>(h.size()) - 1;
  IntPoly out(static_cast<std::size_t>(2 * g + 1), 0);
  IntPoly pw{1};
  const IntPoly base{q, 0, 1};
  for (int k = 0; k <= g; ++k) {
    for (std::size_t i = 0; i < pw.size(); ++i) out[i + static_cast<std::size_t>(g - k)] += h[static_cast<std::size_t>(k)] * pw[i];
    pw = mul(pw, base);
  }
  return out;
}

namespace {

bool is_weil(const IntPoly& c, const BigInt& q) {
  try {
    validate(c, q);
    return true;
  } catch (const WeilError&) {
    return false;
  }
}

long long isqrt_floor(long long v) {
  long long s = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

IntPoly product_h(std::mt19937_64& rng, int g, long long q) {
  // linear real factors x - a with a^2 <= 4q
  const long long bound = isqrt_floor(4 * q);
  std::uniform_int_distribution<long long> pick(-bound, bound);
  std::uniform_int_distribution<int> coin(0, 3);
  IntPoly h{1};
  long long last = 0;
  for (int i = 0; i < g; ++i) {
    long long a = (i > 0 && coin(rng) == 0) ? last : pick(rng);
    if (coin(rng) == 0) a = 0;
    last = a;
    h = mul(h, IntPoly{BigInt(static_cast<long>(-a)), 1});
  }
  return h;
}

IntPoly random_h(std::mt19937_64& rng, int g, long long q) {
  IntPoly h(static_cast<std::size_t>(g + 1), 0);
  h[static_cast<std::size_t>(g)] = 1;
  for (int k = 0; k < g; ++k) {
    const long long span = static_cast<long long>(std::ceil(std::pow(2.0 * std::sqrt(static_cast<double>(q)), g - k) *
                                                            std::tgamma(g + 1) / (std::tgamma(k + 1) * std::tgamma(g - k + 1))));
    std::uniform_int_distribution<long long> c(-span, span);
    h[static_cast<std::size_t>(k)] = static_cast<long>(c(rng));
  }
  return h;
}

}  // namespace

CorpusEntry four_root_system() { return {high_first({1, 0, 6, 0, 25}), 5, "four-root"}; }

std::vector<CorpusEntry> weil_corpus(std::size_t count, int max_g, std::uint64_t seed) {
  std::vector<CorpusEntry> out{
      four_root_system(),
      {high_first({1, 0, 5}), 5, "t^2+5"},
      {high_first({1, -2, 5}), 5, "t^2-2t+5"},
      {high_first({1, 10, 25}), 25, "(t+5)^2"},
      {high_first({1, 2, 2}), 2, "t^2+2t+2"},
      {high_first({1, 0, 4, 0, 4}), 2, "(t^2+2)^2"},
      {high_first({1, 3, 8}), 8, "t^2+3t+8"},
      // (1+2i)^4 and 5(1+2i)^2: a reduced relation over a large field
      {high_first({1, 44, 1670, 27500, 390625}), 625, "(t^2+14t+625)(t^2+30t+625)"},
      {high_first({1, 12, 30, 1500, 15625}), 125, "(t^2+22t+125)(t^2-10t+125)"},
  };
  if (max_g >= 2) out.push_back({high_first({1, 0, -4, 0, 4}), 2, "(t^2-2)^2"});
  std::erase_if(out, [&](const CorpusEntry& e) { return static_cast<int>(e.coeffs.size()) - 1 > 2 * max_g; });

  const std::vector<long long> qs{2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 125};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_q(0, qs.size() - 1);
  std::uniform_int_distribution<int> pick_g(1, max_g);
  std::uniform_int_distribution<int> coin(0, 9);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : out) seen.insert({to_string(e.coeffs), e.q.get_str()});
  int attempts = 0;
  while (out.size() < count && attempts < 200000) {
    ++attempts;
    const long long q = qs[pick_q(rng)];
    const int g = pick_g(rng);
    const bool products = coin(rng) < 6;
    const IntPoly h = products ? product_h(rng, g, q) : random_h(rng, g, q);
    const IntPoly c = weil_from_real(h, BigInt(static_cast<long>(q)));
    if (!is_weil(c, BigInt(static_cast<long>(q)))) continue;
    if (!seen.insert({to_string(c), std::to_string(q)}).second) continue;
    out.push_back({c, BigInt(static_cast<long>(q)), products ? "product" : "random"});
  }
  return out;
}

std::vector<CorpusEntry> mixed_corpus(std::size_t count, int max_degree, const std::vector<long long>& qs,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_q(0, qs.size() - 1);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<int> pick_g(1, max_degree / 2);
  std::vector<CorpusEntry> out;
  while (out.size() < count) {
    const long long q = qs[pick_q(rng)];
    const BigInt Q(static_cast<long>(q));
    const int g = pick_g(rng);
    const int k = kind(rng);
    IntPoly h = k < 3 ? product_h(rng, g, q) : random_h(rng, g, q);
    IntPoly c = weil_from_real(h, Q);
    std::string origin = k < 3 ? "product" : "random-h";
    if (k == 5 || k == 6) {
      // knock one coefficient
      std::uniform_int_distribution<std::size_t> at(0, c.size() - 2);
      std::uniform_int_distribution<int> delta(0, 1);
      c[at(rng)] += delta(rng) ? 1 : -1;
      origin = "perturbed";
    } else if (k == 7) {
      std::uniform_int_distribution<long long> v(-6, 6);
      const int deg = std::uniform_int_distribution<int>(1, max_degree)(rng);
      c.assign(static_cast<std::size_t>(deg + 1), 0);
      for (auto& x : c) x = static_cast<long>(v(rng));
      c.back() = 1;
      origin = "random-monic";
    } else if (k == 8) {
      c.back() = 2;
      origin = "non-monic";
    } else if (k == 9 && static_cast<int>(c.size()) <= max_degree) {
      // drop to odd degree
      c.pop_back();
      c.back() = 1;
      origin = "odd-degree";
    }
    trim(c);
    if (c.empty()) continue;
    out.push_back({c, Q, origin});
  }
  return out;
}

}  // namespace weil::testing
