#include "weil/cone.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "weil/error.hpp"

namespace weil {

BigMat exponent_lattice(const RelationLattice& lattice, int m) {
  BigMat rows;
  for (const auto& row : lattice.basis) rows.emplace_back(row.begin(), row.begin() + m);
  return hnf(std::move(rows));
}

namespace {

// g is conformal to s: same signs and |g_k| <= |s_k|
bool conformal(const IntVec& g, const IntVec& s) {
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] == 0) continue;
    if ((g[k] > 0) != (s[k] > 0) || s[k] == 0) return false;
    if (std::llabs(g[k]) > std::llabs(s[k])) return false;
  }
  return true;
}

bool sign_compatible(const IntVec& a, const IntVec& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if ((a[k] > 0 && b[k] < 0) || (a[k] < 0 && b[k] > 0)) return false;
  return true;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

IntVec normal_form(IntVec s, const std::vector<IntVec>& G) {
  bool changed = true;
  while (changed && !is_zero(s)) {
    changed = false;
    for (const auto& g : G) {
      if (conformal(g, s)) {
        for (std::size_t k = 0; k < s.size(); ++k) s[k] -= g[k];
        changed = true;
        break;
      }
    }
  }
  return s;
}

bool canonical_less(const IntVec& a, const IntVec& b) {
  const long long wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  return a > b;
}

}  // namespace

std::vector<IntVec> graver_basis(const BigMat& rows, int m) {
  std::vector<IntVec> G;
  for (const auto& row : hnf(rows)) {
    IntVec v = to_small(row);
    IntVec neg = v;
    for (auto& x : neg) x = -x;
    G.push_back(v);
    G.push_back(neg);
  }
  std::deque<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) pending.emplace_back(i, j);
  while (!pending.empty()) {
    const auto [i, j] = pending.front();
    pending.pop_front();
    if (sign_compatible(G[i], G[j])) continue;
    IntVec s(static_cast<std::size_t>(m));
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = G[i][k] + G[j][k];
    IntVec f = normal_form(std::move(s), G);
    if (is_zero(f)) continue;
    G.push_back(f);
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pending.emplace_back(k, G.size() - 1);
  }
  std::vector<IntVec> graver;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (is_zero(G[i])) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < G.size() && minimal; ++j)
      if (j != i && !is_zero(G[j]) && G[j] != G[i] && conformal(G[j], G[i])) minimal = false;
    if (minimal) graver.push_back(G[i]);
  }
  std::sort(graver.begin(), graver.end(), canonical_less);
  graver.erase(std::unique(graver.begin(), graver.end()), graver.end());
  return graver;
}

HilbertBasis hilbert_basis_of_lattice(const BigMat& rows, int m) {
  HilbertBasis hb;
  for (auto& v : graver_basis(rows, m)) {
    if (std::all_of(v.begin(), v.end(), [](long long x) { return x >= 0; })) {
      hb.H = std::max(hb.H, weight(v));
      hb.generators.push_back(std::move(v));
    }
  }
  return hb;
}

HilbertBasis hilbert_basis(const EigenvalueSystem& sys, const RelationLattice& lattice) {
  if (lattice.torsion_order != 1 || is_small(sys))
    throw WeilError(ErrorCode::NotSufficientlyLarge, "the relation group has torsion");
  return hilbert_basis_of_lattice(exponent_lattice(lattice, sys.m()), sys.m());
}

std::vector<IntVec> decompose(const IntVec& e, const HilbertBasis& basis) {
  for (long long x : e)
    if (x < 0) throw WeilError(ErrorCode::NotInSemigroup, "negative entry");
  std::vector<IntVec> chosen;
  std::set<std::pair<IntVec, std::size_t>> dead;
  std::function<bool(IntVec&, std::size_t)> dfs = [&](IntVec& rest, std::size_t from) {
    if (is_zero(rest)) return true;
    if (dead.count({rest, from})) return false;
    for (std::size_t i = from; i < basis.generators.size(); ++i) {
      const IntVec& g = basis.generators[i];
      bool fits = true;
      for (std::size_t k = 0; k < g.size(); ++k)
        if (g[k] > rest[k]) fits = false;
      if (!fits) continue;
      for (std::size_t k = 0; k < g.size(); ++k) rest[k] -= g[k];
      chosen.push_back(g);
      if (dfs(rest, i)) return true;
      chosen.pop_back();
      for (std::size_t k = 0; k < g.size(); ++k) rest[k] += g[k];
    }
    dead.insert({rest, from});
    return false;
  };
  IntVec rest = e;
  if (!dfs(rest, 0)) throw WeilError(ErrorCode::NotInSemigroup, "no decomposition into generators");
  return chosen;
}

std::pair<IntVec, IntVec> split_heavy(const IntVec& e, const HilbertBasis& basis) {
  if (weight(e) <= basis.H) throw WeilError(ErrorCode::WeightNotAboveH, "weight does not exceed H");
  const auto parts = decompose(e, basis);
  IntVec f2 = parts.front();
  IntVec f1 = e;
  for (std::size_t k = 0; k < f1.size(); ++k) f1[k] -= f2[k];
  return {f1, f2};
}

}  // namespace weil
