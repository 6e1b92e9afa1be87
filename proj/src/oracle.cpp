#include "weil/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "weil/error.hpp"
#include "weil/intmat.hpp"

namespace weil {

EigenbasisModel eigenbasis_model(const EigenvalueSystem& sys, int n) {
  EigenbasisModel model;
  model.n = n;
  for (int i = 0; i < sys.m(); ++i)
    for (int k = 0; k < n * sys.mult()[static_cast<std::size_t>(i)]; ++k) model.slot_root.push_back(i);
  return model;
}

namespace {

bool phase_ok(const EigenvalueSystem& sys, const IntVec& e) {
  double s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += static_cast<double>(e[i]) * sys.angles()[i];
  s /= 2 * M_PI;
  return std::fabs(s - std::round(s)) < 1e-9;
}

bool admissible(const EigenvalueSystem& sys, const IntVec& e) {
  long long s = 0;
  for (long long x : e) s += x;
  if (s % 2 != 0) return false;
  return phase_ok(sys, e) && verify_relation(sys, e, s / 2);
}

// all 0 <= e <= upper with sum e == total
void for_each_bounded(const IntVec& upper, long long total, const std::function<void(const IntVec&)>& visit) {
  IntVec e(upper.size(), 0);
  std::vector<long long> tail(upper.size() + 1, 0);
  for (std::size_t i = upper.size(); i-- > 0;) tail[i] = tail[i + 1] + upper[i];
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long left) {
    if (i == upper.size()) {
      if (left == 0) visit(e);
      return;
    }
    const long long lo = std::max(0LL, left - tail[i + 1]);
    for (long long v = std::min(upper[i], left); v >= lo; --v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
    e[i] = 0;
  };
  rec(0, total);
}

IntVec scaled_mult(const EigenvalueSystem& sys, int n) {
  IntVec u;
  for (int x : sys.mult()) u.push_back(static_cast<long long>(n) * x);
  return u;
}

BigInt weight_of(const IntVec& upper, const IntVec& e) {
  BigInt w = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(upper[i]), static_cast<unsigned long>(e[i]));
    w *= b;
  }
  return w;
}

bool has_admissible_part(const EigenvalueSystem& sys, const IntVec& e, long long lo, long long hi) {
  bool found = false;
  for (long long w = lo; w <= hi && !found; w += 2) {
    for_each_bounded(e, w, [&](const IntVec& f) {
      if (found || !admissible(sys, f)) return;
      IntVec rest = e;
      for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= f[k];
      if (admissible(sys, rest)) found = true;
    });
  }
  return found;
}

}  // namespace

std::vector<IntVec> admissible_fingerprints(const EigenvalueSystem& sys, int n, int d) {
  std::vector<IntVec> out;
  for_each_bounded(scaled_mult(sys, n), 2LL * d, [&](const IntVec& e) {
    if (phase_ok(sys, e) && verify_relation(sys, e, d)) out.push_back(e);
  });
  return out;
}

BigInt tate_space_dim(const EigenvalueSystem& sys, int n, int d) {
  const IntVec upper = scaled_mult(sys, n);
  BigInt total = 0;
  for (const auto& e : admissible_fingerprints(sys, n, d)) total += weight_of(upper, e);
  return total;
}

BigInt wedge_image_dim(const EigenvalueSystem& sys, int n, int d) {
  const IntVec upper = scaled_mult(sys, n);
  BigInt total = 0;
  for (const auto& e : admissible_fingerprints(sys, n, d))
    if (has_admissible_part(sys, e, 2, 2)) total += weight_of(upper, e);
  return total;
}

bool exceptional_oracle(const EigenvalueSystem& sys, int n, int d) {
  return tate_space_dim(sys, n, d) > wedge_image_dim(sys, n, d);
}

bool bounded_generation_oracle(const EigenvalueSystem& sys, int n, int m, long long H) {
  if (2LL * m <= H) return true;
  for (const auto& e : admissible_fingerprints(sys, n, m))
    if (!has_admissible_part(sys, e, 2, H)) return false;
  return true;
}

std::vector<IntVec> exhaustive_admissible(const EigenvalueSystem& sys, const IntVec& upper, int weight_bound,
                                          const std::function<bool(const IntVec&)>& shape) {
  std::vector<IntVec> out;
  for (long long w = 0; w <= weight_bound; w += 2) {
    for_each_bounded(upper, w, [&](const IntVec& e) {
      if (shape && !shape(e)) return;
      if (w == 0 || admissible(sys, e)) out.push_back(e);
    });
  }
  return out;
}

std::vector<IntVec> exhaustive_admissible(const EigenvalueSystem& sys, int n, int weight_bound,
                                          const std::function<bool(const IntVec&)>& shape) {
  return exhaustive_admissible(sys, scaled_mult(sys, n), weight_bound, shape);
}

namespace {

struct NumericRoots {
  std::vector<ComplexInterval> roots;
  mpfr_prec_t prec;
};

// |prod - q^d| tiny relative to q^d
bool numeric_admissible(const NumericRoots& nr, const BigInt& q, const std::vector<int>& slots, int d) {
  ComplexInterval prod = ComplexInterval::one(nr.prec);
  for (int s : slots) prod = prod * nr.roots[static_cast<std::size_t>(s)];
  BigInt qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  const ComplexInterval diff = prod - ComplexInterval::real(qd, nr.prec);
  return diff.log2_sup_abs() < std::log2(qd.get_d()) - 400;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

ExplicitWedge explicit_wedge(const EigenvalueSystem& sys, int n, int d) {
  const EigenbasisModel model = eigenbasis_model(sys, n);
  const int N = static_cast<int>(model.slot_root.size());
  if (N > 12) throw WeilError(ErrorCode::InvalidArgument, "explicit mode needs |B| <= 12");
  NumericRoots nr{{}, 512};
  const auto boxes = sys.enclosures(512);
  for (int s : model.slot_root) nr.roots.push_back((*boxes)[static_cast<std::size_t>(s)]);

  auto admissible_subsets = [&](int size, int deg) {
    std::vector<std::vector<int>> out;
    for (auto& c : subsets(N, size))
      if (numeric_admissible(nr, sys.q(), c, deg)) out.push_back(c);
    return out;
  };
  const auto tate = admissible_subsets(2 * d, d);
  std::map<std::vector<int>, std::size_t> column;
  for (std::size_t i = 0; i < tate.size(); ++i) column[tate[i]] = i;

  const auto left = admissible_subsets(2 * d - 2, d - 1);
  const auto right = admissible_subsets(2, 1);
  std::set<BigVec> rows;
  for (const auto& S : left) {
    for (const auto& T : right) {
      if (std::find_first_of(S.begin(), S.end(), T.begin(), T.end()) != S.end()) continue;  // y_S ^ y_T = 0
      std::vector<int> all = S;
      all.insert(all.end(), T.begin(), T.end());
      // sign of the permutation sorting S ++ T
      int inversions = 0;
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
          if (all[a] > all[b]) ++inversions;
      std::sort(all.begin(), all.end());
      auto it = column.find(all);
      if (it == column.end()) throw WeilError(ErrorCode::InconsistentTorsion, "wedge of Tate forms is not Tate");
      BigVec row(tate.size());
      row[it->second] = (inversions % 2 == 0) ? 1 : -1;
      rows.insert(std::move(row));
    }
  }
  BigMat mat(rows.begin(), rows.end());
  return {tate.size(), rational_rank(mat)};
}

}  // namespace weil
