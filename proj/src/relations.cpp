#include "weil/relations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "weil/error.hpp"
#include "weil/glbounds.hpp"

namespace weil {

long long weight(const IntVec& e) {
  long long w = 0;
  for (long long x : e) w += std::llabs(x);
  return w;
}

bool has_reduced_shape(const EigenvalueSystem& sys, const IntVec& e) {
  for (long long x : e)
    if (x < 0) return false;
  for (const auto& pr : sys.pairs())
    if (e[static_cast<std::size_t>(pr.plus)] != 0 && e[static_cast<std::size_t>(pr.minus)] != 0) return false;
  for (int f : sys.fixed())
    if (e[static_cast<std::size_t>(f)] > 1) return false;
  return true;
}

bool is_trivial(const EigenvalueSystem& sys, const IntVec& e) {
  for (int i = 0; i < sys.m(); ++i)
    if (e[static_cast<std::size_t>(i)] != e[static_cast<std::size_t>(sys.iota()[static_cast<std::size_t>(i)])]) return false;
  for (int f : sys.fixed())
    if (e[static_cast<std::size_t>(f)] % 2 != 0) return false;
  return true;
}

Classification classify(const EigenvalueSystem& sys, const IntVec& e) {
  if (static_cast<int>(e.size()) != sys.m())
    throw WeilError(ErrorCode::InvalidArgument, "exponent vector has wrong length");
  Classification c;
  c.weight = weight(e);
  long long total = 0;
  for (long long x : e) total += x;
  c.trivial = is_trivial(sys, e);
  if (total % 2 == 0 && verify_relation(sys, e, total / 2)) {
    c.admissible = true;
    c.degree = total / 2;
  }
  c.reduced = c.admissible && *c.degree >= 1 && has_reduced_shape(sys, e);
  return c;
}

bool RelationLattice::contains(const IntVec& e) const {
  long long total = 0;
  for (long long x : e) total += x;
  if (total % 2 != 0) return false;
  BigVec v = to_big(e);
  v.emplace_back(static_cast<long>(-total / 2));
  return in_lattice(basis, v);
}

namespace {

long long round_ll(double x) { return static_cast<long long>(std::llround(x)); }

// (c, k) is a relation iff prod alpha_plus^(2c) = q^(sum c)
bool verify_pair_relation(const EigenvalueSystem& sys, const IntVec& c) {
  IntVec e(static_cast<std::size_t>(sys.m()), 0);
  long long d = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    e[static_cast<std::size_t>(sys.pairs()[j].plus)] = 2 * c[j];
    d += c[j];
  }
  return verify_relation(sys, e, d);
}

double pair_phase(const EigenvalueSystem& sys, const IntVec& c) {
  double s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) s += static_cast<double>(c[j]) * sys.turns()[j];
  return s;
}

BigMat lll_pair_relations(const EigenvalueSystem& sys, int W) {
  const int r = sys.r();
  const BigRat bound(3 * static_cast<long>(W) * W);
  for (unsigned long p = 64; p <= (1UL << 16); p *= 2) {
    const auto prec = static_cast<mpfr_prec_t>(p + 64);
    const auto tau = sys.turn_enclosures(prec);
    BigMat rows(static_cast<std::size_t>(r + 1), BigVec(static_cast<std::size_t>(r + 2)));
    mpfr_t mid;
    mpfr_init2(mid, prec);
    for (int j = 0; j < r; ++j) {
      rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
      tau[static_cast<std::size_t>(j)].mid(mid);
      mpfr_mul_2ui(mid, mid, p, MPFR_RNDN);
      mpfr_get_z(rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(r + 1)].get_mpz_t(), mid, MPFR_RNDN);
    }
    mpfr_clear(mid);
    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 1;
    mpz_ui_pow_ui(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + 1)].get_mpz_t(), 2, p);

    const LllResult red = lll(std::move(rows));
    BigMat found;
    std::size_t t = 0;
    for (; t < red.basis.size(); ++t) {
      const BigVec& b = red.basis[t];
      // anything longer than the certificate bound is left to the certificate
      BigInt norm2 = 0;
      for (int j = 0; j <= r; ++j) norm2 += b[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
      if (norm2 > bound) break;
      IntVec c;
      for (int j = 0; j < r; ++j) c.push_back(b[static_cast<std::size_t>(j)].get_si());
      const long long k = -b[static_cast<std::size_t>(r)].get_si();
      if (std::fabs(pair_phase(sys, c) - static_cast<double>(k)) > 1e-6) break;
      if (!verify_pair_relation(sys, c)) break;
      BigVec row = to_big(c);
      row.emplace_back(static_cast<long>(k));
      found.push_back(row);
    }
    bool certified = true;
    for (std::size_t i = t; i < red.gs_norm2.size(); ++i)
      if (red.gs_norm2[i] <= bound) certified = false;
    if (certified) return found;
  }
  throw WeilError(ErrorCode::PrecisionCapExceeded, "pair relation search did not certify");
}

// every c with |c|_1 <= W and first nonzero entry positive
void exhaustive_pair_relations(const EigenvalueSystem& sys, int W, BigMat& out) {
  const int r = sys.r();
  IntVec c(static_cast<std::size_t>(r), 0);
  BigMat span = hnf(out);
  std::function<void(int, int, bool)> rec = [&](int j, int left, bool started) {
    if (j == r) {
      if (!started) return;
      const double ph = pair_phase(sys, c);
      if (std::fabs(ph - std::round(ph)) > 1e-9) return;
      BigVec row = to_big(c);
      row.emplace_back(static_cast<long>(round_ll(ph)));
      // already implied by relations in hand
      if (in_lattice(span, row)) return;
      if (!verify_pair_relation(sys, c)) return;
      out.push_back(row);
      span = hnf(out);
      return;
    }
    for (int v = started ? -left : 0; v <= left; ++v) {
      c[static_cast<std::size_t>(j)] = v;
      rec(j + 1, left - std::abs(v), started || v != 0);
    }
    c[static_cast<std::size_t>(j)] = 0;
  };
  rec(0, W, false);
}

}  // namespace

RelationLattice discover(const EigenvalueSystem& sys, int W) {
  if (W == 0) W = default_weight_bound(sys.g());
  if (W < 2) throw WeilError(ErrorCode::InvalidArgument, "weight bound must be at least 2");
  const int m = sys.m();
  const int r = sys.r();
  RelationLattice L;
  L.certified_weight = W;

  BigMat K;
  if (r > 0) {
    K = lll_pair_relations(sys, W);
    if (r <= 2) exhaustive_pair_relations(sys, W, K);
    K = hnf(std::move(K));
  }
  L.pair_relations = K;

  // generators of {e : c(e) is a pair relation}, tagged with the obstruction
  // (k + e(-sqrt q) mod 2, sum e mod 2)
  struct Gen {
    IntVec e;
    int chi;
  };
  std::vector<Gen> gens;
  for (const auto& pr : sys.pairs()) {
    IntVec e(static_cast<std::size_t>(m), 0);
    e[static_cast<std::size_t>(pr.plus)] = 1;
    e[static_cast<std::size_t>(pr.minus)] = 1;
    gens.push_back({e, 0});
  }
  for (int f : sys.fixed()) {
    IntVec e(static_cast<std::size_t>(m), 0);
    e[static_cast<std::size_t>(f)] = 1;
    gens.push_back({e, (f == sys.neg_fixed() ? 1 : 0) | 2});
  }
  for (const auto& row : K) {
    IntVec e(static_cast<std::size_t>(m), 0);
    long long s = 0;
    for (int j = 0; j < r; ++j) {
      const long long cj = row[static_cast<std::size_t>(j)].get_si();
      e[static_cast<std::size_t>(sys.pairs()[static_cast<std::size_t>(j)].plus)] = cj;
      s += cj;
    }
    const long long k = row[static_cast<std::size_t>(r)].get_si();
    gens.push_back({e, static_cast<int>((k & 1) | ((s & 1) << 1))});
  }
  auto plus = [](const IntVec& a, const IntVec& b) {
    IntVec c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
  };
  std::vector<IntVec> kernel;
  int rep[4] = {-1, -1, -1, -1};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Gen& gi = gens[i];
    if (gi.chi == 0) {
      kernel.push_back(gi.e);
      continue;
    }
    kernel.push_back(plus(gi.e, gi.e));
    if (rep[gi.chi] < 0)
      rep[gi.chi] = static_cast<int>(i);
    else
      kernel.push_back(plus(gi.e, gens[static_cast<std::size_t>(rep[gi.chi])].e));
  }
  if (rep[1] >= 0 && rep[2] >= 0 && rep[3] >= 0)
    kernel.push_back(plus(plus(gens[static_cast<std::size_t>(rep[1])].e, gens[static_cast<std::size_t>(rep[2])].e),
                          gens[static_cast<std::size_t>(rep[3])].e));

  BigMat rows;
  for (const auto& e : kernel) {
    long long s = 0;
    for (long long x : e) s += x;
    BigVec v = to_big(e);
    v.emplace_back(static_cast<long>(-s / 2));
    rows.push_back(v);
  }
  L.basis = hnf(std::move(rows));
  for (const auto& row : L.basis) {
    IntVec e = to_small(BigVec(row.begin(), row.end() - 1));
    if (!verify_relation(sys, e, -row.back().get_si()))
      throw WeilError(ErrorCode::InconsistentTorsion, "lattice generator fails exact verification");
  }
  IntVec mult(sys.mult().begin(), sys.mult().end());
  if (!L.contains(mult))
    throw WeilError(ErrorCode::InconsistentTorsion, "multiplicity vector missing from relation lattice");
  L.gamma_rank = m + 1 - static_cast<int>(L.basis.size());
  L.torsion_order = torsion_exponent(L.basis, static_cast<std::size_t>(m + 1));
  return L;
}

RankDecision rank_decision(const EigenvalueSystem& sys, const RelationLattice& lattice) {
  if (is_small(sys)) throw WeilError(ErrorCode::SmallFieldError, "field is small for this system");
  RankDecision d;
  d.gamma_rank = lattice.gamma_rank;
  d.threshold = sys.m() / 2;
  d.has_nontrivial = d.has_reduced = d.gamma_rank <= d.threshold;
  return d;
}

RankDecision rank_decision(const EigenvalueSystem& sys, int W) {
  if (is_small(sys)) throw WeilError(ErrorCode::SmallFieldError, "field is small for this system");
  return rank_decision(sys, discover(sys, W));
}

AdmissibleFunction reduce_nontrivial(const EigenvalueSystem& sys, const IntVec& e) {
  const Classification c = classify(sys, e);
  if (!c.admissible || c.trivial) throw WeilError(ErrorCode::NotNontrivial, "input is not a nontrivial admissible function");
  const int m = sys.m();
  IntVec h2(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) h2[static_cast<std::size_t>(i)] = 2 * e[static_cast<std::size_t>(i)];
  for (int f : sys.fixed()) h2[static_cast<std::size_t>(f)] = 0;
  AdmissibleFunction out;
  out.e.assign(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    const long long a = h2[static_cast<std::size_t>(i)];
    const long long b = h2[static_cast<std::size_t>(sys.iota()[static_cast<std::size_t>(i)])];
    if (a > b) out.e[static_cast<std::size_t>(i)] = a - b;
  }
  out.weight = weight(out.e);
  out.degree = out.weight / 2;
  // only odd values on square roots of q made e nontrivial
  if (out.degree < 1) throw WeilError(ErrorCode::SmallFieldError, "nontriviality sits on the square roots of q");
  if (!verify_relation(sys, out.e, out.degree))
    throw WeilError(ErrorCode::InconsistentTorsion, "reduction produced a non-admissible function");
  return out;
}

AdmissibleFunction small_field_reduced(const EigenvalueSystem& sys) {
  const int m = sys.m();
  bool small = false;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto order = ratio_torsion_order(sys, i, j);
      if (!order) continue;
      small = true;
      IntVec e(static_cast<std::size_t>(m), 0);
      const int ii = sys.iota()[static_cast<std::size_t>(i)];
      if (j != ii) {
        e[static_cast<std::size_t>(j)] += *order;
        e[static_cast<std::size_t>(ii)] += *order;
      } else {
        e[static_cast<std::size_t>(i)] = 2 * *order;
      }
      if (!has_reduced_shape(sys, e)) continue;
      AdmissibleFunction f{e, weight(e) / 2, weight(e)};
      if (!verify_relation(sys, f.e, f.degree))
        throw WeilError(ErrorCode::InconsistentTorsion, "torsion ratio does not give a relation");
      return f;
    }
  }
  if (!small) throw WeilError(ErrorCode::NotSmall, "no ratio of distinct roots is a root of unity");
  throw WeilError(ErrorCode::SmallFieldError, "every torsion ratio involves a square root of q");
}

void for_each_reduced_candidate(const EigenvalueSystem& sys, int w, const IntVec& upper,
                                const std::function<void(const IntVec&)>& visit) {
  const int m = sys.m();
  const int r = sys.r();
  const auto& fixed = sys.fixed();
  auto ub = [&](int idx) -> long long {
    return upper.empty() ? w : upper[static_cast<std::size_t>(idx)];
  };
  IntVec e(static_cast<std::size_t>(m), 0);
  for (unsigned mask = 0; mask < (1U << fixed.size()); ++mask) {
    int s = 0;
    double phase = 0;
    bool ok = true;
    for (std::size_t k = 0; k < fixed.size(); ++k) {
      const long long v = (mask >> k) & 1U;
      if (v > ub(fixed[k])) ok = false;
      e[static_cast<std::size_t>(fixed[k])] = v;
      s += static_cast<int>(v);
      if (v && fixed[k] == sys.neg_fixed()) phase += 1;
    }
    if (!ok || s > w) continue;
    std::function<void(int, long long, double)> rec = [&](int j, long long left, double ph) {
      if (j == r) {
        if (left != 0) return;
        const double half = ph / 2;
        if (std::fabs(half - std::round(half)) > 1e-9) return;
        visit(e);
        return;
      }
      const auto& pr = sys.pairs()[static_cast<std::size_t>(j)];
      const double t = sys.turns()[static_cast<std::size_t>(j)];
      const long long hi = std::min(left, ub(pr.plus));
      const long long lo = std::min(left, ub(pr.minus));
      if (j == r - 1) {
        // last pair absorbs the rest
        if (left == 0) {
          rec(j + 1, 0, ph);
        } else {
          if (left <= hi) {
            e[static_cast<std::size_t>(pr.plus)] = left;
            rec(j + 1, 0, ph + static_cast<double>(left) * t);
            e[static_cast<std::size_t>(pr.plus)] = 0;
          }
          if (left <= lo) {
            e[static_cast<std::size_t>(pr.minus)] = left;
            rec(j + 1, 0, ph - static_cast<double>(left) * t);
            e[static_cast<std::size_t>(pr.minus)] = 0;
          }
        }
        return;
      }
      for (long long v = hi; v >= -lo; --v) {
        if (v > 0) e[static_cast<std::size_t>(pr.plus)] = v;
        if (v < 0) e[static_cast<std::size_t>(pr.minus)] = -v;
        rec(j + 1, left - std::llabs(v), ph + static_cast<double>(v) * t);
        e[static_cast<std::size_t>(pr.plus)] = 0;
        e[static_cast<std::size_t>(pr.minus)] = 0;
      }
    };
    rec(0, w - s, phase);
  }
  for (int f : fixed) e[static_cast<std::size_t>(f)] = 0;
}

std::vector<AdmissibleFunction> reduced_functions(const EigenvalueSystem& sys, int cap, const IntVec& upper) {
  std::vector<AdmissibleFunction> out;
  for (int w = 2; w <= cap; w += 2) {
    for_each_reduced_candidate(sys, w, upper, [&](const IntVec& e) {
      if (verify_relation(sys, e, w / 2)) out.push_back({e, w / 2, w});
    });
  }
  return out;
}

std::optional<AdmissibleFunction> minimal_reduced(const EigenvalueSystem& sys, int weight_cap) {
  if (weight_cap < 2) throw WeilError(ErrorCode::InvalidArgument, "weight cap must be at least 2");
  for (int w = 2; w <= weight_cap; w += 2) {
    std::optional<AdmissibleFunction> best;
    for_each_reduced_candidate(sys, w, {}, [&](const IntVec& e) {
      if (best && !(e > best->e)) return;
      if (verify_relation(sys, e, w / 2)) best = AdmissibleFunction{e, w / 2, w};
    });
    if (best) return best;
  }
  return std::nullopt;
}

bool is_sufficiently_large(const EigenvalueSystem& sys, int weight_bound) {
  if (is_small(sys)) return false;
  return discover(sys, weight_bound).torsion_order == 1;
}

LargeSystem ensure_sufficiently_large(const EigenvalueSystem& sys, int weight_bound) {
  const RelationLattice L = discover(sys, weight_bound);
  if (L.torsion_order == 1 && !is_small(sys)) return {sys, 1};
  const TorsionBounds tb = torsion_bound_D(sys.g());
  if (tb.D % L.torsion_order != 0 || !L.torsion_order.fits_sint_p())
    throw WeilError(ErrorCode::InconsistentTorsion,
                    "torsion exponent " + L.torsion_order.get_str() + " does not divide D(g)");
  const int T = static_cast<int>(L.torsion_order.get_si());
  EigenvalueSystem big = build(base_change(sys.poly(), T));
  if (!is_sufficiently_large(big, weight_bound))
    throw WeilError(ErrorCode::InconsistentTorsion, "base change by the torsion exponent left torsion behind");
  return {big, T};
}

}  // namespace weil
