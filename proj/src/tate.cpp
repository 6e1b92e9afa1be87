#include "weil/tate.hpp"

#include <algorithm>
#include <functional>

#include "weil/error.hpp"

namespace weil {

namespace {

// reduced shapes of weight w with e <= upper, in lexicographically decreasing order
void for_each_reduced_shape(const EigenvalueSystem& sys, long long w, const IntVec& upper,
                            const std::function<bool(const IntVec&)>& visit) {
  const int m = sys.m();
  IntVec e(static_cast<std::size_t>(m), 0);
  bool stop = false;
  std::function<void(int, long long)> rec = [&](int i, long long left) {
    if (stop) return;
    if (i == m) {
      if (left == 0) stop = visit(e);
      return;
    }
    const auto ui = static_cast<std::size_t>(i);
    const int partner = sys.iota()[ui];
    long long hi = std::min(left, upper[ui]);
    if (partner == i) hi = std::min(hi, 1LL);
    if (partner < i && e[static_cast<std::size_t>(partner)] != 0) hi = 0;
    for (long long v = hi; v >= 0 && !stop; --v) {
      e[ui] = v;
      rec(i + 1, left - v);
    }
    e[ui] = 0;
  };
  rec(0, w);
}

IntVec scaled(const EigenvalueSystem& sys, long long n) {
  IntVec u;
  for (int x : sys.mult()) u.push_back(n * x);
  return u;
}

}  // namespace

std::optional<AdmissibleFunction> exceptional_witness(const EigenvalueSystem& sys,
                                                      const RelationLattice& lattice, int n, int d) {
  if (d < 1) return std::nullopt;
  const bool use_lattice = 2 * d <= lattice.certified_weight;
  std::optional<AdmissibleFunction> found;
  for_each_reduced_shape(sys, 2LL * d, scaled(sys, n), [&](const IntVec& e) {
    const bool hit = use_lattice ? lattice.contains(e) : verify_relation(sys, e, d);
    if (!hit) return false;
    if (!verify_relation(sys, e, d))
      throw WeilError(ErrorCode::InconsistentTorsion, "lattice member fails exact verification");
    found = AdmissibleFunction{e, d, 2LL * d};
    return true;
  });
  return found;
}

bool exceptional_exists(const EigenvalueSystem& sys, const RelationLattice& lattice, int n, int d) {
  return exceptional_witness(sys, lattice, n, d).has_value();
}

bool exceptional_exists(const EigenvalueSystem& sys, int n, int d) {
  return exceptional_exists(sys, discover(sys), n, d);
}

namespace {

// least weight reduced function, widening the cap to cover the small-field witness
std::optional<AdmissibleFunction> reduced_witness(const EigenvalueSystem& sys, int W) {
  int cap = W;
  if (is_small(sys)) {
    try {
      cap = std::max<long long>(cap, small_field_reduced(sys).weight);
    } catch (const WeilError& err) {
      if (err.code() != ErrorCode::SmallFieldError) throw;
    }
  }
  return minimal_reduced(sys, cap);
}

}  // namespace

ExoticVerdict exotic_exists_any_power(const EigenvalueSystem& sys, int W) {
  if (W == 0) W = default_weight_bound(sys.g());
  const RelationLattice L = discover(sys, W);
  if (!L.torsion_order.fits_sint_p())
    throw WeilError(ErrorCode::InconsistentTorsion, "torsion exponent too large");
  const int T = static_cast<int>(L.torsion_order.get_si());
  ExoticVerdict v;
  for (int k = 1; k <= T; ++k) {
    if (T % k != 0) continue;
    const EigenvalueSystem sk = k == 1 ? sys : build(base_change(sys.poly(), k));
    std::optional<AdmissibleFunction> w;
    if (k == T) {
      const RankDecision dec = rank_decision(sk, discover(sk, W));
      if (dec.has_reduced) {
        w = minimal_reduced(sk, W);
        if (!w) throw WeilError(ErrorCode::InconsistentTorsion, "rank criterion holds but no reduced function within the weight bound");
      }
    } else {
      w = reduced_witness(sk, W);
    }
    if (w) {
      v.exists = true;
      v.witness = w;
      v.witness_base_change = k;
      v.certified = true;
      return v;
    }
  }
  v.certified = sys.r() <= 1;
  return v;
}

std::optional<long long> minimal_exotic_power(const EigenvalueSystem& sys, int weight_cap) {
  if (weight_cap < 4) throw WeilError(ErrorCode::InvalidArgument, "weight cap must be at least 4");
  const auto f = minimal_reduced(sys, weight_cap);
  if (!f) return std::nullopt;
  auto need = [&](const IntVec& e) {
    long long k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const long long mu = sys.mult()[i];
      k = std::max(k, (e[i] + mu - 1) / mu);
    }
    return k;
  };
  const long long known = need(f->e);
  // smallest n with a reduced function inside the box n mult
  for (long long n = 1; n < known; ++n) {
    IntVec upper;
    long long room = 0;
    for (int mu : sys.mult()) {
      upper.push_back(n * mu);
      room += n * mu;
    }
    bool hit = false;
    for (long long w = 2; w <= std::min<long long>(weight_cap, room) && !hit; w += 2)
      for_each_reduced_candidate(sys, static_cast<int>(w), upper, [&](const IntVec& e) {
        if (!hit && verify_relation(sys, e, w / 2)) hit = true;
      });
    if (hit) return n;
  }
  return known;
}

std::optional<long long> power_bound(const EigenvalueSystem& sys, int weight_cap) {
  const auto f = minimal_reduced(sys, weight_cap);
  if (!f) return std::nullopt;
  return 2 * f->degree;
}

long long degree_bound_H(const EigenvalueSystem& sys, int W) {
  return hilbert_basis(sys, discover(sys, W)).H;
}

const char* to_string(NeatVerdict v) {
  switch (v) {
    case NeatVerdict::Neat: return "Neat";
    case NeatVerdict::NotNeat: return "NotNeat";
    case NeatVerdict::NeatUpToBound: return "NeatUpToBound";
  }
  return "";
}

TateReport neat_decision(const WeilPolynomial& P, const AnalyzeOptions& options) {
  TateReport rep;
  rep.P = P;
  rep.slopes = newton_polygon(P);
  const int W = options.weight_bound > 0 ? options.weight_bound : default_weight_bound(P.g);
  rep.weight_bound = W;
  rep.max_power = options.max_power;

  const EigenvalueSystem sys = build(P);
  const RelationLattice L = discover(sys, W);
  rep.m = sys.m();
  rep.r = sys.r();
  rep.small = is_small(sys);
  rep.gamma_rank = L.gamma_rank;

  const LargeSystem big = ensure_sufficiently_large(sys, W);
  const RelationLattice LL = discover(big.sys, W);
  rep.base_change = big.exponent;
  rep.large = big.sys.poly();
  const RankDecision dec = rank_decision(big.sys, LL);
  rep.large_gamma_rank = dec.gamma_rank;
  rep.rank_threshold = dec.threshold;
  rep.hilbert = hilbert_basis(big.sys, LL);

  int cap = W;
  if (rep.small) {
    try {
      cap = std::max<long long>(cap, small_field_reduced(sys).weight);
    } catch (const WeilError& err) {
      if (err.code() != ErrorCode::SmallFieldError) throw;
    }
  }
  rep.minimal_reduced = minimal_reduced(sys, cap);
  rep.minimal_exotic_power = minimal_exotic_power(sys, std::max(cap, 4));
  if (rep.minimal_reduced) rep.power_bound = 2 * rep.minimal_reduced->degree;

  for (int n = 1; n <= options.max_power; ++n) {
    for (int d = 2; d <= n * P.g; ++d) {
      if (auto w = exceptional_witness(sys, L, n, d)) {
        rep.exceptional.push_back({n, d, w->e});
        break;
      }
    }
  }

  const ExoticVerdict ex = exotic_exists_any_power(sys, W);
  if (ex.exists) {
    rep.neat = NeatVerdict::NotNeat;
    rep.witness = ex.witness;
    rep.witness_base_change = ex.witness_base_change;
  } else {
    rep.neat = ex.certified ? NeatVerdict::Neat : NeatVerdict::NeatUpToBound;
  }
  return rep;
}

}  // namespace weil
