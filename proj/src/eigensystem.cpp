#include "weil/eigensystem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "weil/error.hpp"
#include "weil/glbounds.hpp"

namespace weil {

struct EigenvalueSystem::Cache {
  std::mutex mu;
  std::vector<DyadicRootInterval> h_roots;
  std::map<mpfr_prec_t, std::shared_ptr<const std::vector<ComplexInterval>>> boxes;
};

EigenvalueSystem::EigenvalueSystem(WeilPolynomial P) : P_(std::move(P)), cache_(std::make_shared<Cache>()) {
  const double q = P_.q.q.get_d();
  const double sq = std::sqrt(q);
  for (std::size_t k = 0; k < P_.h_roots.size(); ++k) {
    const HRoot& hr = P_.h_roots[k];
    const int idx = m();
    if (hr.fixed_sign != 0) {
      mult_.push_back(2 * hr.mult_h);
      iota_.push_back(idx);
      fixed_.push_back(idx);
      root_h_.push_back(static_cast<int>(k));
      angles_.push_back(hr.fixed_sign > 0 ? 0.0 : M_PI);
      if (hr.fixed_sign > 0) pos_fixed_ = idx; else neg_fixed_ = idx;
      continue;
    }
    DyadicRootInterval iv = hr.interval;
    refine_root(P_.h_radical, iv, 60);
    const double x = 0.5 * (iv.lo().get_d() + iv.hi().get_d());
    const double phi = std::acos(std::clamp(x / (2 * sq), -1.0, 1.0));
    mult_.push_back(hr.mult_h);
    mult_.push_back(hr.mult_h);
    iota_.push_back(idx + 1);
    iota_.push_back(idx);
    root_h_.push_back(static_cast<int>(k));
    root_h_.push_back(static_cast<int>(k));
    angles_.push_back(phi);
    angles_.push_back(-phi);
    pairs_.push_back({idx, idx + 1, static_cast<int>(k)});
    turns_.push_back(phi / M_PI);
  }
  for (const auto& hr : P_.h_roots) cache_->h_roots.push_back(hr.interval);
}

EigenvalueSystem build(const WeilPolynomial& P) { return EigenvalueSystem(P); }

DyadicRootInterval EigenvalueSystem::refined(int h_index, std::uint64_t bits) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  DyadicRootInterval& iv = cache_->h_roots[static_cast<std::size_t>(h_index)];
  if (!iv.exact && iv.log2_width() > -static_cast<double>(bits)) refine_root(P_.h_radical, iv, bits);
  return iv;
}

std::shared_ptr<const std::vector<ComplexInterval>> EigenvalueSystem::enclosures(mpfr_prec_t prec) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->boxes.find(prec);
    if (it != cache_->boxes.end()) return it->second;
  }
  auto out = std::make_shared<std::vector<ComplexInterval>>();
  const Interval qi = Interval::point(q(), prec);
  const Interval sq = sqrt_nonneg(qi);
  const Interval zero = Interval::point(0, prec);
  for (const auto& hr : P_.h_roots) {
    if (hr.fixed_sign != 0) {
      out->emplace_back(hr.fixed_sign > 0 ? sq : -sq, zero);
      continue;
    }
    const auto k = static_cast<int>(&hr - P_.h_roots.data());
    const DyadicRootInterval iv = refined(k, static_cast<std::uint64_t>(prec) + 8);
    const Interval x = Interval::from_bounds(iv.lo(), iv.hi(), prec);
    const Interval re = mul_2exp(x, -1);
    const Interval im = sqrt_nonneg(qi - sqr(re));
    out->emplace_back(re, im);
    out->emplace_back(re, -im);
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->boxes.emplace(prec, std::move(out));
  return it->second;
}

ComplexEnclosure EigenvalueSystem::enclosure(int i, mpfr_prec_t prec) const {
  return {(*enclosures(prec))[static_cast<std::size_t>(i)], prec};
}

std::vector<Interval> EigenvalueSystem::turn_enclosures(mpfr_prec_t prec) const {
  std::vector<Interval> out;
  const Interval two_sq = mul_2exp(sqrt_nonneg(Interval::point(q(), prec)), 1);
  const Interval pi = Interval::pi(prec);
  for (const auto& pr : pairs_) {
    const DyadicRootInterval iv = refined(pr.h_index, static_cast<std::uint64_t>(prec) + 8);
    const Interval x = Interval::from_bounds(iv.lo(), iv.hi(), prec);
    out.push_back(acos_clipped(x / two_sq) / pi);
  }
  return out;
}

mpfr_prec_t precision_cap() {
  static const mpfr_prec_t cap = [] {
    const char* env = std::getenv("WEIL_PRECISION_CAP");
    if (env != nullptr) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 64) return static_cast<mpfr_prec_t>(v);
    }
    return static_cast<mpfr_prec_t>(1) << 20;
  }();
  return cap;
}

double SeparationBound::log2_epsilon() const {
  return -(DL.get_d() - 1.0) * log2_M;
}

namespace {

struct Normalized {
  IntVec e;
  long long d;
};

long long floor_div2(long long s) { return s >= 0 ? s / 2 : -((-s + 1) / 2); }

// alpha^a (q/alpha)^b = q^min(a,b) alpha^(a-min) (q/alpha)^(b-min); beta^2 = q
Normalized normalize(const EigenvalueSystem& sys, const IntVec& e, long long d) {
  Normalized n{e, d};
  for (const auto& pr : sys.pairs()) {
    const long long a = e[static_cast<std::size_t>(pr.plus)];
    const long long b = e[static_cast<std::size_t>(pr.minus)];
    const long long mn = std::min(a, b);
    n.d -= mn;
    n.e[static_cast<std::size_t>(pr.plus)] = a - mn;
    n.e[static_cast<std::size_t>(pr.minus)] = b - mn;
  }
  for (int f : sys.fixed()) {
    const long long s = e[static_cast<std::size_t>(f)];
    const long long fl = floor_div2(s);
    n.d -= fl;
    n.e[static_cast<std::size_t>(f)] = s - 2 * fl;
  }
  return n;
}

}  // namespace

SeparationBound separation_bound(const EigenvalueSystem& sys, const IntVec& e, long long d) {
  SeparationBound sb;
  sb.DL = 1;
  for (int i = 1; i <= sys.g(); ++i) sb.DL *= 2 * i;
  double wp = 0, wm = 0;
  for (long long x : e) {
    if (x > 0) wp += static_cast<double>(x);
    else wm -= static_cast<double>(x);
  }
  const double lq = std::log2(sys.q().get_d()) * (1 + 1e-12);
  const double expo = std::max(wp / 2 + std::max(0.0, -static_cast<double>(d)),
                               wm / 2 + std::max(0.0, static_cast<double>(d)));
  sb.log2_M = 1.0 + lq * expo + 1e-9;
  return sb;
}

bool verify_relation(const EigenvalueSystem& sys, const IntVec& e, long long d) {
  if (static_cast<int>(e.size()) != sys.m())
    throw WeilError(ErrorCode::InvalidArgument, "exponent vector has wrong length");
  long long total = 0;
  for (long long x : e) total += x;
  if (total != 2 * d) return false;
  const Normalized n = normalize(sys, e, d);
  bool trivial = true;
  for (long long x : n.e)
    if (x != 0) trivial = false;
  if (trivial) return n.d == 0;

  const SeparationBound sb = separation_bound(sys, n.e, n.d);
  const double log2_eps = sb.log2_epsilon() - 1.0;
  double weight = 0;
  for (long long x : n.e) weight += static_cast<double>(std::llabs(x));
  const auto needed = static_cast<mpfr_prec_t>(-log2_eps + sb.log2_M + std::log2(weight + 1) + 64);
  const mpfr_prec_t cap = precision_cap();

  mpfr_prec_t prec = 128;
  while (true) {
    const auto boxes = sys.enclosures(prec);
    ComplexInterval a = ComplexInterval::one(prec);
    ComplexInterval b = ComplexInterval::one(prec);
    for (std::size_t i = 0; i < n.e.size(); ++i) {
      if (n.e[i] > 0) a = a * pow((*boxes)[i], static_cast<std::uint64_t>(n.e[i]));
      if (n.e[i] < 0) b = b * pow((*boxes)[i], static_cast<std::uint64_t>(-n.e[i]));
    }
    BigInt qa, qb;
    mpz_pow_ui(qa.get_mpz_t(), sys.q().get_mpz_t(), static_cast<unsigned long>(std::max(0LL, -n.d)));
    mpz_pow_ui(qb.get_mpz_t(), sys.q().get_mpz_t(), static_cast<unsigned long>(std::max(0LL, n.d)));
    a = a * ComplexInterval::real(qa, prec);
    b = b * ComplexInterval::real(qb, prec);
    const ComplexInterval gamma = a - b;
    if (!gamma.contains_zero()) return false;
    if (gamma.log2_sup_abs() < log2_eps) return true;
    if (prec >= cap) {
      std::string v;
      for (long long x : n.e) v += (v.empty() ? "" : ",") + std::to_string(x);
      throw WeilError(ErrorCode::PrecisionCapExceeded, "relation (" + v + ") = q^" + std::to_string(n.d) +
                                                           " undecided at " + std::to_string(prec) + " bits");
    }
    prec = prec < needed ? needed : 2 * prec;
    if (prec > cap) prec = cap;
  }
}

std::optional<long long> ratio_torsion_order(const EigenvalueSystem& sys, int i, int j) {
  if (i == j) return 1;
  const TorsionBounds tb = torsion_bound_D(sys.g());
  const BigInt limit = std::max(BigInt(2 * tb.e2), tb.e3);
  const double diff = (sys.angles()[static_cast<std::size_t>(i)] -
                       sys.angles()[static_cast<std::size_t>(j)]) / (2 * M_PI);
  for (const BigInt& nb : divisors_up_to(tb.D, limit)) {
    const long long n = nb.get_si();
    const double t = static_cast<double>(n) * diff;
    if (std::fabs(t - std::round(t)) > 1e-8) continue;
    IntVec e(static_cast<std::size_t>(sys.m()), 0);
    e[static_cast<std::size_t>(i)] = n;
    e[static_cast<std::size_t>(j)] = -n;
    if (verify_relation(sys, e, 0)) return n;
  }
  return std::nullopt;
}

bool is_small(const EigenvalueSystem& sys) {
  for (int i = 0; i < sys.m(); ++i)
    for (int j = i + 1; j < sys.m(); ++j)
      if (ratio_torsion_order(sys, i, j)) return true;
  return false;
}

int default_weight_bound(int g) { return 2 * (2 * g) * (2 * g); }

}  // namespace weil
