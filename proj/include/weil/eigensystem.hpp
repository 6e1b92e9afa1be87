#pragma once

// Distinct Frobenius eigenvalues with certified enclosures, the involution
// alpha -> q/alpha, and exact decision of multiplicative identities.

#include <memory>
#include <optional>
#include <vector>

#include "weil/interval.hpp"
#include "weil/intmat.hpp"
#include "weil/weil_poly.hpp"

namespace weil {

struct ComplexEnclosure {
  ComplexInterval box;
  mpfr_prec_t precision;
};

struct SeparationBound {
  BigInt DL;          // 2^g g!
  double log2_M = 0;  // upper bound on log2 of the conjugate bound M
  double log2_epsilon() const;
};

class EigenvalueSystem {
 public:
  struct Pair {
    int plus;   // positive imaginary part
    int minus;
    int h_index;
  };

  explicit EigenvalueSystem(WeilPolynomial P);

  const WeilPolynomial& poly() const { return P_; }
  int m() const { return static_cast<int>(mult_.size()); }
  int g() const { return P_.g; }
  const BigInt& q() const { return P_.q.q; }
  const std::vector<int>& mult() const { return mult_; }
  const std::vector<int>& iota() const { return iota_; }
  const std::vector<int>& fixed() const { return fixed_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  int r() const { return static_cast<int>(pairs_.size()); }
  /// Index of -sqrt(q) among the roots, or -1.
  int neg_fixed() const { return neg_fixed_; }
  int pos_fixed() const { return pos_fixed_; }
  /// Arguments of the roots in [-pi, pi], double precision.
  const std::vector<double>& angles() const { return angles_; }
  /// arg(alpha_plus)/pi in (0, 1) for each pair, double precision.
  const std::vector<double>& turns() const { return turns_; }

  std::shared_ptr<const std::vector<ComplexInterval>> enclosures(mpfr_prec_t prec) const;
  ComplexEnclosure enclosure(int i, mpfr_prec_t prec) const;
  /// Enclosures of arg(alpha_plus)/pi for each pair.
  std::vector<Interval> turn_enclosures(mpfr_prec_t prec) const;

 private:
  struct Cache;

  DyadicRootInterval refined(int h_index, std::uint64_t bits) const;

  WeilPolynomial P_;
  std::vector<int> mult_;
  std::vector<int> iota_;
  std::vector<int> fixed_;
  std::vector<Pair> pairs_;
  std::vector<int> root_h_;  // root index -> h root index
  int neg_fixed_ = -1;
  int pos_fixed_ = -1;
  std::vector<double> angles_;
  std::vector<double> turns_;
  std::shared_ptr<Cache> cache_;
};

EigenvalueSystem build(const WeilPolynomial& P);

/// Precision cap in bits (WEIL_PRECISION_CAP, default 2^20).
mpfr_prec_t precision_cap();

SeparationBound separation_bound(const EigenvalueSystem& sys, const IntVec& e, long long d);

/// Decides exactly whether prod alpha_i^e_i = q^d.
bool verify_relation(const EigenvalueSystem& sys, const IntVec& e, long long d);

/// Order of alpha_i / alpha_j if it is a root of unity.
std::optional<long long> ratio_torsion_order(const EigenvalueSystem& sys, int i, int j);
bool is_small(const EigenvalueSystem& sys);

/// True iff the group generated by the roots and q has no torsion.
bool is_sufficiently_large(const EigenvalueSystem& sys, int weight_bound = 0);

struct LargeSystem {
  EigenvalueSystem sys;
  int exponent;
};
LargeSystem ensure_sufficiently_large(const EigenvalueSystem& sys, int weight_bound = 0);

/// Default relation search weight 2 (2g)^2.
int default_weight_bound(int g);

}  // namespace weil
