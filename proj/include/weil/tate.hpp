#pragma once

// Verdicts on exotic Tate classes: exceptional forms on X^n, minimal powers,
// the per-instance degree bound H, and the neatness decision.

#include <optional>
#include <vector>

#include "weil/cone.hpp"
#include "weil/relations.hpp"

namespace weil {

/// Reduced admissible e of weight 2d with e <= n mult, found by lattice
/// membership (exact search when 2d exceeds the lattice's certified weight).
std::optional<AdmissibleFunction> exceptional_witness(const EigenvalueSystem& sys,
                                                      const RelationLattice& lattice, int n, int d);
bool exceptional_exists(const EigenvalueSystem& sys, const RelationLattice& lattice, int n, int d);
bool exceptional_exists(const EigenvalueSystem& sys, int n, int d);

struct ExoticVerdict {
  bool exists = false;
  /// Reduced function on the system base changed by witness_base_change.
  std::optional<AdmissibleFunction> witness;
  int witness_base_change = 1;
  /// Absence is exact rather than limited by the weight bound.
  bool certified = false;
};
ExoticVerdict exotic_exists_any_power(const EigenvalueSystem& sys, int weight_bound = 0);

std::optional<long long> minimal_exotic_power(const EigenvalueSystem& sys, int weight_cap);
std::optional<long long> power_bound(const EigenvalueSystem& sys, int weight_cap);
long long degree_bound_H(const EigenvalueSystem& sys, int weight_bound = 0);

enum class NeatVerdict { Neat, NotNeat, NeatUpToBound };
const char* to_string(NeatVerdict v);

struct AnalyzeOptions {
  int weight_bound = 0;  // 0: 2 (2g)^2
  int max_power = 3;
};

struct ExceptionalEntry {
  int n;
  int d;
  IntVec witness;
};

struct TateReport {
  WeilPolynomial P;
  SlopeMultiset slopes;
  int weight_bound = 0;

  int m = 0;
  int r = 0;
  bool small = false;
  int gamma_rank = 0;

  int base_change = 1;
  WeilPolynomial large;
  int large_gamma_rank = 0;
  int rank_threshold = 0;
  HilbertBasis hilbert;

  std::optional<AdmissibleFunction> minimal_reduced;
  std::optional<long long> minimal_exotic_power;
  std::optional<long long> power_bound;
  std::vector<ExceptionalEntry> exceptional;
  int max_power = 0;

  NeatVerdict neat = NeatVerdict::NeatUpToBound;
  std::optional<AdmissibleFunction> witness;
  int witness_base_change = 1;
};

TateReport neat_decision(const WeilPolynomial& P, const AnalyzeOptions& options = {});

}  // namespace weil
