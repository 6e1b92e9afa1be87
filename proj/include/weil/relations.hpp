#pragma once

// Admissible functions (exponent vectors e with prod alpha^e = q^d), the
// lattice of all such relations, and reduced functions.

#include <functional>
#include <optional>
#include <vector>

#include "weil/eigensystem.hpp"

namespace weil {

struct AdmissibleFunction {
  IntVec e;
  long long degree = 0;
  long long weight = 0;
};

struct Classification {
  bool admissible = false;
  std::optional<long long> degree;
  bool trivial = false;
  bool reduced = false;
  long long weight = 0;
};

struct RelationLattice {
  BigMat basis;  // HNF rows (e, -d) in Z^{m+1}
  int certified_weight = 0;
  int gamma_rank = 0;
  /// Relations sum c_j arg(alpha_j)/pi = k among the pairs, rows (c, k).
  BigMat pair_relations;
  /// Exponent of the torsion subgroup of the group generated by roots and q.
  BigInt torsion_order = 1;

  bool contains(const IntVec& e) const;
  std::size_t rank() const { return basis.size(); }
};

long long weight(const IntVec& e);
/// Shape conditions of a reduced function, without admissibility.
bool has_reduced_shape(const EigenvalueSystem& sys, const IntVec& e);
bool is_trivial(const EigenvalueSystem& sys, const IntVec& e);

Classification classify(const EigenvalueSystem& sys, const IntVec& e);

/// All relations of weight <= W, closed into a lattice. W = 0 selects the default.
RelationLattice discover(const EigenvalueSystem& sys, int W = 0);

struct RankDecision {
  bool has_nontrivial = false;
  bool has_reduced = false;
  int gamma_rank = 0;
  int threshold = 0;
};
RankDecision rank_decision(const EigenvalueSystem& sys, int W = 0);
RankDecision rank_decision(const EigenvalueSystem& sys, const RelationLattice& lattice);

AdmissibleFunction reduce_nontrivial(const EigenvalueSystem& sys, const IntVec& e);
AdmissibleFunction small_field_reduced(const EigenvalueSystem& sys);

/// Calls visit on every reduced-shaped vector of the given weight with
/// e_i <= upper_i (upper empty means unbounded) that passes a double precision
/// phase test. Candidates still need exact verification.
void for_each_reduced_candidate(const EigenvalueSystem& sys, int weight, const IntVec& upper,
                                const std::function<void(const IntVec&)>& visit);

/// Every reduced admissible function with weight <= cap and e <= upper.
std::vector<AdmissibleFunction> reduced_functions(const EigenvalueSystem& sys, int cap,
                                                  const IntVec& upper = {});

/// Least weight reduced admissible function; ties go to the lexicographically
/// largest vector.
std::optional<AdmissibleFunction> minimal_reduced(const EigenvalueSystem& sys, int weight_cap);

}  // namespace weil
