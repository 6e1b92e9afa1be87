#pragma once

// Hilbert basis of the semigroup of nonnegative admissible functions and
// decompositions into its generators.

#include <utility>
#include <vector>

#include "weil/relations.hpp"

namespace weil {

struct HilbertBasis {
  /// Ordered by weight, then lexicographically decreasing.
  std::vector<IntVec> generators;
  long long H = 0;
};

/// Projection of the relation lattice to exponent coordinates, in HNF.
BigMat exponent_lattice(const RelationLattice& lattice, int m);

/// Graver basis of a lattice given by integer row generators.
std::vector<IntVec> graver_basis(const BigMat& rows, int m);

/// Hilbert basis of the lattice intersected with the nonnegative orthant,
/// without any condition on the field.
HilbertBasis hilbert_basis_of_lattice(const BigMat& rows, int m);

HilbertBasis hilbert_basis(const EigenvalueSystem& sys, const RelationLattice& lattice);

std::vector<IntVec> decompose(const IntVec& e, const HilbertBasis& basis);

/// e = f1 + f2 with f2 a generator of weight <= H.
std::pair<IntVec, IntVec> split_heavy(const IntVec& e, const HilbertBasis& basis);

}  // namespace weil
