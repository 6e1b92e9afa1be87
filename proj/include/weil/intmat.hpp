#pragma once

// Integer lattices given by row generators: Hermite normal form, kernels,
// saturation and integral LLL. Entries are arbitrary precision.

#include <optional>
#include <vector>

#include "weil/polynomial.hpp"

namespace weil {

using BigVec = std::vector<BigInt>;
using BigMat = std::vector<BigVec>;
using IntVec = std::vector<long long>;

BigVec to_big(const IntVec& v);
IntVec to_small(const BigVec& v);

/// Nonzero rows of the row-style Hermite normal form of the lattice spanned by
/// rows: echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot).
BigMat hnf(BigMat rows);

std::size_t lattice_rank(const BigMat& rows);

/// Basis of {x in Z^ncols : r . x = 0 for every row r}.
BigMat integer_kernel(const BigMat& rows, std::size_t ncols);

/// Basis (in HNF) of (span_Q rows) intersected with Z^ncols.
BigMat saturation(const BigMat& rows, std::size_t ncols);

/// Membership test against a basis in HNF.
bool in_lattice(const BigMat& hnf_basis, const BigVec& v);

/// Rational coordinates of v in an HNF basis, if v lies in its Q-span.
std::optional<std::vector<BigRat>> rational_coordinates(const BigMat& hnf_basis,
                                                        const BigVec& v);

/// Exponent of the finite group Sat(L)/L for L given in HNF.
BigInt torsion_exponent(const BigMat& hnf_basis, std::size_t ncols);

struct LllResult {
  BigMat basis;
  /// Squared Gram-Schmidt norms |b_i*|^2.
  std::vector<BigRat> gs_norm2;
};

/// Integral LLL with delta = 99/100 on linearly independent rows.
LllResult lll(BigMat rows);

/// Rank of a rational matrix by fraction-free elimination.
std::size_t rational_rank(BigMat rows);

}  // namespace weil
