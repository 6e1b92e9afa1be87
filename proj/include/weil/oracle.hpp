#pragma once

// Brute-force model of Tate forms on self-powers: an eigenbasis B of the
// dual Frobenius module with slot -> root map, subsets C of B with product
// q^d, and the image of the wedge map from degree 2d-2 and degree 2 forms.
// Uses only exact identity tests, never the relation lattice.

#include <functional>
#include <vector>

#include "weil/eigensystem.hpp"

namespace weil {

struct EigenbasisModel {
  int n = 0;
  std::vector<int> slot_root;  // |B| = 2 g n
};

EigenbasisModel eigenbasis_model(const EigenvalueSystem& sys, int n);

/// Admissible fingerprints e with 0 <= e <= n mult and sum e = 2d.
std::vector<IntVec> admissible_fingerprints(const EigenvalueSystem& sys, int n, int d);

BigInt tate_space_dim(const EigenvalueSystem& sys, int n, int d);
BigInt wedge_image_dim(const EigenvalueSystem& sys, int n, int d);
bool exceptional_oracle(const EigenvalueSystem& sys, int n, int d);
bool bounded_generation_oracle(const EigenvalueSystem& sys, int n, int m, long long H);

/// Every admissible e with 0 <= e <= n mult and even weight <= bound; an
/// optional shape predicate restricts the search.
std::vector<IntVec> exhaustive_admissible(const EigenvalueSystem& sys, int n, int weight_bound,
                                          const std::function<bool(const IntVec&)>& shape = {});

/// Same search with an explicit box 0 <= e <= upper.
std::vector<IntVec> exhaustive_admissible(const EigenvalueSystem& sys, const IntVec& upper, int weight_bound,
                                          const std::function<bool(const IntVec&)>& shape = {});

struct ExplicitWedge {
  std::size_t tate_dim = 0;
  std::size_t image_dim = 0;
};

/// Materializes the wedge map y_S (x) y_T -> y_S ^ y_T over |B| <= 12 and
/// ranks it over Q. Subset admissibility is tested numerically at 512 bits.
ExplicitWedge explicit_wedge(const EigenvalueSystem& sys, int n, int d);

}  // namespace weil
