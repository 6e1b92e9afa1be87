#pragma once

// Seeded corpora of integer polynomials shared by the unit tests and the
// acceptance runner.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "weil/polynomial.hpp"

namespace weil::testing {

struct CorpusEntry {
  IntPoly coeffs;  // low degree first
  BigInt q;
  std::string origin;
};

/// Coefficients listed from the leading term down.
IntPoly high_first(std::initializer_list<long long> c);

/// P(t) = t^g h(t + q/t) for h given low degree first.
IntPoly weil_from_real(const IntPoly& h, const BigInt& q);

/// Weil polynomials with 1 <= g <= max_g: a few fixed systems followed by
/// products of real factors and random real-rooted h. Deterministic in seed.
std::vector<CorpusEntry> weil_corpus(std::size_t count, int max_g, std::uint64_t seed = 20260419);

/// Random monic and non-monic integer polynomials of degree <= max_degree,
/// about half of them Weil polynomials and the rest near misses.
std::vector<CorpusEntry> mixed_corpus(std::size_t count, int max_degree, const std::vector<long long>& qs,
                                      std::uint64_t seed = 7);

/// Named systems used across tests.
CorpusEntry four_root_system();  // (t^2-2t+5)(t^2+2t+5), q = 5

}  // namespace weil::testing
