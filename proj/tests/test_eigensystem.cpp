#include <doctest.h>

#include <cmath>
#include <random>

#include "support/root_oracle.hpp"
#include "support/systems.hpp"
#include "weil/error.hpp"
#include "weil/glbounds.hpp"

using namespace weil;
using namespace weil::testing;

TEST_CASE("root structure of small systems") {
  auto s = sys_of({1, 0, 5}, 5);
  CHECK(s.m() == 2);
  CHECK(s.iota() == std::vector<int>{1, 0});
  CHECK(s.fixed().empty());
  CHECK(s.r() == 1);

  auto f = sys_of({1, 10, 25}, 25);
  CHECK(f.m() == 1);
  CHECK(f.iota() == std::vector<int>{0});
  CHECK(f.fixed() == std::vector<int>{0});
  CHECK(f.r() == 0);
  CHECK(f.neg_fixed() == 0);
  CHECK(f.mult() == std::vector<int>{2});

  auto four = build(validate(four_root_system().coeffs, four_root_system().q));
  CHECK(four.m() == 4);
  CHECK(four.r() == 2);
  CHECK(four.iota() == std::vector<int>{1, 0, 3, 2});
  // canonical order 1+2i, 1-2i, -1+2i, -1-2i
  auto enc = four.enclosures(128);
  CHECK(enc->at(0).re.mid_double() == doctest::Approx(1));
  CHECK(enc->at(0).im.mid_double() == doctest::Approx(2));
  CHECK(enc->at(1).im.mid_double() == doctest::Approx(-2));
  CHECK(enc->at(2).re.mid_double() == doctest::Approx(-1));
}

TEST_CASE("enclosures contain the oracle roots and shrink with precision") {
  for (const auto& e : weil_corpus(40, 3)) {
    auto sys = build(validate(e.coeffs, e.q));
    auto roots = numeric_roots(e.coeffs);
    for (int i = 0; i < sys.m(); ++i) {
      auto lo = sys.enclosure(i, 64);
      auto hi = sys.enclosure(i, 256);
      CHECK(hi.box.log2_width() <= lo.box.log2_width());
      const double re = hi.box.re.mid_double(), im = hi.box.im.mid_double();
      double best = 1e9;
      for (auto [x, y] : roots) best = std::min(best, std::hypot(x - re, y - im));
      CHECK(best < 1e-6);
    }
  }
}

TEST_CASE("iota is an involution and the counts match") {
  for (const auto& e : weil_corpus(150, 3)) {
    auto sys = build(validate(e.coeffs, e.q));
    const auto& io = sys.iota();
    for (int i = 0; i < sys.m(); ++i) CHECK(io[static_cast<std::size_t>(io[static_cast<std::size_t>(i)])] == i);
    CHECK(sys.fixed().size() <= 2);
    if (!is_small(sys)) CHECK(sys.fixed().size() <= 1);
    CHECK(2 * sys.r() == sys.m() - static_cast<int>(sys.fixed().size()));
    CHECK(sys.r() <= sys.g());
  }
}

TEST_CASE("verify_relation on hand examples") {
  auto s = sys_of({1, 0, 5}, 5);
  CHECK(verify_relation(s, iv({1, 1}), 1));
  CHECK_FALSE(verify_relation(s, iv({2, 0}), 1));
  CHECK(verify_relation(s, iv({4, 0}), 2));
  CHECK_FALSE(verify_relation(s, iv({4, 0}), 1));
  auto f = sys_of({1, 10, 25}, 25);
  CHECK(verify_relation(f, iv({2}), 1));
  CHECK_FALSE(verify_relation(f, iv({1}), 0));
  auto o = sys_of({1, -2, 5}, 5);
  CHECK(verify_relation(o, iv({1, 1}), 1));
  CHECK_FALSE(verify_relation(o, iv({24, -24}), 0));
  CHECK(verify_relation(o, iv({0, 0}), 0));
}

TEST_CASE("verify_relation property: products of the multiplicity vector") {
  std::mt19937_64 rng(11);
  for (const auto& e : weil_corpus(100, 3)) {
    auto sys = build(validate(e.coeffs, e.q));
    IntVec m(sys.mult().begin(), sys.mult().end());
    CHECK(verify_relation(sys, m, sys.g()));
    CHECK_FALSE(verify_relation(sys, m, sys.g() + 1));
    // alpha (q/alpha) = q for every root
    for (int i = 0; i < sys.m(); ++i) {
      IntVec v(static_cast<std::size_t>(sys.m()), 0);
      v[static_cast<std::size_t>(i)] += 1;
      v[static_cast<std::size_t>(sys.iota()[static_cast<std::size_t>(i)])] += 1;
      CHECK(verify_relation(sys, v, 1));
    }
  }
}

TEST_CASE("separation bound shape") {
  auto s = sys_of({1, 0, 6, 0, 25}, 5);
  auto b = separation_bound(s, iv({2, 0, 2, 0}), 2);
  CHECK(b.DL == 8);
  CHECK(b.log2_M > 0);
  CHECK(b.log2_epsilon() < 0);
}

TEST_CASE("ratio torsion order") {
  auto s = sys_of({1, 0, 5}, 5);
  CHECK(ratio_torsion_order(s, 0, 1) == 2);
  CHECK(ratio_torsion_order(s, 0, 0) == 1);
  auto o = sys_of({1, -2, 5}, 5);
  CHECK_FALSE(ratio_torsion_order(o, 0, 1).has_value());
  auto four = sys_of({1, 0, 6, 0, 25}, 5);
  // -1+2i = -(1-2i)
  CHECK(ratio_torsion_order(four, 2, 1) == 2);
}

TEST_CASE("torsion ratios are annihilated by D") {
  for (const auto& e : weil_corpus(120, 2)) {
    auto sys = build(validate(e.coeffs, e.q));
    const BigInt D = torsion_bound_D(sys.g()).D;
    for (int i = 0; i < sys.m(); ++i)
      for (int j = i + 1; j < sys.m(); ++j) {
        auto o = ratio_torsion_order(sys, i, j);
        if (!o) continue;
        CHECK(D % static_cast<long>(*o) == 0);
        IntVec v(static_cast<std::size_t>(sys.m()), 0);
        v[static_cast<std::size_t>(i)] = *o;
        v[static_cast<std::size_t>(j)] = -*o;
        CHECK(verify_relation(sys, v, 0));
        if (*o > 1) {
          v[static_cast<std::size_t>(i)] = *o - 1;
          v[static_cast<std::size_t>(j)] = 1 - *o;
          CHECK_FALSE(verify_relation(sys, v, 0));
        }
      }
  }
}

TEST_CASE("small fields") {
  CHECK(is_small(sys_of({1, 0, 5}, 5)));
  CHECK_FALSE(is_small(sys_of({1, -2, 5}, 5)));
  CHECK(is_small(sys_of({1, 0, 6, 0, 25}, 5)));
  CHECK_FALSE(is_small(sys_of({1, 10, 25}, 25)));
}

TEST_CASE("sufficiently large systems and base change") {
  CHECK(is_sufficiently_large(sys_of({1, 10, 25}, 25)));
  CHECK_FALSE(is_sufficiently_large(sys_of({1, 0, 5}, 5)));
  CHECK(is_sufficiently_large(sys_of({1, -2, 5}, 5)));

  auto a = ensure_sufficiently_large(sys_of({1, 0, 5}, 5));
  CHECK(a.exponent == 2);
  CHECK(a.sys.poly().coeffs == high_first({1, 10, 25}));
  CHECK(a.sys.q() == 25);

  auto b = ensure_sufficiently_large(sys_of({1, -2, 5}, 5));
  CHECK(b.exponent == 1);

  auto c = ensure_sufficiently_large(sys_of({1, 0, 6, 0, 25}, 5));
  CHECK(c.exponent == 2);
  CHECK(c.sys.m() == 2);
  CHECK(c.sys.mult() == std::vector<int>{2, 2});
  CHECK(c.sys.poly().coeffs == mul(high_first({1, 6, 25}), high_first({1, 6, 25})));
}

TEST_CASE("precision cap reads the environment default") { CHECK(precision_cap() >= 1024); }
