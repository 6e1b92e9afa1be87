#include <doctest.h>

#include "support/systems.hpp"
#include "weil/oracle.hpp"

using namespace weil;
using namespace weil::testing;

TEST_CASE("eigenbasis model sizes") {
  auto four = sys_of({1, 0, 6, 0, 25}, 5);
  CHECK(eigenbasis_model(four, 2).slot_root.size() == 8);
  auto f = sys_of({1, 10, 25}, 25);
  CHECK(eigenbasis_model(f, 3).slot_root == std::vector<int>(6, 0));
}

TEST_CASE("tate and wedge dimensions") {
  auto four = sys_of({1, 0, 6, 0, 25}, 5);
  CHECK(tate_space_dim(four, 2, 2) == 20);
  CHECK(wedge_image_dim(four, 2, 2) == 18);
  CHECK(exceptional_oracle(four, 2, 2));
  CHECK(tate_space_dim(four, 1, 2) == 1);
  CHECK(wedge_image_dim(four, 1, 2) == 1);
  CHECK_FALSE(exceptional_oracle(four, 1, 2));

  auto f = sys_of({1, 10, 25}, 25);
  CHECK(tate_space_dim(f, 1, 1) == 1);
  CHECK(tate_space_dim(f, 2, 2) == wedge_image_dim(f, 2, 2));

  auto o = sys_of({1, -2, 5}, 5);
  CHECK(tate_space_dim(o, 1, 1) == 1);
  CHECK_FALSE(exceptional_oracle(o, 3, 2));
  CHECK_FALSE(exceptional_oracle(o, 2, 2));
}

TEST_CASE("explicit wedge matrix agrees with the counting model") {
  auto four = sys_of({1, 0, 6, 0, 25}, 5);
  auto x = explicit_wedge(four, 2, 2);
  CHECK(x.tate_dim == 20);
  CHECK(x.image_dim == 18);
  for (const auto& e : weil_corpus(40, 2)) {
    auto sys = build(validate(e.coeffs, e.q));
    for (int n = 1; n * 2 * sys.g() <= 8; ++n)
      for (int d = 1; d <= n * sys.g(); ++d) {
        auto w = explicit_wedge(sys, n, d);
        CHECK(BigInt(static_cast<unsigned long>(w.tate_dim)) == tate_space_dim(sys, n, d));
        CHECK(BigInt(static_cast<unsigned long>(w.image_dim)) == wedge_image_dim(sys, n, d));
      }
  }
}

TEST_CASE("bounded generation") {
  auto four = sys_of({1, 0, 6, 0, 25}, 5);
  CHECK(bounded_generation_oracle(four, 2, 3, 4));
  CHECK(bounded_generation_oracle(four, 2, 2, 4));
  CHECK_FALSE(bounded_generation_oracle(four, 2, 2, 2));
  CHECK_FALSE(bounded_generation_oracle(four, 4, 4, 2));
  CHECK(bounded_generation_oracle(four, 1, 1, 2));
}

TEST_CASE("exhaustive admissible functions") {
  auto o = sys_of({1, -2, 5}, 5);
  CHECK(exhaustive_admissible(o, 1, 2) == std::vector<IntVec>{iv({0, 0}), iv({1, 1})});
  auto f = sys_of({1, 10, 25}, 25);
  CHECK(exhaustive_admissible(f, 1, 2) == std::vector<IntVec>{iv({0}), iv({2})});
  auto four = sys_of({1, 0, 6, 0, 25}, 5);
  CHECK(exhaustive_admissible(four, 1, 2) == std::vector<IntVec>{iv({0, 0, 0, 0}), iv({1, 1, 0, 0}), iv({0, 0, 1, 1})});
  auto boxed = exhaustive_admissible(four, iv({4, 0, 4, 0}), 8);
  CHECK(boxed == std::vector<IntVec>{iv({0, 0, 0, 0}), iv({2, 0, 2, 0}), iv({4, 0, 4, 0})});
}

TEST_CASE("fingerprints have the right weight and verify") {
  for (const auto& e : weil_corpus(40, 3)) {
    auto sys = build(validate(e.coeffs, e.q));
    for (const auto& fp : admissible_fingerprints(sys, 2, 2)) {
      long long s = 0;
      for (std::size_t i = 0; i < fp.size(); ++i) {
        CHECK(fp[i] <= 2 * sys.mult()[i]);
        s += fp[i];
      }
      CHECK(s == 4);
      CHECK(verify_relation(sys, fp, 2));
    }
  }
}
