#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <set>

#include "whqram/graycode.hpp"

using namespace whqram;

namespace {

// Applying the change set to word k must reproduce word k+1 (wrapping).
void check_change_sets(const GrayCode& g) {
  std::size_t steps = g.change_sets.size();
  REQUIRE(steps == (g.periodic ? g.words.size() : g.words.size() - 1));
  for (std::size_t k = 0; k < steps; ++k) {
    std::uint32_t w = g.words[k];
    for (int bit : g.change_sets[k]) w ^= 1u << (g.n - bit);
    CHECK(w == g.words[(k + 1) % g.words.size()]);
  }
}

}  // namespace

TEST_CASE("standard gray code n=1 and n=2") {
  auto g1 = standard_gray(1);
  CHECK(g1.words == std::vector<std::uint32_t>{0, 1});
  CHECK(g1.change_sets == std::vector<std::vector<int>>{{1}, {1}});

  auto g2 = standard_gray(2);
  CHECK(g2.words == std::vector<std::uint32_t>{0b00, 0b01, 0b11, 0b10});
  CHECK(g2.change_sets == std::vector<std::vector<int>>{{2}, {1}, {2}, {1}});
}

TEST_CASE("standard gray code is a distance-1 cycle through F_2^n") {
  for (int n = 1; n <= 10; ++n) {
    auto g = standard_gray(n);
    std::set<std::uint32_t> seen(g.words.begin(), g.words.end());
    CHECK(seen.size() == (std::size_t{1} << n));
    for (std::size_t k = 0; k < g.words.size(); ++k) {
      std::uint32_t next = g.words[(k + 1) % g.words.size()];
      CHECK(std::popcount(g.words[k] ^ next) == 1);
    }
    check_change_sets(g);
  }
}

TEST_CASE("support order follows the reflected code") {
  CHECK(support_gray_order({0b01, 0b10}, 2) == std::vector<std::uint32_t>{0b01, 0b10});
  CHECK(support_gray_order({5}, 3) == std::vector<std::uint32_t>{5});
  auto full = support_gray_order({0, 1, 2, 3}, 2);
  CHECK(full == standard_gray(2).words);
  CHECK_THROWS_AS(support_gray_order({}, 2), std::invalid_argument);
}

TEST_CASE("bounded gray code n=2 k=1") {
  auto g = bounded_gray(2, 1);
  CHECK(g.words == std::vector<std::uint32_t>{0b00, 0b10, 0b01});
  CHECK(std::popcount(g.words[0] ^ g.words[1]) == 1);
  CHECK(std::popcount(g.words[1] ^ g.words[2]) == 2);
  check_change_sets(g);
}

TEST_CASE("bounded gray code k=n reduces to a full distance-1 code") {
  for (int n = 1; n <= 8; ++n) {
    auto g = bounded_gray(n, n);
    CHECK(g.words.size() == (std::size_t{1} << n));
    for (std::size_t k = 0; k + 1 < g.words.size(); ++k)
      CHECK(std::popcount(g.words[k] ^ g.words[k + 1]) == 1);
  }
}

TEST_CASE("bounded gray code: coverage, distance and endpoints for n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto g = bounded_gray(n, k);
      std::set<std::uint32_t> seen(g.words.begin(), g.words.end());
      REQUIRE(seen.size() == g.words.size());
      std::set<std::uint32_t> expect;
      for (std::uint32_t w = 0; w < (1u << n); ++w)
        if (std::popcount(w) <= k) expect.insert(w);
      CHECK(seen == expect);
      CHECK(bigint(static_cast<long long>(g.words.size())) == b_nk(n, k));
      for (std::size_t i = 0; i + 1 < g.words.size(); ++i)
        CHECK(std::popcount(g.words[i] ^ g.words[i + 1]) <= 2);
      CHECK(g.words.front() == 0);
      if (g.words.size() > 1) CHECK(g.words[1] == (1u << (n - 1)));  // delta_1
      CHECK(g.words.back() == 1);                                    // delta_n
      check_change_sets(g);
    }
  }
}

TEST_CASE("bounded gray rejects bad k") {
  CHECK_THROWS_AS(bounded_gray(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(bounded_gray(4, 5), std::invalid_argument);
}

TEST_CASE("binomial sums") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(b_nk(n, 0) == 1);
    CHECK(b_nk(n, n) == bigint(1) << n);
  }
  CHECK(b_nk(4, 2) == 11);
  CHECK(b_nk(10, 3) == 1 + 10 + 45 + 120);
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-12));
  for (double a : {0.1, 0.25, 0.3, 0.42})
    CHECK(binary_entropy(a) == doctest::Approx(binary_entropy(1 - a)).epsilon(1e-12));
  CHECK(binary_entropy(0.25) == doctest::Approx(0.811278).epsilon(1e-6));
  CHECK_THROWS_AS(binary_entropy(0.0), std::invalid_argument);
  CHECK_THROWS_AS(binary_entropy(1.0), std::invalid_argument);
}
