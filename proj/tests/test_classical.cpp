#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "pairguess/classical.hpp"
#include "pairguess/errors.hpp"
#include "pairguess/game.hpp"

using namespace pairguess;

TEST_CASE("one-bit optimum at d=3 is exactly 5/6 and cannot win") {
  const BruteForceResult result = brute_force_optimum(3, 2);
  CHECK(result.best_average == 5.0 / 6.0);
  CHECK_FALSE(result.can_win);
  CHECK(result.best_encoding == std::vector<int>{0, 0, 1});
}

TEST_CASE("one-bit optimum stays 5/6 at d=4") {
  const BruteForceResult result = brute_force_optimum(4, 2);
  CHECK(result.best_average == 5.0 / 6.0);
  CHECK_FALSE(result.can_win);
}

TEST_CASE("d levels win, d-1 levels do not") {
  CHECK(brute_force_optimum(4, 4).can_win);
  CHECK(brute_force_optimum(4, 4).best_average == 1.0);
  CHECK_FALSE(brute_force_optimum(4, 3).can_win);
  CHECK_FALSE(brute_force_optimum(5, 4).can_win);
  CHECK(brute_force_optimum(5, 5).can_win);
}

TEST_CASE("exhaustive scan and closed form agree exactly") {
  for (int d = 3; d <= 6; ++d)
    for (int levels = 1; levels <= d; ++levels) {
      const BruteForceResult scan = brute_force_optimum(d, levels);
      CHECK(scan.best_average == balanced_partition_optimum(d, levels));
      CHECK(scan.best_encoding == balanced_encoding(d, levels));
      CHECK(scan.can_win == (levels >= d));
    }
}

TEST_CASE("closed-form landmarks") {
  CHECK(balanced_partition_optimum(3, 2) == 5.0 / 6.0);
  CHECK(balanced_partition_optimum(5, 2) == 0.8);
  for (int d : {3, 5, 8, 13}) CHECK(balanced_partition_optimum(d, d) == 1.0);
  // Extra levels beyond d cannot help.
  CHECK(balanced_partition_optimum(4, 9) == 1.0);
}

TEST_CASE("optimum is monotone in levels with a 3/4 floor from two levels up") {
  for (int d = 3; d <= 20; ++d) {
    double previous = 0.0;
    for (int levels = 1; levels <= d + 2; ++levels) {
      const double value = balanced_partition_optimum(d, levels);
      CHECK(value >= previous);
      previous = value;
      if (levels >= 2) CHECK(value >= 0.75);
    }
    CHECK(balanced_partition_optimum(d, d) == 1.0);
  }
}

TEST_CASE("best encoding is the block-form balanced partition") {
  CHECK(balanced_encoding(5, 2) == std::vector<int>{0, 0, 0, 1, 1});
  CHECK(balanced_encoding(4, 3) == std::vector<int>{0, 0, 1, 2});
  CHECK(balanced_encoding(3, 3) == std::vector<int>{0, 1, 2});
  CHECK(balanced_encoding(3, 7) == std::vector<int>{0, 1, 2});
  CHECK(balanced_encoding(6, 2) == std::vector<int>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("closed form matches the game-model evaluation") {
  for (int d = 3; d <= 8; ++d)
    for (int levels = 1; levels <= d; ++levels) {
      const Strategy strategy = ClassicalStrategy{balanced_encoding(d, levels), levels};
      const GameSpec spec = canonical_spec(d);
      const double via_game = average_success(success_matrix(strategy, spec), spec);
      CHECK(std::abs(via_game - balanced_partition_optimum(d, levels)) < 1e-12);
    }
}

TEST_CASE("minimum winning dimension equals d") {
  CHECK(min_levels_to_win(3) == 3);
  CHECK(min_levels_to_win(4) == 4);
  CHECK(min_levels_to_win(5) == 5);
  CHECK(min_levels_to_win(6) == 6);
  CHECK(min_levels_to_win(9) == 9);
  CHECK(min_levels_to_win(40) == 40);
}

TEST_CASE("enumeration guard and argument checks") {
  CHECK_THROWS_AS(brute_force_optimum(9, 10), ResourceLimit);   // 10^9 encodings
  CHECK_THROWS_AS(brute_force_optimum(30, 2), ResourceLimit);   // 2^30 > 1e8
  CHECK_THROWS_AS(brute_force_optimum(2, 2), DomainError);
  CHECK_THROWS_AS(brute_force_optimum(3, 0), DomainError);
  CHECK_THROWS_AS(brute_force_optimum(3, 2, 0), DomainError);
  CHECK_THROWS_AS(balanced_partition_optimum(2, 2), DomainError);
  CHECK_THROWS_AS(balanced_encoding(3, -1), DomainError);
  CHECK_THROWS_AS(min_levels_to_win(1), DomainError);
}

TEST_CASE("parallel scans return the serial answer") {
  for (int threads : {2, 4, 16}) {
    const BruteForceResult serial = brute_force_optimum(5, 3, 1);
    const BruteForceResult parallel = brute_force_optimum(5, 3, threads);
    CHECK(parallel.best_encoding == serial.best_encoding);
    CHECK(parallel.best_average == serial.best_average);
    CHECK(parallel.can_win == serial.can_win);
  }
  // More threads than encodings.
  const BruteForceResult tiny = brute_force_optimum(3, 1, 64);
  CHECK(tiny.best_average == balanced_partition_optimum(3, 1));
}
