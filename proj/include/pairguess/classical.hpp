#pragma once

#include <vector>

namespace pairguess {

struct BruteForceResult {
  std::vector<int> best_encoding;  // lexicographically smallest maximizer
  double best_average = 0.0;
  bool can_win = false;
};

// Scans every one of the levels^d encodings of {1..d} into {0..levels-1}
// and returns the one maximizing the average success (ties broken toward
// the lexicographically smallest encoding). ResourceLimit when levels^d
// exceeds 1e8. Enumeration splits evenly across `threads`; the combined
// result is identical for any thread count.
BruteForceResult brute_force_optimum(int d, int levels, int threads = 1);

// Closed-form optimum over `levels`-level encodings: a balanced partition
// leaves U = sum_k C(n_k, 2) value pairs sharing a level, and the average
// is (P - U/2) / P with P = d(d-1)/2.
double balanced_partition_optimum(int d, int levels);

// Lexicographically smallest encoding attaining balanced_partition_optimum.
std::vector<int> balanced_encoding(int d, int levels);

// Least message dimension that wins the game; equals d, since winning
// requires an injective encoding. Confirmed by exhaustive scan for d <= 6.
int min_levels_to_win(int d);

}  // namespace pairguess
