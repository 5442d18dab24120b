#include "pairguess/classical.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>

#include "pairguess/errors.hpp"

namespace pairguess {

namespace {

constexpr std::int64_t ENUMERATION_GUARD = 100'000'000;

void check_args(int d, int levels) {
  if (d < 3) throw DomainError("dimension must be >= 3, got " + std::to_string(d));
  if (levels < 1) throw DomainError("levels must be >= 1, got " + std::to_string(levels));
}

// Average success over all pairs when `unseparated` of the P = C(d,2)
// value pairs share a level: separated pairs score 1, the rest 1/2. Both
// the exhaustive scan and the closed form report through this one
// expression, so equal U means bit-identical averages.
double pair_average(int d, std::int64_t unseparated) {
  const double pairs = static_cast<double>(d) * (d - 1) / 2.0;
  return (pairs - 0.5 * static_cast<double>(unseparated)) / pairs;
}

// Digits of `index` in base `levels`, most significant digit first, so
// index order coincides with lexicographic order of encodings.
std::vector<int> decode_encoding(std::int64_t index, int d, int levels) {
  std::vector<int> enc(d);
  for (int pos = d - 1; pos >= 0; --pos) {
    enc[pos] = static_cast<int>(index % levels);
    index /= levels;
  }
  return enc;
}

std::int64_t count_unseparated(const std::vector<int>& enc, std::vector<int>& level_counts) {
  std::fill(level_counts.begin(), level_counts.end(), 0);
  for (int level : enc) ++level_counts[level];
  std::int64_t u = 0;
  for (int n : level_counts) u += static_cast<std::int64_t>(n) * (n - 1) / 2;
  return u;
}

struct ScanBest {
  std::int64_t unseparated = -1;
  std::int64_t index = -1;
};

// Best encoding (fewest unseparated pairs, then smallest index) over the
// index range [begin, end).
ScanBest scan_range(std::int64_t begin, std::int64_t end, int d, int levels) {
  ScanBest best;
  if (begin >= end) return best;
  std::vector<int> enc = decode_encoding(begin, d, levels);
  std::vector<int> level_counts(levels);
  for (std::int64_t index = begin; index < end; ++index) {
    const std::int64_t u = count_unseparated(enc, level_counts);
    if (best.index < 0 || u < best.unseparated) best = {u, index};
    // Odometer step to the lexicographically next encoding.
    for (int pos = d - 1; pos >= 0; --pos) {
      if (++enc[pos] < levels) break;
      enc[pos] = 0;
    }
  }
  return best;
}

}  // namespace

BruteForceResult brute_force_optimum(int d, int levels, int threads) {
  check_args(d, levels);
  if (threads < 1) throw DomainError("threads must be >= 1, got " + std::to_string(threads));

  std::int64_t total = 1;
  for (int k = 0; k < d; ++k) {
    if (total > ENUMERATION_GUARD / levels + 1) {
      total = ENUMERATION_GUARD + 1;
      break;
    }
    total *= levels;
  }
  if (total > ENUMERATION_GUARD)
    throw ResourceLimit("levels^d = " + std::to_string(levels) + "^" + std::to_string(d) +
                        " exceeds the enumeration guard of 1e8");

  const int workers = static_cast<int>(std::min<std::int64_t>(threads, total));
  std::vector<ScanBest> partial(workers);
  if (workers <= 1) {
    partial[0] = scan_range(0, total, d, levels);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const std::int64_t begin = total * w / workers;
      const std::int64_t end = total * (w + 1) / workers;
      pool.emplace_back(
          [&partial, w, begin, end, d, levels] { partial[w] = scan_range(begin, end, d, levels); });
    }
    for (std::thread& t : pool) t.join();
  }

  ScanBest best;
  for (const ScanBest& candidate : partial) {
    if (candidate.index < 0) continue;
    if (best.index < 0 || candidate.unseparated < best.unseparated ||
        (candidate.unseparated == best.unseparated && candidate.index < best.index))
      best = candidate;
  }

  BruteForceResult result;
  result.best_encoding = decode_encoding(best.index, d, levels);
  result.best_average = pair_average(d, best.unseparated);
  result.can_win = best.unseparated == 0;
  return result;
}

double balanced_partition_optimum(int d, int levels) {
  check_args(d, levels);
  // At most d parts are usable; balanced parts have size q or q+1.
  const int parts = std::min(levels, d);
  const int q = d / parts;
  const int r = d % parts;
  const std::int64_t u = static_cast<std::int64_t>(r) * (q + 1) * q / 2 +
                         static_cast<std::int64_t>(parts - r) * q * (q - 1) / 2;
  return pair_average(d, u);
}

std::vector<int> balanced_encoding(int d, int levels) {
  check_args(d, levels);
  const int parts = std::min(levels, d);
  const int q = d / parts;
  const int r = d % parts;
  // Large blocks first: the lexicographically smallest optimum packs as
  // many leading values as possible into level 0, then level 1, ...
  std::vector<int> enc;
  enc.reserve(d);
  for (int level = 0; level < parts; ++level) {
    const int size = level < r ? q + 1 : q;
    enc.insert(enc.end(), size, level);
  }
  return enc;
}

int min_levels_to_win(int d) {
  if (d < 3) throw DomainError("dimension must be >= 3, got " + std::to_string(d));
  if (d <= 6) {
    for (int c = 1; c <= d; ++c)
      if (brute_force_optimum(d, c).can_win) return c;
  }
  // Winning means every pair is separated, i.e. the encoding is injective,
  // which needs all d levels.
  return d;
}

}  // namespace pairguess
