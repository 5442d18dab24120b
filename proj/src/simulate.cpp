#include "pairguess/simulate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pairguess/errors.hpp"
#include "pairguess/rng.hpp"

namespace pairguess {

void simulate(const Strategy& strategy, const GameSpec& spec, std::int64_t rounds,
              std::uint64_t seed, const std::function<void(const RoundRecord&)>& sink) {
  if (rounds < 0) throw DomainError("rounds must be >= 0, got " + std::to_string(rounds));
  // Evaluating the matrix up front also validates spec and strategy.
  (void)success_matrix(strategy, spec);

  // The receiver's measurement for each set is fixed by the strategy, so
  // build all of them once.
  std::vector<TwoOutcomeMeasurement> measurements;
  if (const auto* q = std::get_if<QuantumStrategy>(&strategy)) {
    measurements.reserve(spec.pair_sets.size());
    for (const PairSet& s : spec.pair_sets)
      measurements.push_back(
          helstrom_measurement(q->ensemble.states[s.lo - 1], q->ensemble.states[s.hi - 1]));
  }

  std::vector<double> cumulative(spec.set_distribution.size());
  std::partial_sum(spec.set_distribution.begin(), spec.set_distribution.end(),
                   cumulative.begin());
  cumulative.back() = 1.0;

  for (std::int64_t r = 0; r < rounds; ++r) {
    SplitStream rng = SplitStream::substream(seed, static_cast<std::uint64_t>(r));

    const double u = rng.next_double();
    const int j = static_cast<int>(
        std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin() + 1);
    const PairSet& s = spec.set(j);
    const int x = rng.next_double() < 0.5 ? s.lo : s.hi;

    int guess;
    if (const auto* c = std::get_if<ClassicalStrategy>(&strategy)) {
      const int message = c->encoding[x - 1];
      if (c->encoding[s.lo - 1] != c->encoding[s.hi - 1])
        guess = message == c->encoding[s.lo - 1] ? s.lo : s.hi;
      else
        guess = rng.next_double() < 0.5 ? s.lo : s.hi;
    } else {
      const auto& q = std::get<QuantumStrategy>(strategy);
      const double p0 =
          born_probability(q.ensemble.states[x - 1], measurements[j - 1], 0, q.noise);
      guess = sample_outcome(rng, p0) == 0 ? s.lo : s.hi;
    }

    sink({r + 1, x, j, guess});
  }
}

std::vector<RoundRecord> simulate_rounds(const Strategy& strategy, const GameSpec& spec,
                                         std::int64_t rounds, std::uint64_t seed) {
  std::vector<RoundRecord> records;
  if (rounds > 0) records.reserve(static_cast<std::size_t>(rounds));
  simulate(strategy, spec, rounds, seed, [&records](const RoundRecord& r) { records.push_back(r); });
  return records;
}

double empirical_average(const std::vector<RoundRecord>& records) {
  if (records.empty()) throw InsufficientData("no rounds to average");
  std::int64_t correct = 0;
  for (const RoundRecord& r : records) correct += r.guess == r.x;
  return static_cast<double>(correct) / static_cast<double>(records.size());
}

}  // namespace pairguess
