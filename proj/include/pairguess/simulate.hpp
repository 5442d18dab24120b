#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pairguess/game.hpp"
#include "pairguess/records.hpp"

namespace pairguess {

// Runs `rounds` rounds of the game under `strategy` and hands each record
// to `sink` in round order (constant memory). Every round draws from its
// own substream of `seed` in the fixed order j, x, outcome, so the stream
// is identical however the rounds are scheduled. The receiver plays the
// induced decoder (classical) or the per-set Helstrom measurement
// (quantum, sampled through the strategy's noise).
void simulate(const Strategy& strategy, const GameSpec& spec, std::int64_t rounds,
              std::uint64_t seed, const std::function<void(const RoundRecord&)>& sink);

std::vector<RoundRecord> simulate_rounds(const Strategy& strategy, const GameSpec& spec,
                                         std::int64_t rounds, std::uint64_t seed);

// Fraction of rounds with guess == x. InsufficientData when empty.
double empirical_average(const std::vector<RoundRecord>& records);

}  // namespace pairguess
