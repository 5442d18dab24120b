#pragma once

#include <cstdint>
#include <vector>

#include "pairguess/ensembles.hpp"

namespace pairguess {

struct EnsembleOptimum {
  Ensemble ensemble;
  double average = 0.0;
};

// Maximizes the exact noiseless average success over all d-state qubit
// encodings by multi-restart Nelder-Mead on Bloch angles. The global
// rotation freedom is fixed by pinning state 1 to the pole and state 2 to
// zero azimuth, leaving 1 + 2(d-2) parameters. Deterministic for a fixed
// seed; restarts run in disjoint random substreams, so splitting them
// across `threads` reproduces the serial result exactly.
EnsembleOptimum optimize_ensemble(int d, int restarts, std::uint64_t seed, int threads = 1);

enum class DeltaProblem { d3, d4 };

struct DeltaOptimum {
  std::vector<double> magnitudes;
  double value = 0.0;
};

// Maximizes delta_bound_d3/d4 over the unit box: full grid scan at
// `grid_step`, then local refinement from the best grid point.
// Deterministic. grid_step must lie in (0, 0.01].
DeltaOptimum maximize_delta(DeltaProblem which, double grid_step);

}  // namespace pairguess
