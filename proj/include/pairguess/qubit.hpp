#pragma once

#include <complex>

#include "pairguess/rng.hpp"

namespace pairguess {

using cplx = std::complex<double>;

// Normalized pure state of a two-level system. Amplitudes are kept exactly
// as given (no renormalization); construction rejects vectors whose squared
// norm is farther than EPS_ALG from 1.
class QubitState {
 public:
  QubitState(cplx amp0, cplx amp1);

  cplx amp0() const { return amp0_; }
  cplx amp1() const { return amp1_; }

 private:
  cplx amp0_;
  cplx amp1_;
};

QubitState make_state(cplx amp0, cplx amp1);

// 2x2 complex matrix, row-major.
struct Mat2 {
  cplx m00{}, m01{}, m10{}, m11{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  cplx trace() const { return m00 + m11; }
};

// Two-outcome POVM; the effects sum to the identity. For a pair of
// distinct states the effects are the projectors onto the positive and
// negative eigenspaces of |s1><s1| - |s2><s2|; for an equal-up-to-phase
// pair both effects degenerate to identity/2 (a fair coin).
struct TwoOutcomeMeasurement {
  Mat2 effect0;
  Mat2 effect1;
};

// <s1|s2>.
cplx overlap(const QubitState& s1, const QubitState& s2);

// Best achievable probability of telling s1 from s2 (equal priors) when
// the carrier is depolarized with strength `noise`:
//   1/2 * (1 + (1 - noise) * sqrt(1 - |<s1|s2>|^2)).
double helstrom_success(const QubitState& s1, const QubitState& s2, double noise);

// Measurement achieving helstrom_success; outcome 0 votes for s1.
TwoOutcomeMeasurement helstrom_measurement(const QubitState& s1, const QubitState& s2);

// Probability of `outcome` when the given state passes through the
// depolarizing channel and is then measured:
//   (1 - noise) * <state|E|state> + noise * tr(E) / 2.
double born_probability(const QubitState& state, const TwoOutcomeMeasurement& measurement,
                        int outcome, double noise);

// Draws one outcome: 0 with probability p0, else 1. Consumes exactly one
// value from the stream.
int sample_outcome(SplitStream& rng, double p0);

}  // namespace pairguess
