#include "pairguess/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pairguess/errors.hpp"
#include "pairguess/tolerances.hpp"

namespace pairguess {

namespace {

void check_noise(double noise) {
  if (!(noise >= 0.0 && noise <= 1.0))
    throw DomainError("noise must lie in [0,1], got " + std::to_string(noise));
}

// <s|M|s>, real part; M is Hermitian everywhere this is used.
double expectation(const QubitState& s, const Mat2& m) {
  const cplx a0 = s.amp0();
  const cplx a1 = s.amp1();
  return (std::conj(a0) * (m.m00 * a0 + m.m01 * a1) +
          std::conj(a1) * (m.m10 * a0 + m.m11 * a1))
      .real();
}

}  // namespace

QubitState::QubitState(cplx amp0, cplx amp1) : amp0_(amp0), amp1_(amp1) {
  const double norm2 = std::norm(amp0) + std::norm(amp1);
  if (std::abs(norm2 - 1.0) > EPS_ALG)
    throw NormalizationError("squared norm of amplitudes is " + std::to_string(norm2) +
                             ", expected 1");
}

QubitState make_state(cplx amp0, cplx amp1) { return QubitState(amp0, amp1); }

cplx overlap(const QubitState& s1, const QubitState& s2) {
  return std::conj(s1.amp0()) * s2.amp0() + std::conj(s1.amp1()) * s2.amp1();
}

double helstrom_success(const QubitState& s1, const QubitState& s2, double noise) {
  check_noise(noise);
  // |overlap|^2 can creep past 1 by rounding for near-identical states.
  const double ov2 = std::min(1.0, std::norm(overlap(s1, s2)));
  return 0.5 * (1.0 + (1.0 - noise) * std::sqrt(1.0 - ov2));
}

TwoOutcomeMeasurement helstrom_measurement(const QubitState& s1, const QubitState& s2) {
  // G = |s1><s1| - |s2><s2| is Hermitian and traceless, so its eigenvalues
  // are +/-mu with mu = sqrt(g00^2 + |g01|^2). Effect 0 projects onto the
  // +mu eigenvector.
  const double g00 = std::norm(s1.amp0()) - std::norm(s2.amp0());
  const cplx g01 = s1.amp0() * std::conj(s1.amp1()) - s2.amp0() * std::conj(s2.amp1());
  const double mu = std::sqrt(g00 * g00 + std::norm(g01));

  if (mu < EPS_ALG) {
    // Equal up to phase: no measurement beats a fair coin.
    const Mat2 half{0.5, 0.0, 0.0, 0.5};
    return {half, half};
  }

  // (g01, mu - g00) solves (G - mu)v = 0; it vanishes only when g01 = 0 and
  // g00 = +mu, in which case the eigenvector is |0> itself.
  cplx v0 = g01;
  cplx v1 = mu - g00;
  const double n2 = std::norm(v0) + std::norm(v1);
  if (n2 == 0.0) {
    v0 = 1.0;
    v1 = 0.0;
  } else {
    const double n = std::sqrt(n2);
    v0 /= n;
    v1 /= n;
  }

  Mat2 plus;
  plus.m00 = std::norm(v0);
  plus.m01 = v0 * std::conj(v1);
  plus.m10 = std::conj(plus.m01);
  plus.m11 = std::norm(v1);

  const Mat2 minus{1.0 - plus.m00, -plus.m01, -plus.m10, 1.0 - plus.m11};
  return {plus, minus};
}

double born_probability(const QubitState& state, const TwoOutcomeMeasurement& measurement,
                        int outcome, double noise) {
  check_noise(noise);
  if (outcome != 0 && outcome != 1)
    throw DomainError("outcome must be 0 or 1, got " + std::to_string(outcome));
  const Mat2& effect = outcome == 0 ? measurement.effect0 : measurement.effect1;
  const double p =
      (1.0 - noise) * expectation(state, effect) + noise * 0.5 * effect.trace().real();
  return std::clamp(p, 0.0, 1.0);
}

int sample_outcome(SplitStream& rng, double p0) {
  if (!(p0 >= 0.0 && p0 <= 1.0))
    throw DomainError("outcome probability must lie in [0,1], got " + std::to_string(p0));
  return rng.next_double() < p0 ? 0 : 1;
}

}  // namespace pairguess
