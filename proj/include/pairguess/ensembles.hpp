#pragma once

#include <vector>

#include "pairguess/qubit.hpp"

namespace pairguess {

// Qubit encoding of the values 1..d: states[k] carries value k+1.
struct Ensemble {
  std::vector<QubitState> states;

  int dimension() const { return static_cast<int>(states.size()); }
};

// Three states with pairwise overlap magnitude 1/2; the optimum for d = 3.
Ensemble trine();

// Four states with pairwise squared overlap 1/3 (equal phases spaced by
// 2pi/3 on the lower amplitude); the best known encoding for d = 4.
Ensemble tetrad();

// d real-amplitude states cos(k pi/d)|0> + sin(k pi/d)|1>, k = 0..d-1.
// Pairwise linearly independent for every d >= 3, so it wins the game at
// any dimension, though not optimally.
Ensemble polygon(int d);

// True iff every pair of states satisfies |<s|t>| < 1 - EPS_ALG.
bool pairwise_linearly_independent(const Ensemble& ensemble);

// True iff no single orthonormal basis diagonalizes every state, i.e. the
// ensemble is coherent in every basis. False exactly when at most two
// phase-distinct rays remain and they are mutually orthogonal.
bool has_universal_coherence(const Ensemble& ensemble);

// Distinguishability bounds limiting any three- or four-state qubit
// ensemble in terms of neighbour overlap magnitudes. For d = 3 with
// |<s1|s2>| = a, |<s2|s3>| = c:
//   (1 + c) sqrt(1 - a^2) + (1 + a) sqrt(1 - c^2).
double delta_bound_d3(double a_mag, double c_mag);

// d = 4 analogue with |<s1|s2>| = a, |<s2|s3>| = c, |<s3|s4>| = e.
double delta_bound_d4(double a_mag, double c_mag, double e_mag);

// cos^2(pi/8), the two-bit random access code optimum; printed alongside
// game values as a familiar yardstick.
double qrac_reference();

}  // namespace pairguess
