#pragma once

// Centralized tolerances. EPS_ALG gates algorithmic decisions (winning
// threshold, state normalization, linear independence, measurement
// degeneracy). EPS_NUM is the tighter bound used when checking algebraic
// identities that should hold to rounding error.

namespace pairguess {

inline constexpr double EPS_ALG = 1e-9;
inline constexpr double EPS_NUM = 1e-12;

}  // namespace pairguess
