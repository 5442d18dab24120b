#include "pairguess/ensembles.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pairguess/errors.hpp"
#include "pairguess/tolerances.hpp"

namespace pairguess {

namespace {

void check_magnitude(const char* name, double v) {
  if (!(v >= 0.0 && v <= 1.0))
    throw DomainError(std::string(name) + " must lie in [0,1], got " + std::to_string(v));
}

}  // namespace

Ensemble trine() {
  const double h = std::sqrt(3.0) / 2.0;
  return {{
      make_state(1.0, 0.0),
      make_state(0.5, -h),
      make_state(0.5, h),
  }};
}

Ensemble tetrad() {
  const double top = 1.0 / std::sqrt(3.0);
  const double low = std::sqrt(2.0 / 3.0);
  const double third = 2.0 * std::numbers::pi / 3.0;
  return {{
      make_state(1.0, 0.0),
      make_state(top, -low),
      make_state(top, -low * std::polar(1.0, third)),
      make_state(top, -low * std::polar(1.0, -third)),
  }};
}

Ensemble polygon(int d) {
  if (d < 3) throw DomainError("polygon needs d >= 3, got " + std::to_string(d));
  Ensemble e;
  e.states.reserve(d);
  for (int k = 0; k < d; ++k) {
    const double t = k * std::numbers::pi / d;
    e.states.push_back(make_state(std::cos(t), std::sin(t)));
  }
  return e;
}

bool pairwise_linearly_independent(const Ensemble& ensemble) {
  const int d = ensemble.dimension();
  for (int i = 0; i < d; ++i)
    for (int k = i + 1; k < d; ++k)
      if (std::abs(overlap(ensemble.states[i], ensemble.states[k])) >= 1.0 - EPS_ALG)
        return false;
  return true;
}

bool has_universal_coherence(const Ensemble& ensemble) {
  // Collapse the ensemble to phase-distinct rays. More than two rays can
  // never share a basis; two (or fewer) can iff they are orthogonal.
  std::vector<const QubitState*> rays;
  for (const QubitState& s : ensemble.states) {
    bool seen = false;
    for (const QubitState* r : rays)
      if (std::abs(overlap(*r, s)) > 1.0 - EPS_ALG) {
        seen = true;
        break;
      }
    if (!seen) rays.push_back(&s);
  }

  if (rays.size() > 2) return true;
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t k = i + 1; k < rays.size(); ++k)
      if (std::abs(overlap(*rays[i], *rays[k])) >= EPS_ALG) return true;
  return false;
}

double delta_bound_d3(double a_mag, double c_mag) {
  check_magnitude("a_mag", a_mag);
  check_magnitude("c_mag", c_mag);
  return (1.0 + c_mag) * std::sqrt(1.0 - a_mag * a_mag) +
         (1.0 + a_mag) * std::sqrt(1.0 - c_mag * c_mag);
}

double delta_bound_d4(double a_mag, double c_mag, double e_mag) {
  check_magnitude("a_mag", a_mag);
  check_magnitude("c_mag", c_mag);
  check_magnitude("e_mag", e_mag);
  return (1.0 + c_mag + e_mag) * std::sqrt(1.0 - a_mag * a_mag) +
         (1.0 + a_mag + e_mag) * std::sqrt(1.0 - c_mag * c_mag) +
         (1.0 + a_mag + c_mag) * std::sqrt(1.0 - e_mag * e_mag);
}

double qrac_reference() {
  const double c = std::cos(std::numbers::pi / 8.0);
  return c * c;
}

}  // namespace pairguess
