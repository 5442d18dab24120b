#include "pairguess/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <thread>
#include <utility>

#include "pairguess/errors.hpp"
#include "pairguess/game.hpp"
#include "pairguess/rng.hpp"

namespace pairguess {

namespace {

using Objective = std::function<double(const std::vector<double>&)>;

struct SimplexPoint {
  std::vector<double> x;
  double f = 0.0;
};

// Standard Nelder-Mead minimizer (reflection 1, expansion 2, contraction
// 1/2, shrink 1/2). Stops when the simplex's value spread collapses or the
// iteration cap is hit; returns the best vertex.
SimplexPoint nelder_mead_min(const Objective& f, const std::vector<double>& start, double step,
                             int max_iter) {
  const std::size_t n = start.size();
  std::vector<SimplexPoint> simplex(n + 1);
  simplex[0] = {start, f(start)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x = start;
    x[i] += step;
    simplex[i + 1] = {std::move(x), 0.0};
    simplex[i + 1].f = f(simplex[i + 1].x);
  }

  auto by_value = [](const SimplexPoint& a, const SimplexPoint& b) { return a.f < b.f; };

  for (int iter = 0; iter < max_iter; ++iter) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (simplex[n].f - simplex[0].f < 1e-13) break;

    // Centroid of all vertices but the worst.
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i].x[k] / n;

    auto blend = [&](double coeff) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k)
        x[k] = centroid[k] + coeff * (centroid[k] - simplex[n].x[k]);
      return x;
    };

    std::vector<double> reflected = blend(1.0);
    const double fr = f(reflected);
    if (fr < simplex[0].f) {
      std::vector<double> expanded = blend(2.0);
      const double fe = f(expanded);
      if (fe < fr)
        simplex[n] = {std::move(expanded), fe};
      else
        simplex[n] = {std::move(reflected), fr};
      continue;
    }
    if (fr < simplex[n - 1].f) {
      simplex[n] = {std::move(reflected), fr};
      continue;
    }
    std::vector<double> contracted = blend(fr < simplex[n].f ? 0.5 : -0.5);
    const double fc = f(contracted);
    if (fc < std::min(fr, simplex[n].f)) {
      simplex[n] = {std::move(contracted), fc};
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k)
        simplex[i].x[k] = simplex[0].x[k] + 0.5 * (simplex[i].x[k] - simplex[0].x[k]);
      simplex[i].f = f(simplex[i].x);
    }
  }

  std::sort(simplex.begin(), simplex.end(), by_value);
  return simplex[0];
}

// Gauge-fixed parametrization: state 1 is the pole, state 2 has zero
// azimuth, states 3..d carry polar and azimuthal angles.
Ensemble ensemble_from_params(int d, const std::vector<double>& params) {
  auto bloch = [](double theta, double phi) {
    return make_state(std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi));
  };
  Ensemble e;
  e.states.reserve(d);
  e.states.push_back(make_state(1.0, 0.0));
  e.states.push_back(bloch(params[0], 0.0));
  for (int k = 3; k <= d; ++k)
    e.states.push_back(bloch(params[1 + 2 * (k - 3)], params[2 + 2 * (k - 3)]));
  return e;
}

std::vector<double> random_start(int d, SplitStream& rng) {
  std::vector<double> params;
  params.reserve(1 + 2 * (d - 2));
  params.push_back(rng.next_double() * std::numbers::pi);
  for (int k = 3; k <= d; ++k) {
    params.push_back(rng.next_double() * std::numbers::pi);
    params.push_back(rng.next_double() * 2.0 * std::numbers::pi);
  }
  return params;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

EnsembleOptimum optimize_ensemble(int d, int restarts, std::uint64_t seed, int threads) {
  if (d < 3) throw DomainError("dimension must be >= 3, got " + std::to_string(d));
  if (restarts < 1) throw DomainError("restarts must be >= 1, got " + std::to_string(restarts));
  if (threads < 1) throw DomainError("threads must be >= 1, got " + std::to_string(threads));

  const GameSpec spec = canonical_spec(d);
  const Objective objective = [&](const std::vector<double>& params) {
    const QuantumStrategy strategy{ensemble_from_params(d, params), 0.0};
    return -average_success(success_matrix(strategy, spec), spec);
  };

  std::vector<SimplexPoint> outcomes(restarts);
  auto run_restarts = [&](int begin, int end) {
    for (int r = begin; r < end; ++r) {
      SplitStream rng = SplitStream::substream(seed, static_cast<std::uint64_t>(r));
      outcomes[r] = nelder_mead_min(objective, random_start(d, rng), 0.6, 4000);
    }
  };

  const int workers = std::min(threads, restarts);
  if (workers <= 1) {
    run_restarts(0, restarts);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(run_restarts, restarts * w / workers, restarts * (w + 1) / workers);
    for (std::thread& t : pool) t.join();
  }

  // Lowest objective wins; ties go to the earliest restart, so the
  // reduction is independent of how restarts were scheduled.
  int best = 0;
  for (int r = 1; r < restarts; ++r)
    if (outcomes[r].f < outcomes[best].f) best = r;

  const SimplexPoint polished = nelder_mead_min(objective, outcomes[best].x, 0.05, 4000);
  return {ensemble_from_params(d, polished.x), -polished.f};
}

DeltaOptimum maximize_delta(DeltaProblem which, double grid_step) {
  if (!(grid_step > 0.0 && grid_step <= 0.01))
    throw DomainError("grid_step must lie in (0, 0.01], got " + std::to_string(grid_step));

  const int dims = which == DeltaProblem::d3 ? 2 : 3;
  const auto evaluate = [&](const std::vector<double>& m) {
    return which == DeltaProblem::d3 ? delta_bound_d3(m[0], m[1])
                                     : delta_bound_d4(m[0], m[1], m[2]);
  };

  const int points = static_cast<int>(std::floor(1.0 / grid_step)) + 1;
  auto coord = [&](int k) { return std::min(k * grid_step, 1.0); };

  // Full grid scan; first maximum in scan order is kept, so the result
  // does not depend on evaluation scheduling.
  std::vector<double> best(dims, 0.0);
  double best_value = -1.0;
  std::vector<int> idx(dims, 0);
  for (;;) {
    std::vector<double> m(dims);
    for (int k = 0; k < dims; ++k) m[k] = coord(idx[k]);
    const double v = evaluate(m);
    if (v > best_value) {
      best_value = v;
      best = m;
    }
    int pos = dims - 1;
    while (pos >= 0 && ++idx[pos] == points) idx[pos--] = 0;
    if (pos < 0) break;
  }

  // Local refinement from the best grid point; the box boundary is walled
  // off by clamping inside the objective.
  const Objective objective = [&](const std::vector<double>& m) {
    std::vector<double> c(m);
    for (double& v : c) v = clamp01(v);
    return -evaluate(c);
  };
  const SimplexPoint refined = nelder_mead_min(objective, best, grid_step, 4000);

  DeltaOptimum result;
  result.magnitudes = refined.x;
  for (double& v : result.magnitudes) v = clamp01(v);
  result.value = evaluate(result.magnitudes);
  return result;
}

}  // namespace pairguess
