#include "pairguess/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pairguess/errors.hpp"
#include "pairguess/tolerances.hpp"

namespace pairguess {

namespace {

void validate_spec(const GameSpec& spec) {
  if (spec.d < 3) throw DomainError("game dimension must be >= 3, got " + std::to_string(spec.d));
  const int expected = spec.d * (spec.d - 1) / 2;
  if (spec.num_sets() != expected)
    throw DomainError("spec must list all " + std::to_string(expected) + " pair sets, found " +
                      std::to_string(spec.num_sets()));
  if (spec.set_distribution.size() != spec.pair_sets.size())
    throw DomainError("set_distribution size does not match pair_sets");
  double total = 0.0;
  for (double w : spec.set_distribution) {
    if (w < 0.0) throw DomainError("set_distribution has a negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > EPS_NUM)
    throw DomainError("set_distribution sums to " + std::to_string(total) + ", expected 1");
}

void validate_strategy(const Strategy& strategy) {
  if (const auto* c = std::get_if<ClassicalStrategy>(&strategy)) {
    if (c->levels < 1)
      throw DomainError("classical strategy needs levels >= 1, got " + std::to_string(c->levels));
    for (int level : c->encoding)
      if (level < 0 || level >= c->levels)
        throw DomainError("encoding level " + std::to_string(level) + " outside {0.." +
                          std::to_string(c->levels - 1) + "}");
  } else {
    const auto& q = std::get<QuantumStrategy>(strategy);
    if (!(q.noise >= 0.0 && q.noise <= 1.0))
      throw DomainError("noise must lie in [0,1], got " + std::to_string(q.noise));
  }
}

}  // namespace

GameSpec canonical_spec(int d) {
  if (d < 3) throw DomainError("game dimension must be >= 3, got " + std::to_string(d));
  GameSpec spec;
  spec.d = d;
  for (int lo = 1; lo <= d; ++lo)
    for (int hi = lo + 1; hi <= d; ++hi) spec.pair_sets.push_back({lo, hi});
  spec.set_distribution.assign(spec.pair_sets.size(), 1.0 / spec.pair_sets.size());
  return spec;
}

std::vector<int> allowed_sets(const GameSpec& spec, int i) {
  if (i < 1 || i > spec.d)
    throw DomainError("value index " + std::to_string(i) + " outside 1.." + std::to_string(spec.d));
  std::vector<int> sets;
  for (int j = 1; j <= spec.num_sets(); ++j)
    if (spec.set(j).contains(i)) sets.push_back(j);
  return sets;
}

int strategy_dimension(const Strategy& strategy) {
  return std::visit([](const auto& s) { return s.dimension(); }, strategy);
}

SuccessMatrix::SuccessMatrix(int d, std::vector<SuccessCell> cells)
    : d_(d), cells_(std::move(cells)) {
  for (const SuccessCell& cell : cells_)
    if (!(cell.p >= 0.0 && cell.p <= 1.0))
      throw DomainError("cell probability " + std::to_string(cell.p) + " outside [0,1]");
}

double SuccessMatrix::at(int i, int j) const {
  for (const SuccessCell& cell : cells_)
    if (cell.i == i && cell.j == j) return cell.p;
  throw DomainError("no cell (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
}

SuccessMatrix success_matrix(const Strategy& strategy, const GameSpec& spec) {
  validate_spec(spec);
  validate_strategy(strategy);
  if (strategy_dimension(strategy) != spec.d)
    throw DimensionMismatch("strategy covers " + std::to_string(strategy_dimension(strategy)) +
                            " values, game has " + std::to_string(spec.d));

  std::vector<SuccessCell> cells;
  cells.reserve(2 * spec.pair_sets.size());
  for (int j = 1; j <= spec.num_sets(); ++j) {
    const PairSet& s = spec.set(j);
    double p;
    if (const auto* c = std::get_if<ClassicalStrategy>(&strategy)) {
      p = c->encoding[s.lo - 1] != c->encoding[s.hi - 1] ? 1.0 : 0.5;
    } else {
      const auto& q = std::get<QuantumStrategy>(strategy);
      p = helstrom_success(q.ensemble.states[s.lo - 1], q.ensemble.states[s.hi - 1], q.noise);
    }
    // Both members of a set face the same two-state discrimination task,
    // so the two cells of a set always coincide.
    cells.push_back({s.lo, j, p});
    cells.push_back({s.hi, j, p});
  }
  return SuccessMatrix(spec.d, std::move(cells));
}

double average_success(const SuccessMatrix& matrix, const GameSpec& spec) {
  if (matrix.d() != spec.d)
    throw DimensionMismatch("matrix is for d=" + std::to_string(matrix.d()) + ", game has d=" +
                            std::to_string(spec.d));
  double total = 0.0;
  for (const SuccessCell& cell : matrix.cells()) total += spec.weight(cell.j) * 0.5 * cell.p;
  return total;
}

double min_cell(const SuccessMatrix& matrix) {
  double lowest = 1.0;
  for (const SuccessCell& cell : matrix.cells()) lowest = std::min(lowest, cell.p);
  return lowest;
}

bool wins(const SuccessMatrix& matrix) { return min_cell(matrix) > 0.5 + EPS_ALG; }

}  // namespace pairguess
