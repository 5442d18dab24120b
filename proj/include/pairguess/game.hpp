#pragma once

#include <variant>
#include <vector>

#include "pairguess/ensembles.hpp"

namespace pairguess {

// Two-element candidate set {lo, hi} of value indices, 1-based, lo < hi.
struct PairSet {
  int lo = 0;
  int hi = 0;

  bool contains(int i) const { return i == lo || i == hi; }
  int other(int i) const { return i == lo ? hi : lo; }
};

// The game for dimension d: every two-element subset of {1..d} in
// lexicographic order (set index j = 1..d(d-1)/2) plus the probability
// with which the referee draws each set.
struct GameSpec {
  int d = 0;
  std::vector<PairSet> pair_sets;
  std::vector<double> set_distribution;

  int num_sets() const { return static_cast<int>(pair_sets.size()); }
  const PairSet& set(int j) const { return pair_sets[j - 1]; }
  double weight(int j) const { return set_distribution[j - 1]; }
};

// Lexicographic sets, uniform distribution. DomainError for d < 3.
GameSpec canonical_spec(int d);

// The d-1 set indices j with i in S_j. DomainError on out-of-range i.
std::vector<int> allowed_sets(const GameSpec& spec, int i);

// Sender strategy using classical messages: value v is sent as level
// encoding[v-1] in {0..levels-1}. The receiver decodes by elimination:
// name the unique member of S_j consistent with the message, or guess
// uniformly when both members share a level.
struct ClassicalStrategy {
  std::vector<int> encoding;
  int levels = 0;

  int dimension() const { return static_cast<int>(encoding.size()); }
};

// Sender strategy using one qubit per round, optionally depolarized.
struct QuantumStrategy {
  Ensemble ensemble;
  double noise = 0.0;

  int dimension() const { return ensemble.dimension(); }
};

using Strategy = std::variant<ClassicalStrategy, QuantumStrategy>;

int strategy_dimension(const Strategy& strategy);

// One valid cell of the success matrix: the probability that the receiver
// names i when the referee drew value i and set j (i must lie in S_j).
struct SuccessCell {
  int i = 0;
  int j = 0;
  double p = 0.0;
};

// Exact per-cell success probabilities: two cells per set, d-1 sets per
// value. Cells are ordered by set index, lower member first.
class SuccessMatrix {
 public:
  SuccessMatrix(int d, std::vector<SuccessCell> cells);

  int d() const { return d_; }
  const std::vector<SuccessCell>& cells() const { return cells_; }

  // Cell lookup; DomainError when (i, j) is not a valid cell.
  double at(int i, int j) const;

 private:
  int d_;
  std::vector<SuccessCell> cells_;
};

// Exact evaluation, no sampling. Classical cell (i,j) with S_j = {i,k}:
// 1 when the encoding separates i from k, else 1/2. Quantum cell:
// helstrom_success of the two member states under the strategy's noise.
SuccessMatrix success_matrix(const Strategy& strategy, const GameSpec& spec);

// Sum over sets of weight(j) * 1/2 * (p(lo|j) + p(hi|j)).
double average_success(const SuccessMatrix& matrix, const GameSpec& spec);

double min_cell(const SuccessMatrix& matrix);

// The game is won only when every cell clears 1/2; ties lose.
bool wins(const SuccessMatrix& matrix);

}  // namespace pairguess
