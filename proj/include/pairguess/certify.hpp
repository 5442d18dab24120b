#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pairguess/game.hpp"
#include "pairguess/records.hpp"

namespace pairguess {

// Per-cell round tallies folded from records: n = rounds with inputs
// (i, j), s = those the receiver got right. Counts are associative, so
// shards folded separately can be merged.
class CellCounts {
 public:
  explicit CellCounts(const GameSpec& spec);

  // Folds one record in; record_number (1-based) labels errors. Rejects
  // out-of-range indices and x outside S_j.
  void add(const RoundRecord& record, std::size_t record_number);

  // Direct cell injection, for merging pre-tallied shards.
  void add_counts(int i, int j, std::int64_t n, std::int64_t s);

  void merge(const CellCounts& other);

  std::int64_t n(int i, int j) const;
  std::int64_t s(int i, int j) const;
  std::int64_t total_rounds() const { return total_; }
  int d() const { return spec_.d; }
  const GameSpec& spec() const { return spec_; }

 private:
  std::size_t cell_index(int i, int j, std::size_t record_number) const;

  GameSpec spec_;
  std::vector<std::int64_t> n_;
  std::vector<std::int64_t> s_;
  std::int64_t total_ = 0;
};

CellCounts empirical_matrix(const std::vector<RoundRecord>& records, int d);

// Empirical analogue of average_success: sum_j w_j * 1/2 * sum_{i in S_j}
// s(i,j)/n(i,j). InsufficientData naming the empty cells if any cell has
// n = 0.
double witness_value(const CellCounts& counts, const GameSpec& spec);

enum class QuantumnessVerdict { QUANTUM, NOT_CERTIFIED };
enum class CoherenceVerdict { COHERENT, NOT_CERTIFIED };

const char* to_string(QuantumnessVerdict v);
const char* to_string(CoherenceVerdict v);

struct CellStat {
  int i = 0;
  int j = 0;
  std::int64_t n = 0;
  std::int64_t s = 0;
  double frequency = 0.0;
};

struct WitnessReport {
  int d = 0;
  std::int64_t total_rounds = 0;
  double alpha = 0.0;
  std::vector<CellStat> cells;
  double witness = 0.0;
  double classical_bound = 0.0;
  double confidence_radius = 0.0;
  QuantumnessVerdict quantumness_verdict = QuantumnessVerdict::NOT_CERTIFIED;
  CoherenceVerdict coherence_verdict = CoherenceVerdict::NOT_CERTIFIED;
  // Set when some (i, j) input count strays more than 5 standard
  // deviations from the design distribution, which undermines the pooled
  // witness bound.
  bool design_mismatch = false;
  std::string bound_name;  // "hoeffding"
  std::string tool_version;
};

// Both certificates from folded counts. The witness must beat
// classical_bound = balanced_partition_optimum(d, 2) by the pooled
// Hoeffding radius sqrt(ln(2/alpha) / 2N) for a QUANTUM verdict; the
// coherence verdict needs every cell's one-sided lower bound (Bonferroni
// over the M = d(d-1) cells) above 1/2. Assumes rounds drawn i.i.d. from
// the design distribution. alpha must lie in (0, 0.5).
WitnessReport certify(const CellCounts& counts, const GameSpec& spec, double alpha);

WitnessReport certify_quantumness(const std::vector<RoundRecord>& records, int d, double alpha);

CoherenceVerdict certify_coherence(const std::vector<RoundRecord>& records, int d, double alpha);

std::string report_text(const WitnessReport& report);
std::string report_json(const WitnessReport& report);

}  // namespace pairguess
