#include "pairguess/certify.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "pairguess/classical.hpp"
#include "pairguess/errors.hpp"
#include "pairguess/version.hpp"

namespace pairguess {

CellCounts::CellCounts(const GameSpec& spec) : spec_(spec) {
  n_.assign(2 * spec_.pair_sets.size(), 0);
  s_.assign(2 * spec_.pair_sets.size(), 0);
}

std::size_t CellCounts::cell_index(int i, int j, std::size_t record_number) const {
  if (j < 1 || j > spec_.num_sets())
    throw InvalidRecord(record_number, "set index j=" + std::to_string(j) + " outside 1.." +
                                           std::to_string(spec_.num_sets()));
  const PairSet& s = spec_.set(j);
  if (!s.contains(i))
    throw InvalidRecord(record_number, "x=" + std::to_string(i) + " is not a member of S_" +
                                           std::to_string(j) + " = {" + std::to_string(s.lo) +
                                           "," + std::to_string(s.hi) + "}");
  return 2 * static_cast<std::size_t>(j - 1) + (i == s.lo ? 0 : 1);
}

void CellCounts::add(const RoundRecord& record, std::size_t record_number) {
  if (record.guess < 1 || record.guess > spec_.d)
    throw InvalidRecord(record_number, "guess=" + std::to_string(record.guess) +
                                           " outside 1.." + std::to_string(spec_.d));
  const std::size_t cell = cell_index(record.x, record.j, record_number);
  ++n_[cell];
  s_[cell] += record.guess == record.x;
  ++total_;
}

void CellCounts::add_counts(int i, int j, std::int64_t n, std::int64_t s) {
  if (n < 0 || s < 0 || s > n) throw DomainError("cell counts need 0 <= s <= n");
  const std::size_t cell = cell_index(i, j, 0);
  n_[cell] += n;
  s_[cell] += s;
  total_ += n;
}

void CellCounts::merge(const CellCounts& other) {
  if (other.spec_.d != spec_.d || other.n_.size() != n_.size())
    throw DimensionMismatch("cannot merge counts for different games");
  for (std::size_t k = 0; k < n_.size(); ++k) {
    n_[k] += other.n_[k];
    s_[k] += other.s_[k];
  }
  total_ += other.total_;
}

std::int64_t CellCounts::n(int i, int j) const { return n_[cell_index(i, j, 0)]; }

std::int64_t CellCounts::s(int i, int j) const { return s_[cell_index(i, j, 0)]; }

CellCounts empirical_matrix(const std::vector<RoundRecord>& records, int d) {
  CellCounts counts(canonical_spec(d));
  std::size_t record_number = 0;
  for (const RoundRecord& r : records) counts.add(r, ++record_number);
  return counts;
}

double witness_value(const CellCounts& counts, const GameSpec& spec) {
  std::string empty;
  for (int j = 1; j <= spec.num_sets(); ++j) {
    const PairSet& s = spec.set(j);
    for (int i : {s.lo, s.hi})
      if (counts.n(i, j) == 0)
        empty += (empty.empty() ? "" : ", ") + ("(i=" + std::to_string(i) +
                                                ",j=" + std::to_string(j) + ")");
  }
  if (!empty.empty()) throw InsufficientData("cells with no rounds: " + empty);

  double total = 0.0;
  for (int j = 1; j <= spec.num_sets(); ++j) {
    const PairSet& s = spec.set(j);
    for (int i : {s.lo, s.hi})
      total += spec.weight(j) * 0.5 * static_cast<double>(counts.s(i, j)) /
               static_cast<double>(counts.n(i, j));
  }
  return total;
}

const char* to_string(QuantumnessVerdict v) {
  return v == QuantumnessVerdict::QUANTUM ? "QUANTUM" : "NOT_CERTIFIED";
}

const char* to_string(CoherenceVerdict v) {
  return v == CoherenceVerdict::COHERENT ? "COHERENT" : "NOT_CERTIFIED";
}

WitnessReport certify(const CellCounts& counts, const GameSpec& spec, double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw DomainError("alpha must lie in (0, 0.5), got " + std::to_string(alpha));
  const std::int64_t total = counts.total_rounds();
  if (total == 0) throw InsufficientData("no rounds recorded");

  WitnessReport report;
  report.d = spec.d;
  report.total_rounds = total;
  report.alpha = alpha;
  report.witness = witness_value(counts, spec);
  report.classical_bound = balanced_partition_optimum(spec.d, 2);
  report.confidence_radius = std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(total)));
  report.quantumness_verdict = report.witness - report.confidence_radius > report.classical_bound
                                   ? QuantumnessVerdict::QUANTUM
                                   : QuantumnessVerdict::NOT_CERTIFIED;

  // Coherence: every cell's one-sided lower confidence bound must clear
  // 1/2; Bonferroni splits alpha over the M cells.
  const double cell_count = 2.0 * spec.num_sets();
  bool all_above_half = true;
  for (int j = 1; j <= spec.num_sets(); ++j) {
    const PairSet& s = spec.set(j);
    for (int i : {s.lo, s.hi}) {
      const std::int64_t n = counts.n(i, j);
      const double freq = static_cast<double>(counts.s(i, j)) / static_cast<double>(n);
      const double radius = std::sqrt(std::log(cell_count / alpha) / (2.0 * static_cast<double>(n)));
      if (!(freq - radius > 0.5)) all_above_half = false;
      report.cells.push_back({i, j, n, counts.s(i, j), freq});
    }
  }
  report.coherence_verdict =
      all_above_half ? CoherenceVerdict::COHERENT : CoherenceVerdict::NOT_CERTIFIED;

  // Input-frequency sanity check: under the design distribution cell
  // (i, j) is hit with probability weight(j)/2 per round.
  for (const CellStat& cell : report.cells) {
    const double q = spec.weight(cell.j) * 0.5;
    const double expected = static_cast<double>(total) * q;
    const double sd = std::sqrt(static_cast<double>(total) * q * (1.0 - q));
    const double deviation = std::abs(static_cast<double>(cell.n) - expected);
    if (sd == 0.0 ? cell.n != 0 : deviation > 5.0 * sd) report.design_mismatch = true;
  }

  report.bound_name = "hoeffding";
  report.tool_version = VERSION;
  return report;
}

WitnessReport certify_quantumness(const std::vector<RoundRecord>& records, int d, double alpha) {
  const GameSpec spec = canonical_spec(d);
  CellCounts counts(spec);
  std::size_t record_number = 0;
  for (const RoundRecord& r : records) counts.add(r, ++record_number);
  return certify(counts, spec, alpha);
}

CoherenceVerdict certify_coherence(const std::vector<RoundRecord>& records, int d, double alpha) {
  return certify_quantumness(records, d, alpha).coherence_verdict;
}

std::string report_text(const WitnessReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(7);
  out << "certification report (pairguess " << report.tool_version << ")\n";
  out << "dimension            : " << report.d << "\n";
  out << "total rounds         : " << report.total_rounds << "\n";
  out << "alpha                : " << report.alpha << "\n";
  out << "concentration bound  : " << report.bound_name << "\n";
  out << "design mismatch      : " << (report.design_mismatch ? "yes (input counts off-design)" : "no")
      << "\n";
  out << "cells (i, j, n, s, frequency):\n";
  for (const CellStat& cell : report.cells)
    out << "  i=" << cell.i << " j=" << cell.j << "  n=" << cell.n << "  s=" << cell.s
        << "  freq=" << cell.frequency << "\n";
  out << "witness value        : " << report.witness << "\n";
  out << "classical bound      : " << report.classical_bound << "\n";
  out << "confidence radius    : " << report.confidence_radius << "\n";
  out << "quantumness verdict  : " << to_string(report.quantumness_verdict) << "\n";
  out << "coherence verdict    : " << to_string(report.coherence_verdict) << "\n";
  return out.str();
}

std::string report_json(const WitnessReport& report) {
  nlohmann::json doc;
  doc["tool"] = "pairguess";
  doc["version"] = report.tool_version;
  doc["bound"] = report.bound_name;
  doc["d"] = report.d;
  doc["total_rounds"] = report.total_rounds;
  doc["alpha"] = report.alpha;
  doc["witness_value"] = report.witness;
  doc["classical_bound"] = report.classical_bound;
  doc["confidence_radius"] = report.confidence_radius;
  doc["quantumness_verdict"] = to_string(report.quantumness_verdict);
  doc["coherence_verdict"] = to_string(report.coherence_verdict);
  doc["design_mismatch"] = report.design_mismatch;
  doc["cells"] = nlohmann::json::array();
  for (const CellStat& cell : report.cells)
    doc["cells"].push_back({{"i", cell.i},
                            {"j", cell.j},
                            {"n", cell.n},
                            {"s", cell.s},
                            {"frequency", cell.frequency}});
  return doc.dump(2);
}

}  // namespace pairguess
