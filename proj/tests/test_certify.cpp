#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "pairguess/certify.hpp"
#include "pairguess/classical.hpp"
#include "pairguess/errors.hpp"
#include "pairguess/simulate.hpp"
#include "pairguess/version.hpp"

using namespace pairguess;

namespace {

// Frozen: sqrt(ln(2/0.01) / (2 * 1e5)).
constexpr double POOLED_RADIUS_1E5 = 0.005146997846584;

// Counts whose frequencies match the exact success matrix to ~1/per_cell.
CellCounts counts_from_exact(const Strategy& strategy, const GameSpec& spec,
                             std::int64_t per_cell) {
  const SuccessMatrix matrix = success_matrix(strategy, spec);
  CellCounts counts(spec);
  for (int j = 1; j <= spec.num_sets(); ++j) {
    const PairSet& s = spec.set(j);
    for (int i : {s.lo, s.hi})
      counts.add_counts(i, j, per_cell,
                        std::llround(matrix.at(i, j) * static_cast<double>(per_cell)));
  }
  return counts;
}

CellCounts uniform_counts(const GameSpec& spec, std::int64_t n, std::int64_t s) {
  CellCounts counts(spec);
  for (int j = 1; j <= spec.num_sets(); ++j) {
    const PairSet& set = spec.set(j);
    counts.add_counts(set.lo, j, n, s);
    counts.add_counts(set.hi, j, n, s);
  }
  return counts;
}

}  // namespace

TEST_CASE("record folding tallies each cell") {
  const std::vector<RoundRecord> records = {
      {1, 1, 1, 1}, {2, 2, 1, 1}, {3, 1, 2, 3}, {4, 3, 2, 3}, {5, 2, 3, 2}, {6, 3, 3, 2},
  };
  const CellCounts counts = empirical_matrix(records, 3);
  CHECK(counts.total_rounds() == 6);
  CHECK(counts.n(1, 1) == 1);
  CHECK(counts.s(1, 1) == 1);
  CHECK(counts.n(2, 1) == 1);
  CHECK(counts.s(2, 1) == 0);
  CHECK(counts.s(3, 2) == 1);
  CHECK(counts.s(2, 3) == 1);
  CHECK(counts.s(3, 3) == 0);
  // Half the guesses were right, uniformly spread, so the witness is 1/2.
  CHECK(witness_value(counts, canonical_spec(3)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("folding rejects inconsistent records by number") {
  const GameSpec spec = canonical_spec(3);
  CellCounts counts(spec);
  counts.add({1, 1, 1, 1}, 1);

  auto expect_bad = [&](const RoundRecord& r, const char* fragment) {
    try {
      CellCounts fresh(spec);
      fresh.add({1, 1, 1, 1}, 1);
      fresh.add(r, 2);
      FAIL("expected InvalidRecord");
    } catch (const InvalidRecord& e) {
      CHECK(e.record_number == 2);
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_bad({2, 9, 1, 1}, "not a member");
  expect_bad({2, 2, 2, 1}, "not a member");  // S_2 = {1,3}
  expect_bad({2, 1, 7, 1}, "outside");
  expect_bad({2, 1, 1, 9}, "guess");
}

TEST_CASE("witness refuses cells with no data and names them") {
  const GameSpec spec = canonical_spec(3);
  CellCounts counts(spec);
  counts.add_counts(1, 1, 10, 9);
  try {
    witness_value(counts, spec);
    FAIL("expected InsufficientData");
  } catch (const InsufficientData& e) {
    const std::string message = e.what();
    CHECK(message.find("(i=2,j=1)") != std::string::npos);
    CHECK(message.find("(i=1,j=2)") != std::string::npos);
    CHECK(message.find("(i=1,j=1)") == std::string::npos);
  }
}

TEST_CASE("cell count validation") {
  const GameSpec spec = canonical_spec(3);
  CellCounts counts(spec);
  CHECK_THROWS_AS(counts.add_counts(1, 1, 10, 11), DomainError);
  CHECK_THROWS_AS(counts.add_counts(1, 1, -1, 0), DomainError);
  CHECK_THROWS_AS(counts.add_counts(2, 2, 10, 5), InvalidRecord);  // 2 not in S_2

  CellCounts other(canonical_spec(4));
  CHECK_THROWS_AS(counts.merge(other), DimensionMismatch);
}

TEST_CASE("verdicts at exact frequencies match the analytic gap") {
  struct Case {
    Strategy strategy;
    int d;
    QuantumnessVerdict quantumness;
    CoherenceVerdict coherence;
  };
  const std::vector<Case> cases = {
      {QuantumStrategy{trine(), 0.0}, 3, QuantumnessVerdict::QUANTUM,
       CoherenceVerdict::COHERENT},
      {QuantumStrategy{tetrad(), 0.0}, 4, QuantumnessVerdict::QUANTUM,
       CoherenceVerdict::COHERENT},
      {QuantumStrategy{polygon(5), 0.0}, 5, QuantumnessVerdict::QUANTUM,
       CoherenceVerdict::COHERENT},
      // The best classical strategy sits exactly on the bound.
      {ClassicalStrategy{balanced_encoding(3, 2), 2}, 3, QuantumnessVerdict::NOT_CERTIFIED,
       CoherenceVerdict::NOT_CERTIFIED},
      // Heavy noise kills the advantage but every cell stays above 1/2.
      {QuantumStrategy{trine(), 0.8}, 3, QuantumnessVerdict::NOT_CERTIFIED,
       CoherenceVerdict::COHERENT},
  };
  for (const Case& c : cases) {
    const GameSpec spec = canonical_spec(c.d);
    const CellCounts counts = counts_from_exact(c.strategy, spec, 10'000'000'000);
    const WitnessReport report = certify(counts, spec, 0.01);
    CHECK(report.quantumness_verdict == c.quantumness);
    CHECK(report.coherence_verdict == c.coherence);
    const double exact = average_success(success_matrix(c.strategy, spec), spec);
    CHECK(report.witness == doctest::Approx(exact).epsilon(1e-9));
    CHECK(report.design_mismatch == false);
  }
}

TEST_CASE("simulated trine run certifies as quantum and coherent") {
  const GameSpec spec = canonical_spec(3);
  const auto records = simulate_rounds(QuantumStrategy{trine(), 0.0}, spec, 100'000, 42);
  const WitnessReport report = certify_quantumness(records, 3, 0.01);

  CHECK(report.quantumness_verdict == QuantumnessVerdict::QUANTUM);
  CHECK(report.coherence_verdict == CoherenceVerdict::COHERENT);
  CHECK(std::abs(report.confidence_radius - POOLED_RADIUS_1E5) < 1e-9);
  CHECK(report.classical_bound == balanced_partition_optimum(3, 2));
  CHECK(report.d == 3);
  CHECK(report.total_rounds == 100'000);
  CHECK(report.alpha == 0.01);
  CHECK(report.cells.size() == 6);
  CHECK(report.bound_name == "hoeffding");
  CHECK(report.tool_version == VERSION);
  CHECK(report.design_mismatch == false);
  CHECK(report.witness ==
        doctest::Approx(witness_value(empirical_matrix(records, 3), spec)).epsilon(1e-12));
  CHECK(certify_coherence(records, 3, 0.01) == CoherenceVerdict::COHERENT);

  std::int64_t cell_total = 0;
  for (const CellStat& cell : report.cells) {
    CHECK(cell.frequency ==
          doctest::Approx(static_cast<double>(cell.s) / static_cast<double>(cell.n))
              .epsilon(1e-15));
    cell_total += cell.n;
  }
  CHECK(cell_total == 100'000);
}

TEST_CASE("simulated classical run is not certified") {
  const auto records = simulate_rounds(ClassicalStrategy{balanced_encoding(3, 2), 2},
                                       canonical_spec(3), 100'000, 42);
  const WitnessReport report = certify_quantumness(records, 3, 0.01);
  CHECK(report.quantumness_verdict == QuantumnessVerdict::NOT_CERTIFIED);
  CHECK(report.coherence_verdict == CoherenceVerdict::NOT_CERTIFIED);
}

TEST_CASE("noisy trine keeps coherence but loses quantumness") {
  const auto records =
      simulate_rounds(QuantumStrategy{trine(), 0.8}, canonical_spec(3), 100'000, 42);
  const WitnessReport report = certify_quantumness(records, 3, 0.01);
  CHECK(report.quantumness_verdict == QuantumnessVerdict::NOT_CERTIFIED);
  CHECK(report.coherence_verdict == CoherenceVerdict::COHERENT);
}

TEST_CASE("certification input validation") {
  const GameSpec spec = canonical_spec(3);
  CHECK_THROWS_AS(certify(CellCounts(spec), spec, 0.01), InsufficientData);

  const CellCounts counts = uniform_counts(spec, 100, 90);
  CHECK_THROWS_AS(certify(counts, spec, 0.0), DomainError);
  CHECK_THROWS_AS(certify(counts, spec, 0.5), DomainError);
  CHECK_THROWS_AS(certify(counts, spec, 0.6), DomainError);
  CHECK_THROWS_AS(certify(counts, spec, -0.01), DomainError);
}

TEST_CASE("merging shards reproduces the whole") {
  const GameSpec spec = canonical_spec(4);
  const Strategy strategy = QuantumStrategy{tetrad(), 0.1};
  const auto first = simulate_rounds(strategy, spec, 30'000, 101);
  const auto second = simulate_rounds(strategy, spec, 20'000, 202);

  CellCounts merged = empirical_matrix(first, 4);
  merged.merge(empirical_matrix(second, 4));

  std::vector<RoundRecord> whole = first;
  whole.insert(whole.end(), second.begin(), second.end());
  const CellCounts folded = empirical_matrix(whole, 4);

  CHECK(merged.total_rounds() == folded.total_rounds());
  for (int j = 1; j <= spec.num_sets(); ++j) {
    const PairSet& s = spec.set(j);
    for (int i : {s.lo, s.hi}) {
      CHECK(merged.n(i, j) == folded.n(i, j));
      CHECK(merged.s(i, j) == folded.s(i, j));
    }
  }
  CHECK(witness_value(merged, spec) == witness_value(folded, spec));
}

TEST_CASE("more rounds at the same frequency sharpen the verdict") {
  const GameSpec spec = canonical_spec(3);
  // Frequency 0.84 sits above the classical bound 5/6 but inside the
  // confidence radius at 600 rounds, outside it at 600000.
  const WitnessReport coarse = certify(uniform_counts(spec, 100, 84), spec, 0.01);
  CHECK(coarse.quantumness_verdict == QuantumnessVerdict::NOT_CERTIFIED);
  const WitnessReport sharp = certify(uniform_counts(spec, 100'000, 84'000), spec, 0.01);
  CHECK(sharp.quantumness_verdict == QuantumnessVerdict::QUANTUM);
  CHECK(sharp.witness == coarse.witness);
  CHECK(sharp.confidence_radius < coarse.confidence_radius);
}

TEST_CASE("coherence flips exactly at the per-cell corrected bound") {
  // With n = 16667 per cell and alpha split over M = 6 cells, the
  // one-sided radius is 0.0138529; s = 8567 clears 1/2 and s = 8564
  // does not. A pooled or unsplit radius would misclassify one of them.
  const GameSpec spec = canonical_spec(3);
  CHECK(certify(uniform_counts(spec, 16667, 8567), spec, 0.01).coherence_verdict ==
        CoherenceVerdict::COHERENT);
  CHECK(certify(uniform_counts(spec, 16667, 8564), spec, 0.01).coherence_verdict ==
        CoherenceVerdict::NOT_CERTIFIED);
}

TEST_CASE("off-design input counts raise the mismatch flag") {
  const GameSpec spec = canonical_spec(3);
  CellCounts skewed(spec);
  skewed.add_counts(1, 1, 100, 90);
  skewed.add_counts(2, 1, 100, 90);
  skewed.add_counts(1, 2, 100, 90);
  skewed.add_counts(3, 2, 100, 90);
  skewed.add_counts(2, 3, 100, 90);
  skewed.add_counts(3, 3, 10'000, 9'000);
  CHECK(certify(skewed, spec, 0.01).design_mismatch == true);

  CHECK(certify(uniform_counts(spec, 100, 90), spec, 0.01).design_mismatch == false);
}

TEST_CASE("relabeling the values leaves the witness unchanged") {
  const GameSpec spec = canonical_spec(4);
  const auto records = simulate_rounds(QuantumStrategy{tetrad(), 0.0}, spec, 20'000, 23);

  const std::vector<int> sigma = {3, 1, 4, 2};  // image of value v is sigma[v-1]
  auto set_of = [&spec](int a, int b) {
    if (a > b) std::swap(a, b);
    for (int j = 1; j <= spec.num_sets(); ++j)
      if (spec.set(j).lo == a && spec.set(j).hi == b) return j;
    throw DomainError("missing set");
  };
  std::vector<RoundRecord> relabeled;
  for (const RoundRecord& r : records) {
    const PairSet& s = spec.set(r.j);
    relabeled.push_back(
        {r.round, sigma[r.x - 1], set_of(sigma[s.lo - 1], sigma[s.hi - 1]), sigma[r.guess - 1]});
  }

  const double original = witness_value(empirical_matrix(records, 4), spec);
  const double mapped = witness_value(empirical_matrix(relabeled, 4), spec);
  CHECK(std::abs(original - mapped) < 1e-12);
}

TEST_CASE("reports carry both renderings") {
  const auto records =
      simulate_rounds(QuantumStrategy{trine(), 0.0}, canonical_spec(3), 10'000, 9);
  const WitnessReport report = certify_quantumness(records, 3, 0.05);

  const std::string text = report_text(report);
  CHECK(text.find("witness value") != std::string::npos);
  CHECK(text.find("QUANTUM") != std::string::npos);
  CHECK(text.find("hoeffding") != std::string::npos);

  const std::string json = report_json(report);
  CHECK(json.find("\"witness_value\"") != std::string::npos);
  CHECK(json.find("\"bound\": \"hoeffding\"") != std::string::npos);
  CHECK(json.find("\"cells\"") != std::string::npos);
}
