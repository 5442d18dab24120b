#include "pairguess/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "pairguess/certify.hpp"
#include "pairguess/classical.hpp"
#include "pairguess/errors.hpp"
#include "pairguess/game.hpp"
#include "pairguess/optimize.hpp"
#include "pairguess/simulate.hpp"
#include "pairguess/version.hpp"

namespace pairguess {

namespace {

struct StrategyFlags {
  std::string name;
  std::string ensemble_file;
  int d = 0;
  int levels = 2;
  double noise = 0.0;
};

struct ResolvedStrategy {
  Strategy strategy;
  std::string name;
  int d = 0;
};

void add_strategy_flags(CLI::App* cmd, StrategyFlags& flags) {
  cmd->add_option("--d", flags.d, "game dimension (number of values)");
  cmd->add_option("--strategy", flags.name,
                  "built-in strategy: trine, tetrad, polygon, classical-optimum");
  cmd->add_option("--ensemble-file", flags.ensemble_file,
                  "file with one state per line: Re amp0, Im amp0, Re amp1, Im amp1");
  cmd->add_option("--levels", flags.levels, "message levels for classical-optimum")
      ->capture_default_str();
  cmd->add_option("--noise", flags.noise, "depolarizing strength for quantum strategies")
      ->capture_default_str();
}

Ensemble load_ensemble_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ensemble file: " + path);
  Ensemble ensemble;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    double re0, im0, re1, im1;
    std::string extra;
    if (!(fields >> re0 >> im0 >> re1 >> im1) || fields >> extra)
      throw Error("ensemble file line " + std::to_string(line_number) +
                  ": expected four real numbers (Re amp0, Im amp0, Re amp1, Im amp1)");
    try {
      ensemble.states.push_back(make_state({re0, im0}, {re1, im1}));
    } catch (const NormalizationError& e) {
      throw Error("ensemble file line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  if (ensemble.states.empty()) throw Error("ensemble file has no states: " + path);
  return ensemble;
}

int require_d(const StrategyFlags& flags, const char* what) {
  if (flags.d <= 0) throw Error(std::string("--d is required for ") + what);
  return flags.d;
}

// Fixed-dimension built-ins accept a matching --d but reject others.
int fixed_d(const StrategyFlags& flags, int wanted, const std::string& name) {
  if (flags.d > 0 && flags.d != wanted)
    throw Error(name + " is a d=" + std::to_string(wanted) + " strategy, got --d " +
                std::to_string(flags.d));
  return wanted;
}

void reject_noise_for_classical(const StrategyFlags& flags) {
  if (flags.noise != 0.0) throw Error("--noise applies only to quantum strategies");
}

ResolvedStrategy resolve_strategy(const StrategyFlags& flags) {
  if (!flags.ensemble_file.empty()) {
    if (!flags.name.empty()) throw Error("give either --strategy or --ensemble-file, not both");
    Ensemble ensemble = load_ensemble_file(flags.ensemble_file);
    const int d = ensemble.dimension();
    if (flags.d > 0 && flags.d != d)
      throw Error("ensemble file has " + std::to_string(d) + " states, got --d " +
                  std::to_string(flags.d));
    return {QuantumStrategy{std::move(ensemble), flags.noise},
            "ensemble file " + flags.ensemble_file, d};
  }

  if (flags.name == "trine")
    return {QuantumStrategy{trine(), flags.noise}, "trine", fixed_d(flags, 3, "trine")};
  if (flags.name == "tetrad")
    return {QuantumStrategy{tetrad(), flags.noise}, "tetrad", fixed_d(flags, 4, "tetrad")};
  if (flags.name == "polygon") {
    const int d = require_d(flags, "polygon");
    return {QuantumStrategy{polygon(d), flags.noise}, "polygon(" + std::to_string(d) + ")", d};
  }
  if (flags.name == "classical-optimum") {
    const int d = require_d(flags, "classical-optimum");
    reject_noise_for_classical(flags);
    return {ClassicalStrategy{balanced_encoding(d, flags.levels), flags.levels},
            "classical-optimum", d};
  }
  if (flags.name.empty()) throw Error("no strategy given (use --strategy or --ensemble-file)");
  throw Error("unknown strategy: " + flags.name +
              " (built-ins: trine, tetrad, polygon, classical-optimum)");
}

std::string fraction(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

// Unseparated pairs of the best 2-level (1-cbit) encoding; feeds the
// printed fraction for the classical bound.
std::int64_t unseparated_two_level(int d) {
  const int q = d / 2;
  const int r = d % 2;
  return static_cast<std::int64_t>(r) * (q + 1) * q / 2 +
         static_cast<std::int64_t>(2 - r) * q * (q - 1) / 2;
}

std::string classical_cell_fraction(double p) { return p == 1.0 ? "1" : "1/2"; }

void print_strategy_details(std::ostream& out, const ResolvedStrategy& rs) {
  out << "strategy              : " << rs.name << "\n";
  if (const auto* c = std::get_if<ClassicalStrategy>(&rs.strategy)) {
    out << "message levels        : " << c->levels << "\n";
    out << "encoding              :";
    for (int level : c->encoding) out << " " << level;
    out << "\n";
  } else {
    out << "noise                 : " << std::get<QuantumStrategy>(rs.strategy).noise << "\n";
  }
}

int cmd_evaluate(const StrategyFlags& flags, std::ostream& out) {
  const ResolvedStrategy rs = resolve_strategy(flags);
  const GameSpec spec = canonical_spec(rs.d);
  const SuccessMatrix matrix = success_matrix(rs.strategy, spec);
  const bool classical = std::holds_alternative<ClassicalStrategy>(rs.strategy);

  out << std::fixed << std::setprecision(7);
  out << "game                  : d=" << rs.d << ", " << spec.num_sets()
      << " candidate sets, uniform design\n";
  print_strategy_details(out, rs);

  out << "success matrix:\n";
  for (int j = 1; j <= spec.num_sets(); ++j) {
    const PairSet& s = spec.set(j);
    out << "  j=" << j << "  S={" << s.lo << "," << s.hi << "}";
    for (int i : {s.lo, s.hi}) {
      const double p = matrix.at(i, j);
      out << "  p(" << i << ")=" << p;
      if (classical) out << " (" << classical_cell_fraction(p) << ")";
    }
    out << "\n";
  }

  const double average = average_success(matrix, spec);
  out << "average success       : " << average;
  if (classical) {
    std::int64_t halves = 0;
    for (const SuccessCell& cell : matrix.cells()) halves += cell.p == 0.5;
    const std::int64_t pairs = spec.num_sets();
    out << " (" << fraction(2 * pairs - halves / 2, 2 * pairs) << ")";
  }
  out << "\n";
  out << "min cell              : " << min_cell(matrix) << "\n";
  out << "wins                  : " << (wins(matrix) ? "yes" : "no") << "\n";
  const std::int64_t pairs = spec.num_sets();
  out << "classical 1-cbit bound: " << balanced_partition_optimum(rs.d, 2) << " ("
      << fraction(2 * pairs - unseparated_two_level(rs.d), 2 * pairs) << ")\n";
  out << "qrac reference        : " << qrac_reference() << "\n";
  return 0;
}

struct OptimizeFlags {
  int d = 0;
  std::string mode;
  int levels = 2;
  int restarts = 32;
  std::uint64_t seed = 1;
  double grid_step = 0.005;
  int threads = 1;
};

int cmd_optimize_classical(const OptimizeFlags& flags, std::ostream& out) {
  const BruteForceResult result = brute_force_optimum(flags.d, flags.levels, flags.threads);
  out << std::fixed << std::setprecision(7);
  out << "mode                  : classical (exhaustive scan)\n";
  out << "d / levels            : " << flags.d << " / " << flags.levels << "\n";
  out << "best encoding         :";
  for (int level : result.best_encoding) out << " " << level;
  out << "\n";
  std::int64_t halves = 0;
  for (std::size_t a = 0; a < result.best_encoding.size(); ++a)
    for (std::size_t b = a + 1; b < result.best_encoding.size(); ++b)
      halves += result.best_encoding[a] == result.best_encoding[b];
  const std::int64_t pairs = static_cast<std::int64_t>(flags.d) * (flags.d - 1) / 2;
  out << "best average          : " << result.best_average << " ("
      << fraction(2 * pairs - halves, 2 * pairs) << ")\n";
  out << "wins                  : " << (result.can_win ? "yes" : "no") << "\n";
  out << "min levels to win     : " << min_levels_to_win(flags.d) << "\n";
  return 0;
}

int cmd_optimize_quantum(const OptimizeFlags& flags, std::ostream& out) {
  const EnsembleOptimum found = optimize_ensemble(flags.d, flags.restarts, flags.seed,
                                                  flags.threads);

  std::string canonical_name;
  Ensemble canonical;
  if (flags.d == 3) {
    canonical_name = "trine";
    canonical = trine();
  } else if (flags.d == 4) {
    canonical_name = "tetrad";
    canonical = tetrad();
  } else {
    canonical_name = "polygon(" + std::to_string(flags.d) + ")";
    canonical = polygon(flags.d);
  }
  const GameSpec spec = canonical_spec(flags.d);
  const double canonical_value =
      average_success(success_matrix(QuantumStrategy{canonical, 0.0}, spec), spec);
  const double gap = found.average - canonical_value;

  out << std::fixed << std::setprecision(7);
  out << "mode                  : quantum (multi-start simplex)\n";
  out << "d / restarts / seed   : " << flags.d << " / " << flags.restarts << " / " << flags.seed
      << "\n";
  out << "best average          : " << found.average << "\n";
  out << "canonical reference   : " << canonical_name << " = " << canonical_value << "\n";
  out << "gap to canonical      : " << (gap >= 0 ? "+" : "") << gap << "\n";
  out << "pairwise |overlap|    :";
  for (int a = 0; a < flags.d; ++a)
    for (int b = a + 1; b < flags.d; ++b)
      out << " " << std::abs(overlap(found.ensemble.states[a], found.ensemble.states[b]));
  out << "\n";
  out << "states (ensemble-file format):\n";
  out << std::defaultfloat << std::setprecision(17);
  for (const QubitState& s : found.ensemble.states)
    out << "  " << s.amp0().real() << " " << s.amp0().imag() << " " << s.amp1().real() << " "
        << s.amp1().imag() << "\n";
  out << std::fixed << std::setprecision(7);
  return 0;
}

int cmd_optimize_delta(const OptimizeFlags& flags, std::ostream& out) {
  if (flags.d != 3 && flags.d != 4)
    throw Error("delta mode is defined for --d 3 and --d 4, got " + std::to_string(flags.d));
  const DeltaProblem which = flags.d == 3 ? DeltaProblem::d3 : DeltaProblem::d4;
  const DeltaOptimum result = maximize_delta(which, flags.grid_step);

  out << std::fixed << std::setprecision(7);
  out << "mode                  : distinguishability bound, d=" << flags.d << " form\n";
  out << "grid step             : " << flags.grid_step << "\n";
  out << "argmax magnitudes     :";
  for (double m : result.magnitudes) out << " " << m;
  out << "\n";
  out << "max value             : " << result.value << "\n";
  if (flags.d == 4) {
    const double t = 1.0 / std::sqrt(3.0);
    out << "value at tetrad point : " << delta_bound_d4(t, t, t) << " (overlaps 1/sqrt(3))\n";
  } else {
    out << "value at (1/2, 1/2)   : " << delta_bound_d3(0.5, 0.5) << "\n";
  }
  return 0;
}

int cmd_optimize(const OptimizeFlags& flags, std::ostream& out) {
  if (flags.d <= 0) throw Error("--d is required");
  if (flags.mode == "classical") return cmd_optimize_classical(flags, out);
  if (flags.mode == "quantum") return cmd_optimize_quantum(flags, out);
  if (flags.mode == "delta") return cmd_optimize_delta(flags, out);
  throw Error("unknown mode: " + flags.mode + " (expected classical, quantum, or delta)");
}

struct SimulateFlags {
  StrategyFlags strategy;
  std::int64_t rounds = 0;
  std::uint64_t seed = 1;
  std::string out_path;
};

int cmd_simulate(const SimulateFlags& flags, std::ostream& out) {
  const ResolvedStrategy rs = resolve_strategy(flags.strategy);
  const GameSpec spec = canonical_spec(rs.d);

  std::ofstream file(flags.out_path);
  if (!file) throw Error("cannot open output file: " + flags.out_path);

  std::int64_t correct = 0;
  simulate(rs.strategy, spec, flags.rounds, flags.seed, [&](const RoundRecord& r) {
    file << format_record_line(r) << '\n';
    correct += r.guess == r.x;
  });
  file.flush();
  if (!file) throw Error("write failed: " + flags.out_path);

  out << std::fixed << std::setprecision(7);
  print_strategy_details(out, rs);
  out << "rounds                : " << flags.rounds << "\n";
  out << "seed                  : " << flags.seed << "\n";
  out << "generator             : splitmix64-counter\n";
  out << "records written to    : " << flags.out_path << "\n";
  if (flags.rounds > 0)
    out << "empirical average     : "
        << static_cast<double>(correct) / static_cast<double>(flags.rounds) << "\n";
  else
    out << "empirical average     : n/a (0 rounds)\n";
  return 0;
}

struct CertifyFlags {
  std::string in_path;
  int d = 0;
  double alpha = 0.01;
  std::string format = "text";
};

int cmd_certify(const CertifyFlags& flags, std::ostream& out) {
  std::ifstream in(flags.in_path);
  if (!in) throw InsufficientData("cannot open record file: " + flags.in_path);

  const GameSpec spec = canonical_spec(flags.d);
  CellCounts counts(spec);
  std::size_t record_number = 0;
  for_each_record(in, [&](const RoundRecord& r) { counts.add(r, ++record_number); });

  const WitnessReport report = certify(counts, spec, flags.alpha);
  out << (flags.format == "structured" ? report_json(report) + "\n" : report_text(report));
  return report.quantumness_verdict == QuantumnessVerdict::QUANTUM ? 0 : 3;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pair-identification game: exact evaluation, strategy optimization, "
               "Monte Carlo simulation, and semi-device-independent certification"};
  app.set_version_flag("--version", std::string("pairguess ") + VERSION);
  app.require_subcommand(1);

  StrategyFlags eval_flags;
  CLI::App* eval = app.add_subcommand("evaluate", "exact success matrix for a strategy");
  add_strategy_flags(eval, eval_flags);

  OptimizeFlags opt_flags;
  CLI::App* opt = app.add_subcommand("optimize", "search for optimal strategies");
  opt->add_option("--d", opt_flags.d, "game dimension");
  opt->add_option("--mode", opt_flags.mode, "classical, quantum, or delta")->required();
  opt->add_option("--levels", opt_flags.levels, "message levels (classical mode)")
      ->capture_default_str();
  opt->add_option("--restarts", opt_flags.restarts, "simplex restarts (quantum mode)")
      ->capture_default_str();
  opt->add_option("--seed", opt_flags.seed, "random seed (quantum mode)")->capture_default_str();
  opt->add_option("--grid-step", opt_flags.grid_step, "grid resolution (delta mode)")
      ->capture_default_str();
  opt->add_option("--threads", opt_flags.threads, "worker threads")
      ->envname("PAIRGUESS_THREADS")
      ->capture_default_str();

  SimulateFlags sim_flags;
  CLI::App* sim = app.add_subcommand("simulate", "generate seeded round records");
  add_strategy_flags(sim, sim_flags.strategy);
  sim->add_option("--rounds", sim_flags.rounds, "number of rounds")->required();
  sim->add_option("--seed", sim_flags.seed, "random seed")->capture_default_str();
  sim->add_option("--out", sim_flags.out_path, "output record file")->required();

  CertifyFlags cert_flags;
  CLI::App* cert = app.add_subcommand("certify", "witness test on a round-record file");
  cert->add_option("--in", cert_flags.in_path, "round-record file")->required();
  cert->add_option("--d", cert_flags.d, "game dimension the records were played at")->required();
  cert->add_option("--alpha", cert_flags.alpha, "significance level")->capture_default_str();
  cert->add_option("--format", cert_flags.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("pairguess");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (eval->parsed()) return cmd_evaluate(eval_flags, out);
    if (opt->parsed()) return cmd_optimize(opt_flags, out);
    if (sim->parsed()) return cmd_simulate(sim_flags, out);
    return cmd_certify(cert_flags, out);
  } catch (const InvalidRecord& e) {
    err << "error: " << e.what() << "\n";
    return cert->parsed() ? 2 : 1;
  } catch (const InsufficientData& e) {
    err << "error: " << e.what() << "\n";
    return cert->parsed() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pairguess
