// dicke-lmg: ground states, critical couplings and phase diagrams of the
// extended Dicke (Dicke-LMG) model.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dicke/classical.hpp"
#include "dicke/entanglement.hpp"
#include "dicke/fullmodel.hpp"
#include "dicke/records_io.hpp"
#include "dicke/rwa.hpp"
#include "dicke/selfcheck.hpp"
#include "dicke/sweep.hpp"

namespace {

using dicke::io::format_double;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelFlags {
  int n_atoms = 5;
  double omega_f = 1.0;
  std::optional<double> omega;
  std::optional<double> delta;
  double eta = 0.0;
  double lambda = 0.0;
  std::string solver = "rwa";
  double tolerance = 1e-10;
  int max_cutoff = 4096;
  bool parity_blocks = false;

  double resolved_omega() const {
    if (omega && delta) {
      const double implied = omega_f + *delta;
      if (std::abs(*omega - implied) > 1e-12 * std::max(1.0, std::abs(*omega))) {
        throw UsageError("--omega and --delta disagree: omega must equal wf + delta");
      }
      return *omega;
    }
    if (omega) return *omega;
    if (delta) return omega_f + *delta;
    return omega_f;
  }

  dicke::ModelParams params() const {
    try {
      if (delta && !omega) return dicke::ModelParams::from_delta(omega_f, *delta, eta, lambda, n_atoms);
      return dicke::ModelParams::from_omega(omega_f, resolved_omega(), eta, lambda, n_atoms);
    } catch (const dicke::DomainError& e) {
      throw UsageError(e.what());
    }
  }

  dicke::sweep::Solver solver_kind() const {
    try {
      return dicke::sweep::parse_solver(solver);
    } catch (const dicke::DomainError& e) {
      throw UsageError(e.what());
    }
  }

  dicke::full::FullSolveOptions full_options() const {
    dicke::full::FullSolveOptions o;
    o.tolerance = tolerance;
    o.max_cutoff = max_cutoff;
    o.parity_blocks = parity_blocks;
    return o;
  }
};

std::string label_text(const dicke::BasisLabel& l) {
  return "k=" + std::to_string(l.photons) + " m=" + dicke::to_string(l.m);
}

json params_json(const dicke::ModelParams& p) {
  return {{"omega_f", p.omega_f()}, {"omega", p.omega()}, {"delta", p.delta()},
          {"eta", p.eta()},         {"lambda", p.lambda()}, {"n_atoms", p.n_atoms()}};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + out_path + "' failed");
}

// ---- solve ---------------------------------------------------------------

int cmd_solve(const ModelFlags& flags, const std::string& format, const std::string& out_path) {
  const dicke::ModelParams p = flags.params();
  const auto solver = flags.solver_kind();

  double energy = 0.0;
  std::optional<dicke::PureState> state;
  json meta;
  std::string flag_text;
  if (solver == dicke::sweep::Solver::rwa) {
    auto g = dicke::rwa::ground_state(p);
    energy = g.energy;
    meta = {{"subspace", g.subspace_index}};
    if (g.at_transition) flag_text = "at_transition";
    state = std::move(g.state);
  } else {
    auto g = dicke::full::ground_full(p, flags.full_options());
    energy = g.energy;
    meta = {{"n_cut_used", g.n_cut_used}, {"tail_mass", g.tail_mass}, {"parity", g.parity}};
    if (g.doublet) flag_text = "doublet";
    state = std::move(g.state);
  }
  const double cw = p.n_atoms() >= 2 ? dicke::cw_of_ground(*state) : 0.0;
  const double entropy = dicke::entropy_of_entanglement(dicke::trace_out_field(*state));

  std::vector<int> order(state->size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(state->amplitudes()[a]) > std::abs(state->amplitudes()[b]);
  });
  order.resize(std::min<std::size_t>(order.size(), 10));

  std::ostringstream os;
  if (format == "json") {
    json amps = json::array();
    for (int i : order) {
      const auto& l = state->labels()[i];
      amps.push_back({{"photons", l.photons}, {"twice_m", l.m.twice_m},
                      {"amplitude", state->amplitudes()[i]}});
    }
    json j = {{"solver", flags.solver}, {"params", params_json(p)}, {"energy", energy},
              {"cw", cw},               {"entropy_bits", entropy}, {"flags", flag_text},
              {"amplitudes", amps}};
    j.update(meta);
    os << dicke::io::dump_json(j);
  } else {
    os << "solver        " << flags.solver << '\n'
       << "params        " << p.describe() << '\n'
       << "energy        " << format_double(energy) << '\n';
    for (const auto& [key, value] : meta.items()) {
      os << key << std::string(key.size() < 14 ? 14 - key.size() : 1, ' ') << value.dump() << '\n';
    }
    os << "cw            " << format_double(cw) << '\n'
       << "entropy_bits  " << format_double(entropy) << '\n'
       << "flags         " << flag_text << '\n'
       << "amplitudes    (top " << order.size() << " by magnitude)\n";
    for (int i : order) {
      os << "  " << label_text(state->labels()[i]) << "  "
         << format_double(state->amplitudes()[i]) << '\n';
    }
  }
  emit(os.str(), out_path);
  return kExitOk;
}

// ---- critical ------------------------------------------------------------

int cmd_critical(const ModelFlags& flags, const std::string& format) {
  const dicke::ModelParams p = flags.params();
  struct Entry {
    const char* label;
    double (*fn)(const dicke::ModelParams&);
  };
  const Entry entries[] = {{"rwa", dicke::rwa::critical_coupling_1},
                           {"cr", dicke::full::critical_coupling_1_cr},
                           {"cl", dicke::classical::critical_coupling_cl},
                           {"clcr", dicke::classical::critical_coupling_clcr}};
  int failures = 0;
  json j = json::object();
  std::ostringstream os;
  for (const auto& e : entries) {
    try {
      const double v = e.fn(p);
      j[e.label] = v;
      os << e.label << std::string(6 - std::string(e.label).size(), ' ') << format_double(v) << '\n';
    } catch (const dicke::DomainError& err) {
      ++failures;
      j[e.label] = {{"error", err.what()}};
      os << e.label << std::string(6 - std::string(e.label).size(), ' ') << "error: " << err.what()
         << '\n';
    }
  }
  if (format == "json") {
    std::cout << dicke::io::dump_json(j);
  } else {
    std::cout << os.str();
  }
  return failures == 4 ? kExitRuntime : kExitOk;
}

// ---- ladder --------------------------------------------------------------

int cmd_ladder(const ModelFlags& flags, double lambda_min, double lambda_max, int samples,
               const std::string& format) {
  const dicke::ModelParams p = flags.params();
  dicke::rwa::LadderOptions opt;
  opt.samples = samples;
  std::vector<dicke::rwa::Transition> ladder;
  try {
    ladder = dicke::rwa::transition_ladder(p, lambda_min, lambda_max, opt);
  } catch (const dicke::DomainError& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& t : ladder) {
      arr.push_back({{"lambda", t.lambda}, {"n_before", t.n_before}, {"n_after", t.n_after}});
    }
    std::cout << dicke::io::dump_json(arr);
  } else {
    std::cout << "lambda,n_before,n_after\n";
    for (const auto& t : ladder) {
      std::cout << format_double(t.lambda) << ',' << t.n_before << ',' << t.n_after << '\n';
    }
  }
  return kExitOk;
}

// ---- sweep ---------------------------------------------------------------

struct SweepFlags {
  dicke::sweep::Axis lambda{0.01, 2.0, 200};
  dicke::sweep::Axis eta{0.0, 4.0, 200};
  std::string out;
  std::string format = "csv";
  int threads = 0;
};

int cmd_sweep(const ModelFlags& flags, const SweepFlags& sf) {
  dicke::sweep::SweepSpec spec;
  spec.solver = flags.solver_kind();
  spec.omega_f = flags.omega_f;
  spec.n_atoms = flags.n_atoms;
  spec.lambda = sf.lambda;
  spec.eta = sf.eta;
  spec.threads = sf.threads;
  spec.full = dicke::sweep::sweep_full_options();
  spec.full.tolerance = flags.tolerance;
  spec.full.max_cutoff = flags.max_cutoff;
  try {
    spec.omega = flags.resolved_omega();
    spec.validate();
  } catch (const dicke::DomainError& e) {
    throw UsageError(e.what());
  }

  const auto t0 = std::chrono::steady_clock::now();
  const auto records = dicke::sweep::run_sweep(spec);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::ostringstream data;
  if (sf.format == "json") {
    data << dicke::io::dump_json(dicke::io::to_json(records));
  } else {
    dicke::io::write_csv(data, records);
  }
  emit(data.str(), sf.out);

  std::size_t failed = 0;
  for (const auto& r : records) failed += r.failed() ? 1 : 0;
  const json meta = {{"command", "sweep"},
                     {"config", dicke::io::spec_to_json(spec)},
                     {"format", sf.format},
                     {"version", DICKE_LMG_VERSION},
                     {"records", records.size()},
                     {"failed_points", failed},
                     {"wall_time_seconds", wall}};
  emit(dicke::io::dump_json(meta), sf.out + ".meta.json");
  std::cerr << "wrote " << records.size() << " records to " << sf.out << " (" << failed
            << " failed points, " << wall << " s)\n";
  return kExitOk;
}

// ---- check ---------------------------------------------------------------

int cmd_check(const ModelFlags& flags, bool na_given, const std::vector<std::string>& suites,
              std::uint64_t seed) {
  dicke::check::CheckConfig config;
  config.n_atoms = na_given ? flags.n_atoms : 0;
  config.seed = seed;
  std::vector<std::string> names = suites.empty() ? dicke::check::suite_names() : suites;
  bool all = true;
  for (const auto& name : names) {
    dicke::check::SuiteResult r;
    try {
      r = dicke::check::run_suite(name, config);
    } catch (const dicke::DomainError& e) {
      throw UsageError(e.what());
    }
    all = all && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
  }
  return all ? kExitOk : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ground states, critical couplings and entanglement of the extended Dicke model",
               "dicke-lmg"};
  app.set_config("--config", "", "key=value file mirroring long flags; flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  ModelFlags flags;
  auto* na_opt = app.add_option("--na", flags.n_atoms, "number of qubits N_a")
                     ->check(CLI::PositiveNumber);
  app.add_option("--wf", flags.omega_f, "field frequency (energy unit, default 1)");
  app.add_option("--omega", flags.omega, "qubit transition frequency");
  app.add_option("--delta", flags.delta, "detuning omega - wf");
  app.add_option("--eta", flags.eta, "inter-qubit coupling");
  app.add_option("--lambda", flags.lambda, "field-ensemble coupling");
  app.add_option("--solver", flags.solver, "rwa or full")->check(CLI::IsMember({"rwa", "full"}));
  app.add_option("--tol", flags.tolerance, "full-model cutoff convergence tolerance");
  app.add_option("--max-cutoff", flags.max_cutoff, "full-model photon cutoff cap")
      ->check(CLI::PositiveNumber);
  app.add_flag("--parity-blocks", flags.parity_blocks, "solve parity sectors separately (full)");

  std::string format = "text";
  std::string out_path;
  auto* solve = app.add_subcommand("solve", "ground state at one parameter point");
  solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--out", out_path, "write the report to a file");

  auto* critical = app.add_subcommand("critical", "first critical couplings (four formulas)");
  critical->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  double lambda_min = 1e-3;
  double lambda_max = 2.0;
  int samples = 400;
  auto* ladder = app.add_subcommand("ladder", "RWA ground-subspace transitions in lambda");
  ladder->add_option("--lambda-min", lambda_min);
  ladder->add_option("--lambda-max", lambda_max);
  ladder->add_option("--samples", samples)->check(CLI::Range(2, 1000000));
  ladder->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  SweepFlags sf;
  auto* sweep = app.add_subcommand("sweep", "(lambda, eta) phase diagram");
  sweep->add_option("--lambda-min", sf.lambda.min);
  sweep->add_option("--lambda-max", sf.lambda.max);
  sweep->add_option("--lambda-count", sf.lambda.count);
  sweep->add_option("--eta-min", sf.eta.min);
  sweep->add_option("--eta-max", sf.eta.max);
  sweep->add_option("--eta-count", sf.eta.count);
  sweep->add_option("--out", sf.out, "output data file")->required();
  sweep->add_option("--format", sf.format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--threads", sf.threads, "worker threads (default DICKE_LMG_THREADS or cores)");

  std::vector<std::string> suites;
  std::uint64_t seed = 20240611;
  auto* check = app.add_subcommand("check", "run the built-in invariant suites");
  check->add_option("--suite", suites, "suite name (repeatable); default all");
  check->add_option("--seed", seed, "seed for randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(flags, format, out_path);
    }
    if (critical->parsed()) return cmd_critical(flags, format);
    if (ladder->parsed()) return cmd_ladder(flags, lambda_min, lambda_max, samples, format);
    if (sweep->parsed()) return cmd_sweep(flags, sf);
    if (check->parsed()) return cmd_check(flags, na_opt->count() > 0, suites, seed);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
