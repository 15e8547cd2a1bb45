#include "dicke/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "dicke/entanglement.hpp"

namespace dicke::sweep {

std::string to_string(Solver s) { return s == Solver::rwa ? "rwa" : "full"; }

Solver parse_solver(const std::string& name) {
  if (name == "rwa") return Solver::rwa;
  if (name == "full") return Solver::full;
  throw DomainError("unknown solver '" + name + "' (expected rwa or full)");
}

double Axis::at(int i) const {
  if (i == count - 1) return max;
  return min + i * spacing();
}

void SweepSpec::validate() const {
  auto check_axis = [](const Axis& a, const char* name) {
    if (a.count < 2) throw DomainError(std::string(name) + " axis needs count >= 2");
    if (!(a.min < a.max) || !std::isfinite(a.min) || !std::isfinite(a.max)) {
      throw DomainError(std::string(name) + " axis needs finite min < max");
    }
  };
  check_axis(lambda, "lambda");
  check_axis(eta, "eta");
  if (lambda.min < 0.0) throw DomainError("lambda axis must start at >= 0");
  if (n_atoms < 2) throw DomainError("sweeps need n_atoms >= 2 for pair concurrence");
  // Reuses ModelParams validation for the fixed constants.
  (void)ModelParams::from_omega(omega_f, omega, eta.min, lambda.min, n_atoms);
}

full::FullSolveOptions sweep_full_options() {
  full::FullSolveOptions o;
  o.parity_blocks = true;
  o.dense_max_dim = 256;
  return o;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const char* const kFlagNames[] = {"at_transition", "doublet", "noconv",
                                  "unbounded",     "domain",  "numeric"};

}  // namespace

std::string flags_to_string(unsigned flags) {
  std::string out;
  for (unsigned bit = 0; bit < std::size(kFlagNames); ++bit) {
    if (flags & (1u << bit)) {
      if (!out.empty()) out += '|';
      out += kFlagNames[bit];
    }
  }
  return out;
}

unsigned flags_from_string(const std::string& text) {
  unsigned flags = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('|', start);
    if (end == std::string::npos) end = text.size();
    const std::string token = text.substr(start, end - start);
    bool known = false;
    for (unsigned bit = 0; bit < std::size(kFlagNames); ++bit) {
      if (token == kFlagNames[bit]) {
        flags |= 1u << bit;
        known = true;
      }
    }
    if (!known) throw DomainError("unknown record flag '" + token + "'");
    start = end + 1;
  }
  return flags;
}

GridRecord evaluate_point(const SweepSpec& spec, double lambda, double eta) {
  GridRecord rec;
  rec.lambda = lambda;
  rec.eta = eta;
  try {
    const ModelParams p = ModelParams::from_omega(spec.omega_f, spec.omega, eta, lambda,
                                                  spec.n_atoms);
    std::optional<PureState> state;
    if (spec.solver == Solver::rwa) {
      rwa::GroundStateResult g = rwa::ground_state(p, spec.search);
      rec.energy = g.energy;
      rec.phase_index = g.subspace_index;
      if (g.at_transition) rec.flags |= kAtTransition;
      state = std::move(g.state);
    } else {
      full::ConvergedGround g = full::ground_full(p, spec.full);
      rec.energy = g.energy;
      rec.phase_index = g.n_cut_used;
      if (g.doublet) rec.flags |= kDoublet;
      state = std::move(g.state);
    }
    const DensityMatrix rho = trace_out_field(*state);
    rec.entropy_bits = entropy_of_entanglement(rho);
    rec.cw = wootters_concurrence(reduce_to_two_qubits(rho, spec.n_atoms));
    if (spec.keep_states) {
      // Drop photon layers carrying no weight to keep large grids small.
      const auto& labels = state->labels();
      const auto& amps = state->amplitudes();
      int top = 0;
      for (int i = 0; i < state->size(); ++i) {
        if (std::abs(amps[i]) > 1e-9) top = std::max(top, labels[i].photons);
      }
      std::vector<BasisLabel> kept;
      std::vector<double> values;
      for (int i = 0; i < state->size(); ++i) {
        if (labels[i].photons <= top) {
          kept.push_back(labels[i]);
          values.push_back(amps[i]);
        }
      }
      rec.state = PureState::normalized(spec.n_atoms, std::move(kept),
                                        Eigen::Map<Eigen::VectorXd>(values.data(), values.size()));
    }
  } catch (const UnboundedSearchError&) {
    rec.flags |= kUnboundedSearch;
  } catch (const ConvergenceError&) {
    rec.flags |= kNoConvergence;
  } catch (const NumericError&) {
    rec.flags |= kNumericError;
  } catch (const DomainError&) {
    rec.flags |= kDomainError;
  }
  if (rec.failed()) {
    rec.energy = rec.cw = rec.entropy_bits = kNaN;
    rec.phase_index = -1;
    rec.state.reset();
  }
  return rec;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DICKE_LMG_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<GridRecord> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const int nl = spec.lambda.count;
  const std::size_t total = static_cast<std::size_t>(nl) * spec.eta.count;
  std::vector<GridRecord> records(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const int row = static_cast<int>(i / nl);
      const int col = static_cast<int>(i % nl);
      records[i] = evaluate_point(spec, spec.lambda.at(col), spec.eta.at(row));
    }
  };
  const int width = std::min<int>(resolve_threads(spec.threads), static_cast<int>(total));
  if (width <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < width; ++t) pool.emplace_back(worker);
  }
  return records;
}

std::vector<BoundarySegment> boundary_trace(const std::vector<GridRecord>& records,
                                            const SweepSpec& spec,
                                            const BoundaryOptions& options) {
  const int nl = spec.lambda.count;
  const int ne = spec.eta.count;
  if (records.size() != static_cast<std::size_t>(nl) * ne) {
    throw DomainError("record count does not match the sweep grid");
  }
  auto at = [&](int row, int col) -> const GridRecord& {
    return records[static_cast<std::size_t>(row) * nl + col];
  };
  std::vector<BoundarySegment> out;
  auto consider = [&](int ra, int ca, int rb, int cb) {
    const GridRecord& a = at(ra, ca);
    const GridRecord& b = at(rb, cb);
    if (a.failed() || b.failed()) return;
    BoundarySegment seg{ra, ca, rb, cb, a.phase_index, b.phase_index, kNaN};
    if (spec.solver == Solver::rwa) {
      if (a.phase_index != b.phase_index) out.push_back(seg);
      return;
    }
    if (!a.state || !b.state) throw DomainError("full-model boundaries need keep_states");
    seg.fidelity = fidelity(*a.state, *b.state);
    if (seg.fidelity < options.fidelity_threshold) {
      seg.phase_a = seg.phase_b = 0;
      out.push_back(seg);
    }
  };
  for (int r = 0; r < ne; ++r) {
    for (int c = 0; c < nl; ++c) {
      if (c + 1 < nl) consider(r, c, r, c + 1);
      if (r + 1 < ne) consider(r, c, r + 1, c);
    }
  }
  return out;
}

std::vector<double> first_boundary_per_row(const std::vector<BoundarySegment>& segments,
                                           const SweepSpec& spec) {
  std::vector<double> first(spec.eta.count, kNaN);
  for (const auto& s : segments) {
    if (!s.along_lambda()) continue;
    const double mid = 0.5 * (spec.lambda.at(s.lambda_index_a) + spec.lambda.at(s.lambda_index_b));
    double& slot = first[s.eta_index_a];
    if (std::isnan(slot) || mid < slot) slot = mid;
  }
  return first;
}

int boundary_count_along_eta(const std::vector<BoundarySegment>& segments, int lambda_index) {
  int n = 0;
  for (const auto& s : segments) {
    if (!s.along_lambda() && s.lambda_index_a == lambda_index) ++n;
  }
  return n;
}

}  // namespace dicke::sweep
