#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dicke/fullmodel.hpp"
#include "dicke/model.hpp"
#include "dicke/rwa.hpp"

namespace dicke::sweep {

enum class Solver { rwa, full };

std::string to_string(Solver s);
Solver parse_solver(const std::string& name);

/// Evenly spaced axis including both end points.
struct Axis {
  double min = 0.0;
  double max = 1.0;
  int count = 2;

  double at(int i) const;
  double spacing() const { return (max - min) / (count - 1); }
};

struct SweepSpec {
  Solver solver = Solver::rwa;
  double omega_f = 1.0;
  double omega = 1.0;
  int n_atoms = 5;
  Axis lambda{0.01, 2.0, 200};
  Axis eta{0.0, 4.0, 200};
  rwa::SearchPolicy search;
  full::FullSolveOptions full;
  int threads = 0;           // 0: DICKE_LMG_THREADS or hardware concurrency
  bool keep_states = false;  // retain ground states (needed for full-model boundaries)

  void validate() const;  // throws DomainError
};

/// Default full-model options for grid work: parity blocks on, Lanczos above
/// 256 states per block.
full::FullSolveOptions sweep_full_options();

enum RecordFlag : unsigned {
  kAtTransition = 1u << 0,
  kDoublet = 1u << 1,
  kNoConvergence = 1u << 2,
  kUnboundedSearch = 1u << 3,
  kDomainError = 1u << 4,
  kNumericError = 1u << 5,
};

std::string flags_to_string(unsigned flags);
unsigned flags_from_string(const std::string& text);

struct GridRecord {
  double lambda = 0.0;
  double eta = 0.0;
  double energy = 0.0;
  int phase_index = 0;  // RWA subspace n, or photon cutoff used by the full solver
  double cw = 0.0;
  double entropy_bits = 0.0;
  unsigned flags = 0;
  std::optional<PureState> state;

  bool failed() const {
    return (flags & (kNoConvergence | kUnboundedSearch | kDomainError | kNumericError)) != 0;
  }
};

/// Evaluates every grid point; output is row-major with eta as the slow
/// index, independent of thread count. Per-point solver errors are recorded
/// as flags with NaN observables.
std::vector<GridRecord> run_sweep(const SweepSpec& spec);

/// Single grid point, exposed for tests.
GridRecord evaluate_point(const SweepSpec& spec, double lambda, double eta);

int resolve_threads(int requested);

struct BoundarySegment {
  int eta_index_a = 0;
  int lambda_index_a = 0;
  int eta_index_b = 0;
  int lambda_index_b = 0;
  int phase_a = 0;  // RWA subspace on each side (full model: parity)
  int phase_b = 0;
  double fidelity = 0.0;  // neighbor overlap (full model only)

  bool along_lambda() const { return eta_index_a == eta_index_b; }
};

struct BoundaryOptions {
  double fidelity_threshold = 0.5;
};

/// Cell edges where the RWA subspace index changes, or (full model) where the
/// neighbor ground-state fidelity drops below the threshold. Edges touching
/// failed records are skipped.
std::vector<BoundarySegment> boundary_trace(const std::vector<GridRecord>& records,
                                            const SweepSpec& spec,
                                            const BoundaryOptions& options = {});

/// For each eta row, the lambda midpoint of the first boundary along lambda
/// (NaN where the row has none).
std::vector<double> first_boundary_per_row(const std::vector<BoundarySegment>& segments,
                                           const SweepSpec& spec);

/// Boundaries crossed along eta in one lambda column.
int boundary_count_along_eta(const std::vector<BoundarySegment>& segments, int lambda_index);

}  // namespace dicke::sweep
