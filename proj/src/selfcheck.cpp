#include "dicke/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "dicke/classical.hpp"
#include "dicke/entanglement.hpp"
#include "dicke/fullmodel.hpp"
#include "dicke/oracles.hpp"
#include "dicke/rwa.hpp"
#include "dicke/tridiag.hpp"

namespace dicke::check {

namespace {

using Rng = std::mt19937_64;

// Tracks the worst deviation against a bound; a suite passes iff every
// recorded value is within its bound.
class Tally {
 public:
  void record(const std::string& what, double value, double bound) {
    if (!(value <= bound)) {
      ok_ = false;
      if (failures_++ < 3) os_ << "FAIL " << what << ": " << value << " > " << bound << "; ";
    }
    worst_ = std::max(worst_, value / bound);
    ++count_;
  }
  SuiteResult finish(const std::string& name) const {
    std::ostringstream os;
    os << os_.str() << count_ << " checks, worst value/bound = " << worst_;
    return SuiteResult{name, ok_, os.str()};
  }

 private:
  bool ok_ = true;
  int failures_ = 0;
  int count_ = 0;
  double worst_ = 0.0;
  std::ostringstream os_;
};

std::vector<int> atom_range(const CheckConfig& c, int lo, int hi) {
  if (c.n_atoms > 0) return {c.n_atoms};
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

ModelParams random_params(Rng& rng, int n_atoms) {
  std::uniform_real_distribution<double> u(0.2, 2.0);
  std::uniform_real_distribution<double> e(-1.0, 2.0);
  return ModelParams::from_omega(u(rng), u(rng), e(rng), u(rng), n_atoms);
}

SuiteResult spin_algebra(const CheckConfig& c) {
  Tally t;
  for (int na : atom_range(c, 1, 8)) {
    const SpinMatrices s = spin_matrices(na);
    const Eigen::MatrixXcd jx = s.jx().cast<std::complex<double>>();
    const Eigen::MatrixXcd jy = s.jy();
    const Eigen::MatrixXcd jz = s.jz.cast<std::complex<double>>();
    const Eigen::MatrixXcd comm = jx * jy - jy * jx - std::complex<double>(0, 1) * jz;
    t.record("[Jx,Jy]-iJz N_a=" + std::to_string(na), comm.cwiseAbs().maxCoeff(), 1e-12);
    const double j = 0.5 * na;
    const Eigen::MatrixXcd casimir = jx * jx + jy * jy + jz * jz;
    const Eigen::MatrixXcd target = j * (j + 1) * Eigen::MatrixXcd::Identity(na + 1, na + 1);
    t.record("J^2 N_a=" + std::to_string(na), (casimir - target).cwiseAbs().maxCoeff(), 1e-12);
  }
  return t.finish("spin-algebra");
}

SuiteResult rwa_conservation(const CheckConfig& c) {
  Tally t;
  Rng rng(c.seed);
  for (int na : atom_range(c, 1, 4)) {
    for (int n_cut : {1, 4, 9, 16}) {
      const ModelParams p = random_params(rng, na);
      const Eigen::MatrixXd h = rwa::product_matrix(p, n_cut);
      const Eigen::VectorXd n = rwa::excitation_diagonal(ProductBasis(na, n_cut));
      const Eigen::MatrixXd comm = h * n.asDiagonal() - n.asDiagonal() * h;
      t.record("[H_RWA, N]", comm.cwiseAbs().maxCoeff(), 1e-12);
      t.record("H_RWA vs kron", (h - oracle::kron_rwa_hamiltonian(p, n_cut)).cwiseAbs().maxCoeff(),
               1e-12);
      // Complete subspaces n <= n_cut must reproduce the truncated block spectrum.
      std::vector<int> idx;
      for (int i = 0; i < n.size(); ++i) {
        if (n[i] <= n_cut) idx.push_back(i);
      }
      Eigen::MatrixXd sub(idx.size(), idx.size());
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = h(idx[a], idx[b]);
      }
      Eigen::VectorXd dense = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sub).eigenvalues();
      std::vector<double> blocks;
      for (int k = 0; k <= n_cut; ++k) {
        for (double x : tridiag_eigenvalues(rwa::build_subspace(p, k))) blocks.push_back(x);
      }
      std::sort(blocks.begin(), blocks.end());
      double worst = 0.0;
      for (std::size_t i = 0; i < blocks.size(); ++i) worst = std::max(worst, std::abs(blocks[i] - dense[i]));
      t.record("block spectrum union", worst, 1e-10);
    }
  }
  return t.finish("rwa-conservation");
}

SuiteResult parity(const CheckConfig& c) {
  Tally t;
  Rng rng(c.seed + 1);
  for (int na : atom_range(c, 1, 4)) {
    for (int n_cut : {1, 5, 16}) {
      const ModelParams p = random_params(rng, na);
      const full::FullHamiltonian ham = full::build_full(p, n_cut);
      const Eigen::MatrixXd h = ham.dense();
      const Eigen::VectorXd pi = full::parity_diagonal(ham.basis);
      const Eigen::MatrixXd comm = h * pi.asDiagonal() - pi.asDiagonal() * h;
      t.record("[H, Pi]", comm.cwiseAbs().maxCoeff(), 1e-12);
      t.record("symmetry", (h - h.transpose()).cwiseAbs().maxCoeff(), 1e-14);
      t.record("H vs kron", (h - oracle::kron_full_hamiltonian(p, n_cut)).cwiseAbs().maxCoeff(),
               1e-12);
    }
  }
  return t.finish("parity");
}

SuiteResult tridiag_oracle(const CheckConfig& c) {
  Tally t;
  Rng rng(c.seed + 2);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> pos(0.01, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    TridiagMatrix m;
    m.energy_offset = u(rng);
    for (int i = 0; i < n; ++i) m.diag.push_back(u(rng));
    for (int i = 0; i + 1 < n; ++i) m.offdiag.push_back(pos(rng));
    const EigenPair g = tridiag_ground(m);
    const double dense =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m.dense()).eigenvalues()[0] + m.energy_offset;
    const double sturm = sturm_eigenvalue(m, 0);
    t.record("QL vs dense", std::abs(g.value - dense), 1e-10);
    t.record("QL vs Sturm", std::abs(g.value - sturm), 1e-10);
    const Eigen::VectorXd r = m.dense() * g.vector - (g.value - m.energy_offset) * g.vector;
    t.record("residual", r.norm(), 1e-9);
  }
  return t.finish("tridiag-oracle");
}

SuiteResult rwa_crossing(const CheckConfig& c) {
  Tally t;
  for (int na : atom_range(c, 2, 6)) {
    for (double eta : {0.0, 0.25, 0.5, 1.0}) {
      const ModelParams p = ModelParams::from_omega(1.0, 1.0, eta, 0.0, na);
      const double analytic = rwa::critical_coupling_1(p);
      rwa::LadderOptions opt;
      opt.samples = 60;
      const auto ladder = rwa::transition_ladder(p, 1e-3, 1.5 * analytic + 0.1, opt);
      if (ladder.empty() || ladder.front().n_before != 0 || ladder.front().n_after != 1) {
        t.record("first transition is 0->1", 1.0, 0.0);
        continue;
      }
      t.record("ladder vs critical_coupling_1", std::abs(ladder.front().lambda - analytic), 1e-8);
    }
  }
  return t.finish("rwa-crossing");
}

SuiteResult concurrence_oracle(const CheckConfig& c) {
  Tally t;
  Rng rng(c.seed + 3);
  for (int na : atom_range(c, 2, 8)) {
    for (int trial = 0; trial < 20; ++trial) {
      // Rank-2 mixtures of random symmetric states.
      const Eigen::VectorXcd a = oracle::random_complex_vector(na + 1, rng);
      const Eigen::VectorXcd b = oracle::random_complex_vector(na + 1, rng);
      const double w = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const Eigen::MatrixXcd rho = w * a * a.adjoint() + (1.0 - w) * b * b.adjoint();
      const DensityMatrix pair = reduce_to_two_qubits(DensityMatrix(rho), na);
      const Eigen::MatrixXcd lifted = oracle::lift_to_qubits(rho, na);
      const Eigen::Matrix4cd brute = oracle::keep_pair(lifted, na, 0, 1);
      const Eigen::Matrix4cd other = oracle::keep_pair(lifted, na, na - 2, na - 1);
      t.record("pair vs brute force", (pair.matrix() - brute).cwiseAbs().maxCoeff(), 1e-12);
      t.record("pair label invariance", (brute - other).cwiseAbs().maxCoeff(), 1e-12);
      t.record("concurrence routes",
               std::abs(wootters_concurrence(pair) - oracle::concurrence_nonhermitian(brute)), 1e-7);
    }
  }
  return t.finish("concurrence-oracle");
}

SuiteResult sharing_bound(const CheckConfig& c) {
  Tally t;
  Rng rng(c.seed + 4);
  for (int na : atom_range(c, 2, 8)) {
    for (int trial = 0; trial < 200; ++trial) {
      const Eigen::VectorXcd a = oracle::random_complex_vector(na + 1, rng);
      const double conc =
          wootters_concurrence(reduce_to_two_qubits(DensityMatrix(a * a.adjoint()), na));
      t.record("C <= 2/N_a", conc, 2.0 / na + 1e-10);
    }
  }
  return t.finish("sharing-bound");
}

double bisect(const std::function<bool(double)>& above, double lo, double hi, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (above(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

SuiteResult hp_crossing(const CheckConfig& c) {
  Tally t;
  Rng rng(c.seed + 5);
  for (int na : atom_range(c, 2, 12)) {
    for (int trial = 0; trial < 5; ++trial) {
      const ModelParams p = random_params(rng, na);
      double cl = 0.0;
      try {
        cl = classical::critical_coupling_cl(p);
      } catch (const DomainError&) {
        continue;
      }
      t.record("cl == rwa bitwise", cl == rwa::critical_coupling_1(p) ? 0.0 : 1.0, 0.5);
      const double root = bisect(
          [&](double lam) { return classical::hp_first_energy(p.with_lambda(lam)) < 0.0; }, 0.0,
          2.0 * cl + 1.0, 1e-13);
      t.record("E_CL^(1) root", std::abs(root - cl), 1e-10);
    }
  }
  return t.finish("hp-crossing");
}

SuiteResult mean_field_threshold(const CheckConfig& c) {
  Tally t;
  for (int na : atom_range(c, 2, 8)) {
    for (double eta : {0.0, 0.25, 0.5, 0.9}) {
      const ModelParams p = ModelParams::from_omega(1.0, 1.0, eta, 0.0, na);
      const double clcr = classical::critical_coupling_clcr(p);
      const double root = bisect(
          [&](double lam) { return classical::mean_field_minimize(p.with_lambda(lam)).beta != 0.0; },
          0.0, 2.0, 1e-9);
      t.record("mean-field boundary", std::abs(root - clcr), 1e-6);
    }
  }
  return t.finish("mean-field-threshold");
}

SuiteResult weak_coupling(const CheckConfig& c) {
  Tally t;
  const int na = c.n_atoms > 0 ? c.n_atoms : 5;
  // The mapping assumes eta << w; keep eta moderate here.
  for (double eta : {0.0, 0.25, 0.5}) {
    for (double lam : {0.01, 0.05}) {
      const ModelParams p = ModelParams::from_omega(1.0, 1.0, eta, lam, na);
      const auto g_full = full::ground_full(p);
      const auto predicted = full::weak_coupling_state(p, g_full.n_cut_used);
      t.record("1 - fidelity(full, U RWA(lambda~))", 1.0 - fidelity(g_full.state, predicted), 1e-3);
    }
    const ModelParams p = ModelParams::from_omega(1.0, 1.0, eta, 0.0, na);
    try {
      t.record("lambda_c1_cr == lambda_c1 on resonance",
               std::abs(full::critical_coupling_1_cr(p) - rwa::critical_coupling_1(p)), 1e-15);
    } catch (const DomainError&) {
    }
  }
  return t.finish("weak-coupling");
}

SuiteResult lanczos_dense(const CheckConfig& c) {
  Tally t;
  const int na = c.n_atoms > 0 ? c.n_atoms : 3;
  for (double lam : {0.3, 1.0, 2.0}) {
    const ModelParams p = ModelParams::from_omega(1.0, 1.0, 0.5, lam, na);
    full::FullSolveOptions dense;
    dense.parity_blocks = true;
    full::FullSolveOptions iterative = dense;
    iterative.dense_max_dim = 0;
    const auto a = full::ground_at_cutoff(p, 40, dense);
    const auto b = full::ground_at_cutoff(p, 40, iterative);
    t.record("energy", std::abs(a.energy - b.energy), 1e-9);
    t.record("1 - fidelity", 1.0 - fidelity(a.state, b.state), 1e-9);
  }
  return t.finish("lanczos-dense");
}

const std::map<std::string, std::function<SuiteResult(const CheckConfig&)>>& registry() {
  static const std::map<std::string, std::function<SuiteResult(const CheckConfig&)>> r{
      {"spin-algebra", spin_algebra},
      {"rwa-conservation", rwa_conservation},
      {"parity", parity},
      {"tridiag-oracle", tridiag_oracle},
      {"rwa-crossing", rwa_crossing},
      {"concurrence-oracle", concurrence_oracle},
      {"sharing-bound", sharing_bound},
      {"hp-crossing", hp_crossing},
      {"mean-field-threshold", mean_field_threshold},
      {"weak-coupling", weak_coupling},
      {"lanczos-dense", lanczos_dense},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const CheckConfig& config) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown check suite '" + name + "'");
  try {
    return it->second(config);
  } catch (const std::exception& e) {
    return SuiteResult{name, false, std::string("exception: ") + e.what()};
  }
}

std::vector<SuiteResult> run_all(const CheckConfig& config) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, config));
  return out;
}

}  // namespace dicke::check
