#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "dicke/lanczos.hpp"
#include "dicke/model.hpp"

namespace dicke::full {

// Full Hamiltonian with counter-rotating terms on a truncated Fock x Dicke basis:
//
//   H = w_f a^dag a + w Jz + eta/N_a Jz^2 + lambda N_a^{-1/2} (a + a^dag)(J+ + J-)
//
// The coupling normalization is the one whose RWA part reproduces the
// excitation-subspace blocks in rwa.hpp exactly.

struct FullHamiltonian {
  ProductBasis basis;
  ModelParams params;
  Eigen::SparseMatrix<double> matrix;

  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(matrix); }
};

FullHamiltonian build_full(const ModelParams& params, int n_cut);

/// Eigenvalues (+1 / -1) of exp[i pi (a^dag a + Jz + N_a/2)] on the basis.
Eigen::VectorXd parity_diagonal(const ProductBasis& basis);

struct FullSolveOptions {
  double tolerance = 1e-10;        // |dE| < tol max(1, |E|) between successive cutoffs
  double tail_threshold = 1e-10;   // probability on the two highest photon layers
  int initial_cutoff = -1;         // < 0 selects initial_cutoff_guess()
  int max_cutoff = 4096;
  bool parity_blocks = false;
  int dense_max_dim = 2000;        // larger (block) dimensions use Lanczos
  double doublet_tolerance = 1e-9; // relative even/odd gap treated as degenerate
  LanczosOptions lanczos;
};

struct ConvergedGround {
  double energy = 0.0;
  PureState state;
  int n_cut_used = 0;
  double tail_mass = 0.0;
  int parity = 1;
  // E_odd - E_even of the two parity-sector ground states; NaN unless
  // parity blocks were solved.
  double parity_gap = 0.0;
  bool doublet = false;  // state is the even member of a degenerate pair
};

int initial_cutoff_guess(const ModelParams& params);

/// Probability carried by photon layers n_cut - 1 and n_cut.
double tail_mass(const PureState& state, int n_cut);

/// Ground state at a fixed cutoff. `warm_start` (may be empty) seeds Lanczos.
ConvergedGround ground_at_cutoff(const ModelParams& params, int n_cut,
                                 const FullSolveOptions& options,
                                 const Eigen::VectorXd& warm_start = {});

/// Ground state converged in the photon cutoff by doubling from the initial
/// guess. Throws ConvergenceError beyond options.max_cutoff.
ConvergedGround ground_full(const ModelParams& params, const FullSolveOptions& options = {});

/// Effective rotating-wave coupling 2 w_f lambda / (w + w_f) after the
/// transformation exp[-i xi (a + a^dag) Jy].
double effective_coupling(const ModelParams& params);
/// xi = 2 lambda N_a^{-1/2} / (w + w_f).
double transformation_xi(const ModelParams& params);
/// Applies U = exp[-i xi (a + a^dag) Jy] to a vector on `basis` (Taylor
/// series; photons pushed past n_cut are dropped, so keep the cutoff generous).
Eigen::VectorXd apply_transformation(const ProductBasis& basis, double xi, const Eigen::VectorXd& v);
/// Weak-coupling prediction U |psi_RWA(lambda~)> for the full ground state.
PureState weak_coupling_state(const ModelParams& params, int n_cut);
/// Weak-coupling first critical coupling with counter-rotating terms,
/// (w + w_f)/2 sqrt([w + (1/N_a - 1) eta] / w_f).
double critical_coupling_1_cr(const ModelParams& params);

}  // namespace dicke::full
