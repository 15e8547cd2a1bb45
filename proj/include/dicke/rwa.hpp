#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dicke/model.hpp"
#include "dicke/tridiag.hpp"

namespace dicke::rwa {

// Excitation-number subspaces of the rotating-wave Hamiltonian
//
//   H_RWA = w_f N + delta Jz + eta/N_a Jz^2 + lambda N_a^{-1/2} (a J+ + a^dag J-)
//
// Subspace n holds |j>_f |n - j - N_a/2> for j = first_photon(n) .. n; its
// block is tridiagonal in j and shifted by w_f (n - N_a/2).

int first_photon(int n, int n_atoms);
std::vector<BasisLabel> subspace_labels(int n, int n_atoms);

TridiagMatrix build_subspace(const ModelParams& params, int n);

struct SubspaceGround {
  double energy = 0.0;
  PureState state;
};

SubspaceGround subspace_ground(const ModelParams& params, int n);

struct SearchPolicy {
  int n_max = -1;                // < 0 selects 10 N_a + 100
  double tie_tolerance = 1e-12;  // relative; equal energies resolve to the smaller n

  int resolved_n_max(int n_atoms) const { return n_max >= 0 ? n_max : 10 * n_atoms + 100; }
};

struct GroundStateResult {
  double energy = 0.0;
  PureState state;
  int subspace_index = 0;
  bool at_transition = false;  // subspace n+1 is degenerate with n within tie tolerance
};

/// Global ground state over all excitation subspaces. Throws
/// UnboundedSearchError when n_max is reached before the stopping rule holds.
GroundStateResult ground_state(const ModelParams& params, const SearchPolicy& search = {});

/// First critical coupling sqrt([w + (1/N_a - 1) eta] w_f), where the vacuum
/// and n = 1 ground energies cross.
double critical_coupling_1(const ModelParams& params);

/// Ratio c0/c1 of the n = 1 ground state
/// c0 |0>|1 - N_a/2> + c1 |1>|-N_a/2>.
double amplitude_h(const ModelParams& params);

/// Closed-form n = 1 ground state built from amplitude_h.
PureState first_nonvacuum_state(const ModelParams& params);

struct Transition {
  double lambda = 0.0;
  int n_before = 0;
  int n_after = 0;
};

struct LadderOptions {
  int samples = 400;             // coarse scan points across the range
  double lambda_tolerance = 1e-14;
  SearchPolicy search;
};

/// Ground-subspace changes for lambda in [lambda_min, lambda_max] at fixed
/// other parameters, ascending in lambda. Each crossing is refined by
/// bisection on E_g^(n_before) - E_g^(n_after).
std::vector<Transition> transition_ladder(const ModelParams& params, double lambda_min,
                                          double lambda_max, const LadderOptions& options = {});

/// H_RWA assembled on a truncated product basis (for conservation checks).
Eigen::MatrixXd product_matrix(const ModelParams& params, int n_cut);
/// Diagonal of N + N_a/2 = k + p on the same basis.
Eigen::VectorXd excitation_diagonal(const ProductBasis& basis);

}  // namespace dicke::rwa
