#pragma once

#include <Eigen/Dense>

#include "dicke/model.hpp"

// Brute-force reference constructions used by the self-check suites and the
// test binaries. They share no code path with the production operators.
namespace dicke::oracle {

/// Explicit 2^N_a vector of the Dicke state with `excited` excitations.
/// Qubit 0 is the most significant bit; bit value 1 means excited.
Eigen::VectorXd dicke_qubit_vector(int n_atoms, int excited);

/// Density matrix on the Dicke basis lifted to the full 2^N_a qubit space.
Eigen::MatrixXcd lift_to_qubits(const Eigen::MatrixXcd& rho_dicke, int n_atoms);

/// Keeps qubits (first, second), in that order, tracing out the rest.
Eigen::Matrix4cd keep_pair(const Eigen::MatrixXcd& rho_qubits, int n_atoms, int first,
                           int second);

/// tr_f |psi><psi| from the explicit outer product on the product basis.
Eigen::MatrixXcd field_trace_by_outer_product(const PureState& state);

/// Kronecker-product assembly of the full Hamiltonian (photon-major).
Eigen::MatrixXd kron_full_hamiltonian(const ModelParams& params, int n_cut);
/// Kronecker-product assembly of the rotating-wave Hamiltonian.
Eigen::MatrixXd kron_rwa_hamiltonian(const ModelParams& params, int n_cut);

/// Concurrence from the non-Hermitian product rho (sy sy) rho* (sy sy).
double concurrence_nonhermitian(const Eigen::Matrix4cd& rho);

/// Random normalized complex vector of length n (Gaussian entries).
template <class Rng>
Eigen::VectorXcd random_complex_vector(int n, Rng& rng);

}  // namespace dicke::oracle

#include <random>

namespace dicke::oracle {

template <class Rng>
Eigen::VectorXcd random_complex_vector(int n, Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = {g(rng), g(rng)};
  return v.normalized();
}

}  // namespace dicke::oracle
