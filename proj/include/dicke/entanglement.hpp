#pragma once

#include <Eigen/Dense>

#include "dicke/model.hpp"

namespace dicke {

/// Hermitian, unit-trace, positive semidefinite matrix. Construction only
/// checks shape; validity is queried with is_valid().
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd matrix);

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  int dimension() const { return static_cast<int>(matrix_.rows()); }
  double trace() const { return matrix_.trace().real(); }
  double hermiticity_error() const;
  // Ascending eigenvalues of the Hermitian part.
  Eigen::VectorXd eigenvalues() const;
  bool is_valid(double tolerance = 1e-12) const;

 private:
  Eigen::MatrixXcd matrix_;
};

/// rho_a = tr_f |psi><psi| on the Dicke basis (m ascending).
DensityMatrix trace_out_field(const PureState& state);

/// Von Neumann entropy in bits; eigenvalues in [-1e-12, 0) are clipped.
double entropy_of_entanglement(const DensityMatrix& rho);

/// Two-qubit marginal of a symmetric N_a-qubit state given on the Dicke
/// basis, in {|00>, |01>, |10>, |11>} with 1 = excited.
DensityMatrix reduce_to_two_qubits(const DensityMatrix& rho_a, int n_atoms);

/// Wootters concurrence max(0, s1 - s2 - s3 - s4), s_i the descending square
/// roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).
double wootters_concurrence(const DensityMatrix& rho2);

/// Pairwise concurrence shared by every qubit pair of a symmetric ensemble.
double cw_of_ground(const PureState& state);

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double state_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace dicke
