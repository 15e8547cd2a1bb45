#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace dicke {

struct LanczosOptions {
  int max_krylov = 160;    // basis size before an explicit restart
  int max_restarts = 200;
  double tolerance = 1e-11;  // residual ||H x - theta x|| relative to max(1, |theta|)
  int check_every = 8;
};

struct LanczosResult {
  double value = 0.0;
  Eigen::VectorXd vector;
  double residual = 0.0;
  int matvecs = 0;
};

/// Lowest eigenpair of a real symmetric sparse matrix by Lanczos with full
/// reorthogonalization, restarted from the current Ritz vector. Throws
/// NumericError when the restart budget runs out.
LanczosResult lanczos_ground(const Eigen::SparseMatrix<double>& h, const Eigen::VectorXd& start,
                             const LanczosOptions& options = {});

}  // namespace dicke
