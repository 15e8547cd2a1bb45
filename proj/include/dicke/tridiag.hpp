#pragma once

#include <vector>

#include <Eigen/Dense>

namespace dicke {

/// Real symmetric tridiagonal matrix plus a scalar shift added to every
/// eigenvalue. `offdiag[i]` couples rows i and i+1.
struct TridiagMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;
  double energy_offset = 0.0;

  int size() const { return static_cast<int>(diag.size()); }
  Eigen::MatrixXd dense() const;  // without the offset
};

struct EigenPair {
  double value = 0.0;
  Eigen::VectorXd vector;
};

/// Lowest eigenpair by implicit-shift QL. The eigenvalue includes the energy
/// offset; the vector has unit norm and its first non-negligible component
/// (|c| > 1e-10 max|c|) is positive. Throws NumericError if QL fails to
/// deflate within `max_sweeps` iterations per eigenvalue.
EigenPair tridiag_ground(const TridiagMatrix& mat, int max_sweeps = 60);

/// All eigenvalues (ascending, offset included) by the same QL iteration.
std::vector<double> tridiag_eigenvalues(const TridiagMatrix& mat, int max_sweeps = 60);

/// Number of eigenvalues strictly below x (Sturm sequence count).
int sturm_count(const TridiagMatrix& mat, double x);

/// k-th smallest eigenvalue (k = 0 is the lowest) by Sturm bisection.
double sturm_eigenvalue(const TridiagMatrix& mat, int k, double tolerance = 1e-14);

/// Gershgorin lower bound on the spectrum, offset included.
double gershgorin_lower(const TridiagMatrix& mat);

}  // namespace dicke
