#include "dicke/lanczos.hpp"

#include <cmath>
#include <string>

#include "dicke/errors.hpp"
#include "dicke/tridiag.hpp"

namespace dicke {

LanczosResult lanczos_ground(const Eigen::SparseMatrix<double>& h, const Eigen::VectorXd& start,
                             const LanczosOptions& options) {
  const Eigen::Index dim = h.rows();
  if (h.cols() != dim || start.size() != dim) throw DomainError("lanczos: dimension mismatch");
  if (start.norm() == 0.0) throw DomainError("lanczos: zero start vector");

  const int kmax = static_cast<int>(std::min<Eigen::Index>(options.max_krylov, dim));
  Eigen::MatrixXd v(dim, kmax);
  Eigen::VectorXd x = start.normalized();
  Eigen::VectorXd w(dim);
  LanczosResult result;

  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    TridiagMatrix t;
    v.col(0) = x;
    int k = 0;
    bool invariant = false;
    for (;;) {
      w.noalias() = h * v.col(k);
      ++result.matvecs;
      const double alpha = v.col(k).dot(w);
      t.diag.push_back(alpha);
      // Two passes of classical Gram-Schmidt against the whole basis.
      for (int pass = 0; pass < 2; ++pass) {
        w.noalias() -= v.leftCols(k + 1) * (v.leftCols(k + 1).transpose() * w);
      }
      const double beta = w.norm();
      const bool full = k + 1 == kmax;
      invariant = beta <= 1e-14 * std::max(1.0, std::abs(alpha));
      if (full || invariant || (k + 1) % options.check_every == 0) {
        const EigenPair ritz = tridiag_ground(t);
        const double estimate = beta * std::abs(ritz.vector[k]);
        const double scale = std::max(1.0, std::abs(ritz.value));
        if (full || invariant || estimate < options.tolerance * scale) {
          x.noalias() = v.leftCols(k + 1) * ritz.vector;
          x.normalize();
          result.value = ritz.value;
          break;
        }
      }
      t.offdiag.push_back(beta);
      ++k;
      v.col(k) = w / beta;
    }
    // Rayleigh quotient and true residual of the Ritz vector.
    w.noalias() = h * x;
    ++result.matvecs;
    result.value = x.dot(w);
    result.residual = (w - result.value * x).norm();
    if (result.residual <= options.tolerance * std::max(1.0, std::abs(result.value))) {
      result.vector = x;
      return result;
    }
  }
  throw NumericError("lanczos: residual " + std::to_string(result.residual) +
                     " above tolerance after " + std::to_string(options.max_restarts) +
                     " restarts (dimension " + std::to_string(dim) + ")");
}

}  // namespace dicke
