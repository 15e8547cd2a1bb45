#include "dicke/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

struct QlResult {
  std::vector<double> values;
  Eigen::MatrixXd vectors;
};

// Implicit QL with Wilkinson-type shifts on (d, e); e[i] couples i and i+1.
QlResult implicit_ql(const TridiagMatrix& mat, bool want_vectors, int max_sweeps) {
  const int n = mat.size();
  if (n == 0) throw DomainError("empty tridiagonal matrix");
  if (static_cast<int>(mat.offdiag.size()) != n - 1) {
    throw DomainError("offdiag must have size - 1 entries");
  }
  std::vector<double> d = mat.diag;
  std::vector<double> e(n, 0.0);
  std::copy(mat.offdiag.begin(), mat.offdiag.end(), e.begin());
  Eigen::MatrixXd z;
  if (want_vectors) z = Eigen::MatrixXd::Identity(n, n);

  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == max_sweeps) {
        throw NumericError("tridiagonal QL did not converge for eigenvalue " + std::to_string(l) +
                           " after " + std::to_string(max_sweeps) + " sweeps (size " +
                           std::to_string(n) + ")");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (want_vectors) {
          for (int k = 0; k < n; ++k) {
            f = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * f;
            z(k, i) = c * z(k, i) - s * f;
          }
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  return QlResult{std::move(d), std::move(z)};
}

}  // namespace

Eigen::MatrixXd TridiagMatrix::dense() const {
  const int n = size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = diag[i];
  for (int i = 0; i + 1 < n; ++i) {
    out(i, i + 1) = offdiag[i];
    out(i + 1, i) = offdiag[i];
  }
  return out;
}

EigenPair tridiag_ground(const TridiagMatrix& mat, int max_sweeps) {
  QlResult ql = implicit_ql(mat, true, max_sweeps);
  const auto lowest = std::min_element(ql.values.begin(), ql.values.end());
  const int col = static_cast<int>(lowest - ql.values.begin());
  Eigen::VectorXd v = ql.vectors.col(col);
  v.normalize();
  const double cutoff = 1e-10 * v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > cutoff) {
      if (v[i] < 0.0) v = -v;
      break;
    }
  }
  return EigenPair{*lowest + mat.energy_offset, std::move(v)};
}

std::vector<double> tridiag_eigenvalues(const TridiagMatrix& mat, int max_sweeps) {
  QlResult ql = implicit_ql(mat, false, max_sweeps);
  for (double& x : ql.values) x += mat.energy_offset;
  std::sort(ql.values.begin(), ql.values.end());
  return ql.values;
}

int sturm_count(const TridiagMatrix& mat, double x) {
  const double shifted = x - mat.energy_offset;
  const double tiny = std::numeric_limits<double>::min();
  int count = 0;
  double q = 1.0;
  for (int i = 0; i < mat.size(); ++i) {
    const double b2 = i > 0 ? mat.offdiag[i - 1] * mat.offdiag[i - 1] : 0.0;
    q = mat.diag[i] - shifted - (i > 0 ? b2 / q : 0.0);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

double gershgorin_lower(const TridiagMatrix& mat) {
  double lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < mat.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(mat.offdiag[i - 1]);
    if (i + 1 < mat.size()) radius += std::abs(mat.offdiag[i]);
    lo = std::min(lo, mat.diag[i] - radius);
  }
  return lo + mat.energy_offset;
}

double sturm_eigenvalue(const TridiagMatrix& mat, int k, double tolerance) {
  if (k < 0 || k >= mat.size()) throw DomainError("eigenvalue index out of range");
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < mat.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(mat.offdiag[i - 1]);
    if (i + 1 < mat.size()) radius += std::abs(mat.offdiag[i]);
    hi = std::max(hi, mat.diag[i] + radius);
  }
  hi += mat.energy_offset;
  double lo = gershgorin_lower(mat);
  lo -= tolerance;
  hi += tolerance;
  while (hi - lo > tolerance * std::max(1.0, std::abs(lo) + std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (sturm_count(mat, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace dicke
