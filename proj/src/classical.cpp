#include "dicke/classical.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

namespace dicke::classical {

double hp_first_energy(const ModelParams& params) {
  const double lam = params.lambda();
  const double atomic = params.omega() + (1.0 / params.n_atoms() - 1.0) * params.eta();
  const double diff = atomic - params.omega_f();
  return 0.5 * (params.omega_f() + atomic - std::sqrt(4.0 * lam * lam + diff * diff));
}

double critical_coupling_cl(const ModelParams& params) {
  const double radicand =
      (params.omega() + (1.0 / params.n_atoms() - 1.0) * params.eta()) * params.omega_f();
  if (radicand < 0.0) throw DomainError("w + (1/N_a - 1) eta < 0: no classical-limit crossing");
  return std::sqrt(radicand);
}

double mean_field_energy(const ModelParams& params, double alpha, double beta) {
  const double b2 = beta * beta;
  const double lam = params.lambda();
  return params.omega_f() * alpha * alpha + (params.omega() - params.eta()) * b2 +
         params.eta() / params.n_atoms() * b2 * b2 +
         (lam - lam * b2 / (2.0 * params.n_atoms())) * (2.0 * alpha) * (2.0 * beta);
}

MeanFieldPoint mean_field_minimize(const ModelParams& params) {
  const double na = params.n_atoms();
  const double wf = params.omega_f();
  const double a = 4.0 * params.lambda() * params.lambda() / wf;
  const double s = 1.0 / (2.0 * na);
  // With alpha eliminated (alpha = -2 lambda beta (1 - s beta^2) / w_f) the
  // energy is a cubic in x = beta^2:  c1 x + c2 x^2 + c3 x^3.
  const double c1 = params.omega() - params.eta() - a;
  const double c2 = params.eta() / na + 2.0 * a * s;
  const double c3 = -a * s * s;
  auto reduced = [&](double x) { return x * (c1 + x * (c2 + x * c3)); };

  std::vector<double> candidates{na};
  // Stationary points: c1 + 2 c2 x + 3 c3 x^2 = 0.
  if (c3 != 0.0) {
    const double qa = 3.0 * c3;
    const double qb = 2.0 * c2;
    const double disc = qb * qb - 4.0 * qa * c1;
    if (disc >= 0.0) {
      const double root = std::sqrt(disc);
      // Cancellation-free pair of roots.
      const double q = -0.5 * (qb + std::copysign(root, qb));
      if (q != 0.0) candidates.push_back(c1 / q);
      if (qa != 0.0) candidates.push_back(q / qa);
    }
  } else if (c2 != 0.0) {
    candidates.push_back(-c1 / (2.0 * c2));
  }

  double best_x = 0.0;
  double best = 0.0;
  for (double x : candidates) {
    if (!std::isfinite(x)) throw NumericError("mean-field stationary point is not finite");
    if (x <= 0.0 || x > na) continue;
    const double g = reduced(x);
    if (g < best) {
      best = g;
      best_x = x;
    }
  }
  if (best_x == 0.0) return MeanFieldPoint{0.0, 0.0, 0.0};
  const double beta = -std::sqrt(best_x);
  const double alpha = -2.0 * params.lambda() * beta * (1.0 - s * best_x) / wf;
  return MeanFieldPoint{alpha, beta, mean_field_energy(params, alpha, beta)};
}

double critical_coupling_clcr(const ModelParams& params) {
  const double radicand = (params.omega() - params.eta()) * params.omega_f();
  if (radicand < 0.0) throw DomainError("w < eta: counter-rotating classical threshold undefined");
  return std::sqrt(radicand) / 2.0;
}

SpinExpectations spin_coherent_expectations(double theta, double phi, int n_atoms) {
  const SpinMatrices s = spin_matrices(n_atoms);
  const int d = n_atoms + 1;
  using cd = std::complex<double>;
  // exp(-i theta Jy) from the eigen-decomposition of the Hermitian Jy.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s.jy());
  Eigen::VectorXcd phases(d);
  for (int i = 0; i < d; ++i) phases[i] = std::exp(cd(0.0, -theta * es.eigenvalues()[i]));
  const Eigen::MatrixXcd rot_y = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

  Eigen::VectorXcd top = Eigen::VectorXcd::Zero(d);
  top[d - 1] = 1.0;  // m = +N_a/2
  Eigen::VectorXcd psi = rot_y * top;
  for (int i = 0; i < d; ++i) psi[i] *= std::exp(cd(0.0, -phi * s.jz(i, i)));

  const Eigen::MatrixXcd jp = s.jplus.cast<cd>();
  const Eigen::MatrixXcd jm = s.jminus.cast<cd>();
  SpinExpectations out;
  out.jz = psi.dot(s.jz.cast<cd>() * psi).real();
  out.jplus = psi.dot(jp * psi);
  out.jminus = psi.dot(jm * psi);
  return out;
}

double coherent_coefficient_b(int n_atoms, double beta) {
  if (n_atoms < 1) throw DomainError("n_atoms must be >= 1");
  auto binom = [](int n, int k) {
    double out = 1.0;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
  };
  const double c = std::cos(0.5 * beta);
  const double sn = std::sin(0.5 * beta);
  double sum = 0.0;
  // m = -j .. j - 1 expressed through p = j + m = 0 .. 2j - 1.
  for (int p = 0; p < n_atoms; ++p) {
    sum += std::sqrt(binom(n_atoms, p) * binom(n_atoms, p + 1)) * std::pow(c, 2 * p + 1) *
           std::pow(sn, 2 * n_atoms - 2 * p - 1);
  }
  return sum;
}

SpinExpectations spin_coherent_closed_form(double theta, double phi, int n_atoms) {
  using cd = std::complex<double>;
  const double na = n_atoms;
  const double st = std::sin(theta);
  SpinExpectations out;
  out.jz = 0.5 * std::sqrt(na) * st;
  const double base = 0.5 * na * (0.5 * na + 1.0) - 0.25 * na * st * st;
  const double b = coherent_coefficient_b(n_atoms, theta);
  const double tail = std::pow(0.5 * st, n_atoms);
  for (const int sign : {+1, -1}) {
    const double radicand = base + sign * 0.5 * std::sqrt(na) * st;
    const cd value = std::sqrt(cd(radicand, 0.0)) * (b * std::exp(cd(0.0, sign * phi)) + tail);
    (sign > 0 ? out.jplus : out.jminus) = value;
  }
  return out;
}

SpinComparison compare_spin_coherent(double theta, double phi, int n_atoms) {
  SpinComparison cmp{spin_coherent_expectations(theta, phi, n_atoms),
                     spin_coherent_closed_form(theta, phi, n_atoms), 0.0};
  cmp.max_abs_difference = std::max({std::abs(cmp.exact.jz - cmp.closed_form.jz),
                                     std::abs(cmp.exact.jplus - cmp.closed_form.jplus),
                                     std::abs(cmp.exact.jminus - cmp.closed_form.jminus)});
  return cmp;
}

}  // namespace dicke::classical
