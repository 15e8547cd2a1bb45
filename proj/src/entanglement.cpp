#include "dicke/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include <Eigen/Eigenvalues>

namespace dicke {

namespace {

constexpr double kClip = 1e-12;

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Eigenvalues this far below the largest are rounding noise; their square
// roots would otherwise leak ~1e-8 into fidelities and concurrences.
constexpr double kEigenFloor = 1e-14;

double floored(double x, double scale) { return x > kEigenFloor * scale ? x : 0.0; }

Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()));
  const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  Eigen::VectorXd s =
      es.eigenvalues().unaryExpr([scale](double x) { return std::sqrt(floored(x, scale)); });
  return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw DomainError("density matrix must be square and non-empty");
  }
}

double DensityMatrix::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (matrix_ + matrix_.adjoint()),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

bool DensityMatrix::is_valid(double tolerance) const {
  return hermiticity_error() <= tolerance && std::abs(trace() - 1.0) <= tolerance &&
         std::abs(matrix_.trace().imag()) <= tolerance && eigenvalues().minCoeff() >= -tolerance;
}

DensityMatrix trace_out_field(const PureState& state) {
  const int na = state.n_atoms();
  const DickeBasis dicke(na);
  std::map<int, Eigen::VectorXd> by_photon;
  for (int i = 0; i < state.size(); ++i) {
    const BasisLabel& l = state.labels()[i];
    auto [it, inserted] = by_photon.try_emplace(l.photons, Eigen::VectorXd::Zero(na + 1));
    it->second[dicke.index(l.m)] += state.amplitudes()[i];
  }
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(na + 1, na + 1);
  for (const auto& [k, v] : by_photon) rho.noalias() += v * v.transpose();
  return DensityMatrix(rho.cast<std::complex<double>>());
}

double entropy_of_entanglement(const DensityMatrix& rho) {
  double s = 0.0;
  for (double p : rho.eigenvalues()) {
    if (p >= -kClip && p <= 0.0) continue;
    if (p > 0.0) s -= p * std::log2(p);
  }
  return std::max(0.0, s);
}

DensityMatrix reduce_to_two_qubits(const DensityMatrix& rho_a, int n_atoms) {
  if (n_atoms < 2) throw DomainError("pair reduction needs at least two qubits");
  if (rho_a.dimension() != n_atoms + 1) throw DomainError("rho_a is not on the Dicke basis");
  const int rest = n_atoms - 2;
  // weight(p, q): amplitude of |D_2^q>|D_rest^(p-q)> inside |D_N^p>.
  auto weight = [&](int p, int q) {
    return std::sqrt(binomial(2, q) * binomial(rest, p - q) / binomial(n_atoms, p));
  };
  // Pair symmetric block in the {|D_2^0>, |D_2^1>, |D_2^2>} basis.
  Eigen::Matrix3cd sym = Eigen::Matrix3cd::Zero();
  const auto& r = rho_a.matrix();
  for (int p = 0; p <= n_atoms; ++p) {
    for (int pp = 0; pp <= n_atoms; ++pp) {
      if (r(p, pp) == std::complex<double>(0.0)) continue;
      for (int q = 0; q <= 2; ++q) {
        const int qq = q + pp - p;  // remainder excitations must agree
        if (qq < 0 || qq > 2 || p - q < 0 || p - q > rest) continue;
        sym(q, qq) += r(p, pp) * weight(p, q) * weight(pp, qq);
      }
    }
  }
  // Embed: |D_2^0> = |00>, |D_2^1> = (|01> + |10>)/sqrt2, |D_2^2> = |11>.
  Eigen::Matrix<std::complex<double>, 4, 3> embed = Eigen::Matrix<std::complex<double>, 4, 3>::Zero();
  embed(0, 0) = 1.0;
  embed(1, 1) = embed(2, 1) = 1.0 / std::sqrt(2.0);
  embed(3, 2) = 1.0;
  return DensityMatrix(embed * sym * embed.adjoint());
}

double wootters_concurrence(const DensityMatrix& rho2) {
  if (rho2.dimension() != 4) throw DomainError("concurrence needs a 4x4 density matrix");
  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
  flip(0, 3) = flip(3, 0) = -1.0;
  flip(1, 2) = flip(2, 1) = 1.0;
  const Eigen::MatrixXcd& rho = rho2.matrix();
  const Eigen::MatrixXcd tilde = flip * rho.conjugate() * flip;
  // sqrt(rho) tilde sqrt(rho) is Hermitian PSD and shares the spectrum of rho tilde.
  const Eigen::MatrixXcd s = hermitian_sqrt(rho);
  const Eigen::MatrixXcd m = s * tilde * s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()),
                                                     Eigen::EigenvaluesOnly);
  const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  std::vector<double> roots;
  for (double x : es.eigenvalues()) roots.push_back(std::sqrt(floored(x, scale)));
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return std::clamp(roots[0] - roots[1] - roots[2] - roots[3], 0.0, 1.0);
}

double cw_of_ground(const PureState& state) {
  const DensityMatrix rho_a = trace_out_field(state);
  return wootters_concurrence(reduce_to_two_qubits(rho_a, state.n_atoms()));
}

double state_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dimension() != sigma.dimension()) throw DomainError("fidelity dimension mismatch");
  const Eigen::MatrixXcd s = hermitian_sqrt(rho.matrix());
  const Eigen::MatrixXcd inner = hermitian_sqrt(s * sigma.matrix() * s);
  const double t = inner.trace().real();
  return t * t;
}

}  // namespace dicke
