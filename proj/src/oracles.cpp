#include "dicke/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

namespace dicke::oracle {

Eigen::VectorXd dicke_qubit_vector(int n_atoms, int excited) {
  const unsigned dim = 1u << n_atoms;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  for (unsigned s = 0; s < dim; ++s) {
    if (std::popcount(s) == excited) v[s] = 1.0;
  }
  return v.normalized();
}

Eigen::MatrixXcd lift_to_qubits(const Eigen::MatrixXcd& rho_dicke, int n_atoms) {
  const int dim = 1 << n_atoms;
  Eigen::MatrixXcd basis(dim, n_atoms + 1);
  for (int p = 0; p <= n_atoms; ++p) basis.col(p) = dicke_qubit_vector(n_atoms, p).cast<std::complex<double>>();
  return basis * rho_dicke * basis.adjoint();
}

Eigen::Matrix4cd keep_pair(const Eigen::MatrixXcd& rho_qubits, int n_atoms, int first,
                           int second) {
  if (first == second || first < 0 || second < 0 || first >= n_atoms || second >= n_atoms) {
    throw DomainError("keep_pair needs two distinct qubits in range");
  }
  const unsigned dim = 1u << n_atoms;
  auto bit = [&](unsigned s, int q) { return (s >> (n_atoms - 1 - q)) & 1u; };
  auto rest_mask = [&](unsigned s) {
    return s & ~((1u << (n_atoms - 1 - first)) | (1u << (n_atoms - 1 - second)));
  };
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (unsigned a = 0; a < dim; ++a) {
    for (unsigned b = 0; b < dim; ++b) {
      if (rest_mask(a) != rest_mask(b)) continue;
      const int ia = 2 * bit(a, first) + bit(a, second);
      const int ib = 2 * bit(b, first) + bit(b, second);
      out(ia, ib) += rho_qubits(a, b);
    }
  }
  return out;
}

Eigen::MatrixXcd field_trace_by_outer_product(const PureState& state) {
  const int na = state.n_atoms();
  const ProductBasis basis(na, state.max_photons());
  const Eigen::VectorXd psi = state.on_basis(basis);
  const Eigen::MatrixXd full = psi * psi.transpose();
  const int w = na + 1;
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(w, w);
  for (int k = 0; k <= basis.n_cut(); ++k) rho += full.block(k * w, k * w, w, w);
  return rho.cast<std::complex<double>>();
}

namespace {

struct Ops {
  Eigen::MatrixXd a, ad, n, jz, jp, jm, id_f, id_s;
};

Ops make_ops(int n_atoms, int n_cut) {
  const int df = n_cut + 1;
  const int ds = n_atoms + 1;
  Ops o;
  o.a = Eigen::MatrixXd::Zero(df, df);
  for (int k = 1; k < df; ++k) o.a(k - 1, k) = std::sqrt(static_cast<double>(k));
  o.ad = o.a.transpose();
  o.n = o.ad * o.a;
  const double j = 0.5 * n_atoms;
  o.jz = Eigen::MatrixXd::Zero(ds, ds);
  o.jp = Eigen::MatrixXd::Zero(ds, ds);
  for (int i = 0; i < ds; ++i) {
    const double m = -j + i;
    o.jz(i, i) = m;
    if (i + 1 < ds) o.jp(i + 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  o.jm = o.jp.transpose();
  o.id_f = Eigen::MatrixXd::Identity(df, df);
  o.id_s = Eigen::MatrixXd::Identity(ds, ds);
  return o;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  Eigen::MatrixXd out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      out.block(r * y.rows(), c * y.cols(), y.rows(), y.cols()) = x(r, c) * y;
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXd kron_full_hamiltonian(const ModelParams& p, int n_cut) {
  const Ops o = make_ops(p.n_atoms(), n_cut);
  const double g = p.lambda() / std::sqrt(static_cast<double>(p.n_atoms()));
  return p.omega_f() * kron(o.n, o.id_s) + p.omega() * kron(o.id_f, o.jz) +
         p.eta() / p.n_atoms() * kron(o.id_f, o.jz * o.jz) + g * kron(o.a + o.ad, o.jp + o.jm);
}

Eigen::MatrixXd kron_rwa_hamiltonian(const ModelParams& p, int n_cut) {
  const Ops o = make_ops(p.n_atoms(), n_cut);
  const double g = p.lambda() / std::sqrt(static_cast<double>(p.n_atoms()));
  return p.omega_f() * kron(o.n, o.id_s) + p.omega() * kron(o.id_f, o.jz) +
         p.eta() / p.n_atoms() * kron(o.id_f, o.jz * o.jz) +
         g * (kron(o.a, o.jp) + kron(o.ad, o.jm));
}

double concurrence_nonhermitian(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = yy(3, 0) = -1.0;
  yy(1, 2) = yy(2, 1) = 1.0;
  const Eigen::Matrix4cd r = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r);
  std::vector<double> s;
  for (int i = 0; i < 4; ++i) s.push_back(std::sqrt(std::max(0.0, es.eigenvalues()[i].real())));
  std::sort(s.begin(), s.end(), std::greater<>());
  return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

}  // namespace dicke::oracle
