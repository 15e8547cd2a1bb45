#pragma once

#include <compare>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dicke/errors.hpp"

namespace dicke {

/// Physical constants of the extended Dicke (Dicke-LMG) Hamiltonian
///
///   H = w_f N + delta Jz + eta/N_a Jz^2 + lambda N_a^{-1/2} (a + a^dag)(J+ + J-)
///
/// with N = a^dag a + Jz and delta = omega - omega_f. Two of
/// (omega_f, omega, delta) are supplied and the third is derived, so the
/// detuning relation holds by construction.
class ModelParams {
 public:
  static ModelParams from_omega(double omega_f, double omega, double eta, double lambda,
                                int n_atoms);
  static ModelParams from_delta(double omega_f, double delta, double eta, double lambda,
                                int n_atoms);

  double omega_f() const { return omega_f_; }
  double omega() const { return omega_; }
  double delta() const { return delta_; }
  double eta() const { return eta_; }
  double lambda() const { return lambda_; }
  int n_atoms() const { return n_atoms_; }

  ModelParams with_lambda(double lambda) const;
  ModelParams with_eta(double eta) const;

  std::string describe() const;

 private:
  ModelParams(double omega_f, double omega, double delta, double eta, double lambda,
              int n_atoms);

  double omega_f_;
  double omega_;
  double delta_;
  double eta_;
  double lambda_;
  int n_atoms_;
};

/// Dicke label m of |N_a/2, m>, stored as 2m so half-integers compare exactly.
struct DickeLabel {
  int twice_m = 0;

  static DickeLabel from_excitations(int excited, int n_atoms) {
    return DickeLabel{2 * excited - n_atoms};
  }
  static DickeLabel lowest(int n_atoms) { return DickeLabel{-n_atoms}; }

  double value() const { return 0.5 * twice_m; }
  // Number of excited qubits, N_a/2 + m.
  int excitations(int n_atoms) const { return (twice_m + n_atoms) / 2; }
  bool in_range(int n_atoms) const {
    return twice_m >= -n_atoms && twice_m <= n_atoms && ((twice_m + n_atoms) % 2 == 0);
  }

  auto operator<=>(const DickeLabel&) const = default;
};

std::string to_string(DickeLabel m);

/// (photon number, Dicke label) pair labelling a product-basis vector.
struct BasisLabel {
  int photons = 0;
  DickeLabel m;

  auto operator<=>(const BasisLabel&) const = default;
};

/// The symmetric j = N_a/2 manifold, m ascending.
class DickeBasis {
 public:
  explicit DickeBasis(int n_atoms);

  int n_atoms() const { return n_atoms_; }
  int dimension() const { return n_atoms_ + 1; }
  DickeLabel label(int index) const;
  int index(DickeLabel m) const;

 private:
  int n_atoms_;
};

/// Fock (k = 0..n_cut) x Dicke basis, photon-major with m ascending inside
/// each photon layer.
class ProductBasis {
 public:
  ProductBasis(int n_atoms, int n_cut);

  int n_atoms() const { return dicke_.n_atoms(); }
  int n_cut() const { return n_cut_; }
  int dimension() const { return (n_cut_ + 1) * dicke_.dimension(); }
  const DickeBasis& dicke() const { return dicke_; }

  int index(int photons, DickeLabel m) const;
  int index(const BasisLabel& label) const { return index(label.photons, label.m); }
  BasisLabel label(int index) const;
  std::vector<BasisLabel> labels() const;

 private:
  DickeBasis dicke_;
  int n_cut_;
};

/// Normalized real state over an explicit list of basis labels. Covers both
/// RWA excitation subspaces and truncated product bases.
class PureState {
 public:
  PureState(int n_atoms, std::vector<BasisLabel> labels, Eigen::VectorXd amplitudes);

  // Rescales to unit norm before validating.
  static PureState normalized(int n_atoms, std::vector<BasisLabel> labels,
                              Eigen::VectorXd amplitudes);

  int n_atoms() const { return n_atoms_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  const Eigen::VectorXd& amplitudes() const { return amplitudes_; }
  double amplitude(const BasisLabel& label) const;
  int max_photons() const;

  // Same state expanded on a product basis; labels outside it must carry no weight.
  Eigen::VectorXd on_basis(const ProductBasis& basis) const;

 private:
  int n_atoms_;
  std::vector<BasisLabel> labels_;
  Eigen::VectorXd amplitudes_;
};

inline constexpr double kNormTolerance = 1e-12;

/// |<a|b>|^2 over the union of both label sets.
double fidelity(const PureState& a, const PureState& b);

enum class Ladder { raise, lower };

/// <m|Jz|m> = m.
double jz_element(DickeLabel m, int n_atoms);
/// <m +- 1|J+-|m> = sqrt(j(j+1) - m(m +- 1)), zero when m +- 1 leaves the ladder.
double jpm_element(DickeLabel m, Ladder direction, int n_atoms);
/// k + m, the eigenvalue of N = a^dag a + Jz.
double total_excitation(int photons, DickeLabel m);

/// Collective spin operators on the (N_a + 1)-dimensional Dicke basis.
struct SpinMatrices {
  Eigen::MatrixXd jz;
  Eigen::MatrixXd jplus;
  Eigen::MatrixXd jminus;

  Eigen::MatrixXd jx() const { return 0.5 * (jplus + jminus); }
  Eigen::MatrixXcd jy() const;
};

SpinMatrices spin_matrices(int n_atoms);

}  // namespace dicke
