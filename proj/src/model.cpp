#include "dicke/model.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace dicke {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

ModelParams::ModelParams(double omega_f, double omega, double delta, double eta, double lambda,
                         int n_atoms)
    : omega_f_(omega_f), omega_(omega), delta_(delta), eta_(eta), lambda_(lambda),
      n_atoms_(n_atoms) {
  require(std::isfinite(omega_f) && omega_f > 0.0, "omega_f must be finite and > 0");
  require(std::isfinite(omega) && omega > 0.0, "omega must be finite and > 0");
  require(std::isfinite(eta), "eta must be finite");
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be finite and >= 0");
  require(n_atoms >= 1, "n_atoms must be >= 1");
}

ModelParams ModelParams::from_omega(double omega_f, double omega, double eta, double lambda,
                                    int n_atoms) {
  return ModelParams(omega_f, omega, omega - omega_f, eta, lambda, n_atoms);
}

ModelParams ModelParams::from_delta(double omega_f, double delta, double eta, double lambda,
                                    int n_atoms) {
  return ModelParams(omega_f, omega_f + delta, delta, eta, lambda, n_atoms);
}

ModelParams ModelParams::with_lambda(double lambda) const {
  return ModelParams(omega_f_, omega_, delta_, eta_, lambda, n_atoms_);
}

ModelParams ModelParams::with_eta(double eta) const {
  return ModelParams(omega_f_, omega_, delta_, eta, lambda_, n_atoms_);
}

std::string ModelParams::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "omega_f=" << omega_f_ << " omega=" << omega_ << " delta=" << delta_ << " eta=" << eta_
     << " lambda=" << lambda_ << " n_atoms=" << n_atoms_;
  return os.str();
}

std::string to_string(DickeLabel m) {
  if (m.twice_m % 2 == 0) return std::to_string(m.twice_m / 2);
  return std::to_string(m.twice_m) + "/2";
}

DickeBasis::DickeBasis(int n_atoms) : n_atoms_(n_atoms) {
  require(n_atoms >= 1, "n_atoms must be >= 1");
}

DickeLabel DickeBasis::label(int index) const {
  require(index >= 0 && index < dimension(), "Dicke index out of range");
  return DickeLabel::from_excitations(index, n_atoms_);
}

int DickeBasis::index(DickeLabel m) const {
  require(m.in_range(n_atoms_), "Dicke label " + to_string(m) + " outside j = N_a/2 manifold");
  return m.excitations(n_atoms_);
}

ProductBasis::ProductBasis(int n_atoms, int n_cut) : dicke_(n_atoms), n_cut_(n_cut) {
  require(n_cut >= 0, "photon cutoff must be >= 0");
}

int ProductBasis::index(int photons, DickeLabel m) const {
  require(photons >= 0 && photons <= n_cut_, "photon number outside cutoff");
  return photons * dicke_.dimension() + dicke_.index(m);
}

BasisLabel ProductBasis::label(int index) const {
  require(index >= 0 && index < dimension(), "product-basis index out of range");
  const int width = dicke_.dimension();
  return BasisLabel{index / width, dicke_.label(index % width)};
}

std::vector<BasisLabel> ProductBasis::labels() const {
  std::vector<BasisLabel> out;
  out.reserve(dimension());
  for (int i = 0; i < dimension(); ++i) out.push_back(label(i));
  return out;
}

PureState::PureState(int n_atoms, std::vector<BasisLabel> labels, Eigen::VectorXd amplitudes)
    : n_atoms_(n_atoms), labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
  require(static_cast<Eigen::Index>(labels_.size()) == amplitudes_.size(),
          "label/amplitude size mismatch");
  require(!labels_.empty(), "empty state");
  for (const auto& l : labels_) {
    require(l.photons >= 0 && l.m.in_range(n_atoms_), "state label outside basis");
  }
  require(std::abs(amplitudes_.squaredNorm() - 1.0) <= kNormTolerance, "state is not normalized");
}

PureState PureState::normalized(int n_atoms, std::vector<BasisLabel> labels,
                                Eigen::VectorXd amplitudes) {
  const double norm = amplitudes.norm();
  require(norm > 0.0 && std::isfinite(norm), "cannot normalize a zero state");
  amplitudes /= norm;
  return PureState(n_atoms, std::move(labels), std::move(amplitudes));
}

double PureState::amplitude(const BasisLabel& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return amplitudes_[static_cast<Eigen::Index>(i)];
  }
  return 0.0;
}

int PureState::max_photons() const {
  int out = 0;
  for (const auto& l : labels_) out = std::max(out, l.photons);
  return out;
}

Eigen::VectorXd PureState::on_basis(const ProductBasis& basis) const {
  require(basis.n_atoms() == n_atoms_, "basis has a different atom number");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(basis.dimension());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const double c = amplitudes_[static_cast<Eigen::Index>(i)];
    if (labels_[i].photons > basis.n_cut()) {
      require(c == 0.0, "state has weight above the basis cutoff");
      continue;
    }
    out[basis.index(labels_[i])] += c;
  }
  return out;
}

double fidelity(const PureState& a, const PureState& b) {
  require(a.n_atoms() == b.n_atoms(), "fidelity between different atom numbers");
  std::map<BasisLabel, double> lookup;
  for (int i = 0; i < b.size(); ++i) lookup[b.labels()[i]] += b.amplitudes()[i];
  double overlap = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    auto it = lookup.find(a.labels()[i]);
    if (it != lookup.end()) overlap += a.amplitudes()[i] * it->second;
  }
  return overlap * overlap;
}

double jz_element(DickeLabel m, int n_atoms) {
  require(n_atoms >= 1, "n_atoms must be >= 1");
  require(m.in_range(n_atoms), "Dicke label " + to_string(m) + " out of range");
  return m.value();
}

double jpm_element(DickeLabel m, Ladder direction, int n_atoms) {
  require(n_atoms >= 1, "n_atoms must be >= 1");
  require(m.in_range(n_atoms), "Dicke label " + to_string(m) + " out of range");
  const int step = direction == Ladder::raise ? 2 : -2;
  if (!DickeLabel{m.twice_m + step}.in_range(n_atoms)) return 0.0;
  // Integer form of j(j+1) - m(m +- 1) scaled by 4, exact for every N_a.
  const long twice_j = n_atoms;
  const long tm = m.twice_m;
  const long four_x = twice_j * (twice_j + 2) - tm * (tm + step);
  return 0.5 * std::sqrt(static_cast<double>(four_x));
}

double total_excitation(int photons, DickeLabel m) {
  require(photons >= 0, "photon number must be >= 0");
  return photons + m.value();
}

Eigen::MatrixXcd SpinMatrices::jy() const {
  const std::complex<double> minus_half_i(0.0, -0.5);
  return minus_half_i * (jplus - jminus).cast<std::complex<double>>();
}

SpinMatrices spin_matrices(int n_atoms) {
  const DickeBasis basis(n_atoms);
  const int d = basis.dimension();
  SpinMatrices s{Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d),
                 Eigen::MatrixXd::Zero(d, d)};
  for (int i = 0; i < d; ++i) {
    const DickeLabel m = basis.label(i);
    s.jz(i, i) = jz_element(m, n_atoms);
    if (i + 1 < d) s.jplus(i + 1, i) = jpm_element(m, Ladder::raise, n_atoms);
    if (i > 0) s.jminus(i - 1, i) = jpm_element(m, Ladder::lower, n_atoms);
  }
  return s;
}

}  // namespace dicke
