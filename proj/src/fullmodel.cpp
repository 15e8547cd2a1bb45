#include "dicke/fullmodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "dicke/rwa.hpp"

namespace dicke::full {

FullHamiltonian build_full(const ModelParams& params, int n_cut) {
  if (n_cut < 1) throw DomainError("full model needs n_cut >= 1");
  ProductBasis basis(params.n_atoms(), n_cut);
  const int na = params.n_atoms();
  const int dim = basis.dimension();
  const double coupling = params.lambda() / std::sqrt(static_cast<double>(na));

  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(dim) * 5);
  for (int i = 0; i < dim; ++i) {
    const BasisLabel l = basis.label(i);
    const double m = l.m.value();
    entries.emplace_back(i, i,
                         params.omega_f() * l.photons + params.omega() * m +
                             params.eta() * m * m / na);
    if (l.photons == n_cut || coupling == 0.0) continue;
    // (k, m) <-> (k + 1, m +- 1), both rotating and counter-rotating.
    for (const Ladder dir : {Ladder::raise, Ladder::lower}) {
      const double ladder = jpm_element(l.m, dir, na);
      if (ladder == 0.0) continue;
      const DickeLabel target{l.m.twice_m + (dir == Ladder::raise ? 2 : -2)};
      const int j = basis.index(l.photons + 1, target);
      const double v = coupling * std::sqrt(l.photons + 1.0) * ladder;
      entries.emplace_back(i, j, v);
      entries.emplace_back(j, i, v);
    }
  }
  Eigen::SparseMatrix<double> h(dim, dim);
  h.setFromTriplets(entries.begin(), entries.end());
  return FullHamiltonian{std::move(basis), params, std::move(h)};
}

Eigen::VectorXd parity_diagonal(const ProductBasis& basis) {
  Eigen::VectorXd p(basis.dimension());
  for (int i = 0; i < basis.dimension(); ++i) {
    const BasisLabel l = basis.label(i);
    p[i] = (l.photons + l.m.excitations(basis.n_atoms())) % 2 == 0 ? 1.0 : -1.0;
  }
  return p;
}

int initial_cutoff_guess(const ModelParams& params) {
  const double lam = params.lambda() / params.omega_f();
  const double estimate = std::ceil(8.0 * lam * lam * params.n_atoms()) + params.n_atoms();
  return static_cast<int>(std::max(16.0, std::min(estimate, 1e9)));
}

double tail_mass(const PureState& state, int n_cut) {
  double mass = 0.0;
  for (int i = 0; i < state.size(); ++i) {
    if (state.labels()[i].photons >= n_cut - 1) mass += state.amplitudes()[i] * state.amplitudes()[i];
  }
  return mass;
}

namespace {

struct SectorSolution {
  double energy = std::numeric_limits<double>::infinity();
  Eigen::VectorXd vector;  // on the full product basis
};

Eigen::VectorXd default_start(Eigen::Index dim) {
  // Deterministic, photon-decaying start vector with overlap on every state.
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = u(rng);
  return v;
}

SectorSolution solve_indices(const Eigen::SparseMatrix<double>& h, const std::vector<int>& idx,
                             const FullSolveOptions& options, const Eigen::VectorXd& warm) {
  const int n = static_cast<int>(idx.size());
  SectorSolution out;
  if (n == 0) return out;
  Eigen::SparseMatrix<double> block(n, n);
  {
    std::vector<int> position(h.rows(), -1);
    for (int i = 0; i < n; ++i) position[idx[i]] = i;
    std::vector<Eigen::Triplet<double>> entries;
    for (int c = 0; c < n; ++c) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(h, idx[c]); it; ++it) {
        const int r = position[it.row()];
        if (r >= 0) entries.emplace_back(r, c, it.value());
      }
    }
    block.setFromTriplets(entries.begin(), entries.end());
  }

  Eigen::VectorXd local;
  if (n <= options.dense_max_dim) {
    const Eigen::MatrixXd dense_block(block);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_block);
    if (es.info() != Eigen::Success) throw NumericError("dense eigensolver failed");
    out.energy = es.eigenvalues()[0];
    local = es.eigenvectors().col(0);
  } else {
    Eigen::VectorXd start(n);
    bool have_warm = warm.size() == h.rows();
    if (have_warm) {
      for (int i = 0; i < n; ++i) start[i] = warm[idx[i]];
      have_warm = start.norm() > 1e-3;
    }
    if (!have_warm) start = default_start(n);
    LanczosResult r = lanczos_ground(block, start, options.lanczos);
    out.energy = r.value;
    local = std::move(r.vector);
  }
  out.vector = Eigen::VectorXd::Zero(h.rows());
  for (int i = 0; i < n; ++i) out.vector[idx[i]] = local[i];
  return out;
}

void fix_sign(Eigen::VectorXd& v) {
  const double cutoff = 1e-10 * v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > cutoff) {
      if (v[i] < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace

ConvergedGround ground_at_cutoff(const ModelParams& params, int n_cut,
                                 const FullSolveOptions& options,
                                 const Eigen::VectorXd& warm_start) {
  const FullHamiltonian ham = build_full(params, n_cut);
  const Eigen::VectorXd parity = parity_diagonal(ham.basis);
  const int dim = ham.basis.dimension();

  Eigen::VectorXd vec;
  double energy = 0.0;
  double gap = std::numeric_limits<double>::quiet_NaN();
  bool doublet = false;

  if (options.parity_blocks) {
    std::vector<int> even, odd;
    for (int i = 0; i < dim; ++i) (parity[i] > 0 ? even : odd).push_back(i);
    SectorSolution se = solve_indices(ham.matrix, even, options, warm_start);
    SectorSolution so = solve_indices(ham.matrix, odd, options, warm_start);
    gap = so.energy - se.energy;
    const double tol = options.doublet_tolerance * std::max(1.0, std::abs(se.energy));
    if (std::abs(gap) <= tol || gap > 0.0) {
      doublet = std::abs(gap) <= tol;
      energy = se.energy;
      vec = std::move(se.vector);
    } else {
      energy = so.energy;
      vec = std::move(so.vector);
    }
  } else {
    std::vector<int> all(dim);
    for (int i = 0; i < dim; ++i) all[i] = i;
    SectorSolution s = solve_indices(ham.matrix, all, options, warm_start);
    energy = s.energy;
    vec = std::move(s.vector);
    const double mean_parity = vec.dot(parity.cwiseProduct(vec));
    if (std::abs(mean_parity) < 1.0 - 1e-6) {
      // Mixed member of a degenerate parity doublet: keep its even component.
      vec = (vec + parity.cwiseProduct(vec)) * 0.5;
      if (vec.norm() < 1e-6) throw NumericError("degenerate ground state without even component");
      doublet = true;
    }
  }
  vec.normalize();
  fix_sign(vec);
  const double mean_parity = vec.dot(parity.cwiseProduct(vec));

  ConvergedGround out{energy,
                      PureState::normalized(params.n_atoms(), ham.basis.labels(), vec),
                      n_cut,
                      0.0,
                      mean_parity >= 0.0 ? 1 : -1,
                      gap,
                      doublet};
  out.tail_mass = tail_mass(out.state, n_cut);
  return out;
}

ConvergedGround ground_full(const ModelParams& params, const FullSolveOptions& options) {
  if (!(options.tolerance > 0.0)) throw DomainError("tolerance must be > 0");
  int n_cut = options.initial_cutoff >= 1 ? options.initial_cutoff : initial_cutoff_guess(params);
  if (n_cut > options.max_cutoff) {
    throw ConvergenceError("initial photon cutoff " + std::to_string(n_cut) + " exceeds cap " +
                           std::to_string(options.max_cutoff) + " (" + params.describe() + ")");
  }
  ConvergedGround prev = ground_at_cutoff(params, n_cut, options);
  for (;;) {
    const int next_cut = 2 * n_cut;
    if (next_cut > options.max_cutoff) {
      throw ConvergenceError("photon cutoff cap " + std::to_string(options.max_cutoff) +
                             " reached without convergence (" + params.describe() + ")");
    }
    const ProductBasis next_basis(params.n_atoms(), next_cut);
    ConvergedGround cur =
        ground_at_cutoff(params, next_cut, options, prev.state.on_basis(next_basis));
    const double de = std::abs(cur.energy - prev.energy);
    if (de < options.tolerance * std::max(1.0, std::abs(cur.energy)) &&
        cur.tail_mass < options.tail_threshold) {
      return cur;
    }
    prev = std::move(cur);
    n_cut = next_cut;
  }
}

double effective_coupling(const ModelParams& params) {
  return 2.0 * params.omega_f() * params.lambda() / (params.omega() + params.omega_f());
}

double transformation_xi(const ModelParams& params) {
  return 2.0 * params.lambda() / std::sqrt(static_cast<double>(params.n_atoms())) /
         (params.omega() + params.omega_f());
}

Eigen::VectorXd apply_transformation(const ProductBasis& basis, double xi,
                                     const Eigen::VectorXd& v) {
  // -i xi (a + a^dag) Jy = -(xi/2) (a + a^dag)(J+ - J-), a real antisymmetric generator.
  const int na = basis.n_atoms();
  std::vector<Eigen::Triplet<double>> trip;
  for (int i = 0; i < basis.dimension(); ++i) {
    const BasisLabel l = basis.label(i);
    for (int dk : {-1, 1}) {
      const int k = l.photons + dk;
      if (k < 0 || k > basis.n_cut()) continue;
      const double field = std::sqrt(static_cast<double>(dk > 0 ? k : l.photons));
      for (Ladder dir : {Ladder::raise, Ladder::lower}) {
        const DickeLabel m{l.m.twice_m + (dir == Ladder::raise ? 2 : -2)};
        if (!m.in_range(na)) continue;
        const double spin = (dir == Ladder::raise ? 1.0 : -1.0) * jpm_element(l.m, dir, na);
        trip.emplace_back(basis.index(BasisLabel{k, m}), i, -0.5 * xi * field * spin);
      }
    }
  }
  Eigen::SparseMatrix<double> gen(basis.dimension(), basis.dimension());
  gen.setFromTriplets(trip.begin(), trip.end());

  Eigen::VectorXd out = v;
  Eigen::VectorXd term = v;
  for (int k = 1; k < 200; ++k) {
    term = (gen * term) / k;
    out += term;
    if (term.norm() <= 1e-17 * out.norm()) return out;
  }
  throw ConvergenceError("transformation series did not converge; xi too large");
}

PureState weak_coupling_state(const ModelParams& params, int n_cut) {
  const auto rwa_ground = rwa::ground_state(params.with_lambda(effective_coupling(params)));
  const ProductBasis basis(params.n_atoms(), n_cut);
  const Eigen::VectorXd v =
      apply_transformation(basis, transformation_xi(params), rwa_ground.state.on_basis(basis));
  return PureState::normalized(params.n_atoms(), basis.labels(), v);
}

double critical_coupling_1_cr(const ModelParams& params) {
  const double radicand =
      (params.omega() + (1.0 / params.n_atoms() - 1.0) * params.eta()) / params.omega_f();
  if (radicand < 0.0) throw DomainError("w + (1/N_a - 1) eta < 0 in weak-coupling critical coupling");
  return 0.5 * (params.omega() + params.omega_f()) * std::sqrt(radicand);
}

}  // namespace dicke::full
