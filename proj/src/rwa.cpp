#include "dicke/rwa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dicke::rwa {

namespace {

// d_j for the Dicke label m = n - j - N_a/2.
double diagonal_term(const ModelParams& p, DickeLabel m) {
  const double mv = m.value();
  return mv * (p.delta() + p.eta() * mv / p.n_atoms());
}

// Lower bound on the lowest eigenvalue of every block n' >= n, increasing in
// n' once n' >= lambda^2 (N_a + 1) / w_f^2.
double tail_lower_bound(const ModelParams& p, int n, double min_diag) {
  return p.omega_f() * (n - 0.5 * p.n_atoms()) + min_diag -
         2.0 * p.lambda() * std::sqrt(static_cast<double>(n) * (p.n_atoms() + 1));
}

}  // namespace

int first_photon(int n, int n_atoms) { return std::max(0, n - n_atoms); }

std::vector<BasisLabel> subspace_labels(int n, int n_atoms) {
  if (n < 0) throw DomainError("excitation index must be >= 0");
  std::vector<BasisLabel> labels;
  for (int j = first_photon(n, n_atoms); j <= n; ++j) {
    labels.push_back(BasisLabel{j, DickeLabel{2 * (n - j) - n_atoms}});
  }
  return labels;
}

TridiagMatrix build_subspace(const ModelParams& params, int n) {
  const int na = params.n_atoms();
  const auto labels = subspace_labels(n, na);
  TridiagMatrix mat;
  mat.energy_offset = params.omega_f() * (n - 0.5 * na);
  const double coupling = params.lambda() / std::sqrt(static_cast<double>(na));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    mat.diag.push_back(diagonal_term(params, labels[i].m));
    if (i > 0) {
      // o_j = sqrt(j (N_a + j - n)(n - j + 1)) for photon number j.
      const long j = labels[i].photons;
      const long o2 = j * (na + j - n) * (n - j + 1);
      mat.offdiag.push_back(coupling * std::sqrt(static_cast<double>(o2)));
    }
  }
  return mat;
}

SubspaceGround subspace_ground(const ModelParams& params, int n) {
  const TridiagMatrix mat = build_subspace(params, n);
  EigenPair pair = tridiag_ground(mat);
  return SubspaceGround{pair.value, PureState::normalized(params.n_atoms(),
                                                          subspace_labels(n, params.n_atoms()),
                                                          std::move(pair.vector))};
}

GroundStateResult ground_state(const ModelParams& params, const SearchPolicy& search) {
  const int na = params.n_atoms();
  const int n_max = search.resolved_n_max(na);

  double min_diag = std::numeric_limits<double>::infinity();
  for (int p = 0; p <= na; ++p) {
    min_diag = std::min(min_diag, diagonal_term(params, DickeLabel::from_excitations(p, na)));
  }
  const double lam = params.lambda();
  const double monotone_from = lam * lam * (na + 1) / (params.omega_f() * params.omega_f());

  SubspaceGround best = subspace_ground(params, 0);
  int best_n = 0;
  bool tie_with_next = false;

  for (int n = 1; n <= n_max; ++n) {
    const double tol = search.tie_tolerance * std::max(1.0, std::abs(best.energy));
    if (n >= monotone_from && tail_lower_bound(params, n, min_diag) > best.energy + tol) {
      GroundStateResult out{best.energy, std::move(best.state), best_n, tie_with_next};
      return out;
    }
    const TridiagMatrix mat = build_subspace(params, n);
    if (gershgorin_lower(mat) > best.energy + tol) continue;
    SubspaceGround cand = subspace_ground(params, n);
    if (cand.energy < best.energy - tol) {
      best = std::move(cand);
      best_n = n;
      tie_with_next = false;
    } else if (cand.energy <= best.energy + tol && n == best_n + 1) {
      tie_with_next = true;
    }
  }
  throw UnboundedSearchError("RWA subspace search reached n_max = " + std::to_string(n_max) +
                             " without a stopping certificate (" + params.describe() + ")");
}

double critical_coupling_1(const ModelParams& params) {
  const double radicand =
      (params.omega() + (1.0 / params.n_atoms() - 1.0) * params.eta()) * params.omega_f();
  if (radicand < 0.0) {
    throw DomainError("w + (1/N_a - 1) eta < 0: vacuum already unstable at lambda = 0");
  }
  return std::sqrt(radicand);
}

double amplitude_h(const ModelParams& params) {
  const double lam = params.lambda();
  if (!(lam > 0.0)) throw DomainError("amplitude parameter h requires lambda > 0");
  // Diagonal gap between |0>|1 - N_a/2> and |1>|-N_a/2> in the n = 1 block.
  const double gap = params.delta() - (1.0 - 1.0 / params.n_atoms()) * params.eta();
  return (gap - std::sqrt(4.0 * lam * lam + gap * gap)) / (2.0 * lam);
}

PureState first_nonvacuum_state(const ModelParams& params) {
  const double h = amplitude_h(params);
  const int na = params.n_atoms();
  Eigen::VectorXd c(2);
  if (std::isinf(h)) {
    c << std::copysign(1.0, h), 0.0;
  } else {
    const double norm = std::hypot(h, 1.0);
    c << h / norm, 1.0 / norm;
  }
  std::vector<BasisLabel> labels{{0, DickeLabel{2 - na}}, {1, DickeLabel{-na}}};
  return PureState::normalized(na, std::move(labels), std::move(c));
}

namespace {

int ground_index(const ModelParams& base, double lambda, const SearchPolicy& search) {
  return ground_state(base.with_lambda(lambda), search).subspace_index;
}

double energy_gap(const ModelParams& base, double lambda, int a, int b) {
  const ModelParams p = base.with_lambda(lambda);
  return tridiag_ground(build_subspace(p, a)).value - tridiag_ground(build_subspace(p, b)).value;
}

void refine(const ModelParams& base, double lo, int n_lo, double hi, int n_hi,
            const LadderOptions& opt, std::vector<Transition>& out) {
  // Shrink until only two subspaces compete, splitting when a third appears.
  while (hi - lo > 1e-9 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    const int n_mid = ground_index(base, mid, opt.search);
    if (n_mid == n_lo) {
      lo = mid;
    } else if (n_mid == n_hi) {
      hi = mid;
    } else {
      refine(base, lo, n_lo, mid, n_mid, opt, out);
      refine(base, mid, n_mid, hi, n_hi, opt, out);
      return;
    }
  }
  // Bisection on the energy difference of the two competing subspaces.
  double g_lo = energy_gap(base, lo, n_lo, n_hi);
  for (int it = 0; it < 200 && hi - lo > opt.lambda_tolerance * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double g_mid = energy_gap(base, mid, n_lo, n_hi);
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  out.push_back(Transition{0.5 * (lo + hi), n_lo, n_hi});
}

}  // namespace

std::vector<Transition> transition_ladder(const ModelParams& params, double lambda_min,
                                          double lambda_max, const LadderOptions& options) {
  if (!(lambda_min >= 0.0) || !(lambda_max > lambda_min) || !std::isfinite(lambda_max)) {
    throw DomainError("lambda range must satisfy 0 <= min < max < inf");
  }
  if (options.samples < 2) throw DomainError("ladder needs at least 2 samples");
  std::vector<Transition> out;
  const double step = (lambda_max - lambda_min) / (options.samples - 1);
  double prev_lambda = lambda_min;
  int prev_n = ground_index(params, prev_lambda, options.search);
  for (int i = 1; i < options.samples; ++i) {
    const double lam = i + 1 == options.samples ? lambda_max : lambda_min + i * step;
    const int n = ground_index(params, lam, options.search);
    if (n != prev_n) refine(params, prev_lambda, prev_n, lam, n, options, out);
    prev_lambda = lam;
    prev_n = n;
  }
  std::sort(out.begin(), out.end(),
            [](const Transition& a, const Transition& b) { return a.lambda < b.lambda; });
  return out;
}

Eigen::MatrixXd product_matrix(const ModelParams& params, int n_cut) {
  const ProductBasis basis(params.n_atoms(), n_cut);
  const int dim = basis.dimension();
  const int na = params.n_atoms();
  const double coupling = params.lambda() / std::sqrt(static_cast<double>(na));
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const BasisLabel l = basis.label(i);
    const double m = l.m.value();
    h(i, i) = params.omega_f() * l.photons + params.omega() * m + params.eta() * m * m / na;
    // a^dag J- : (k, m) -> (k + 1, m - 1)
    if (l.photons < n_cut && DickeLabel{l.m.twice_m - 2}.in_range(na)) {
      const int j = basis.index(l.photons + 1, DickeLabel{l.m.twice_m - 2});
      const double v = coupling * std::sqrt(l.photons + 1.0) * jpm_element(l.m, Ladder::lower, na);
      h(j, i) += v;
      h(i, j) += v;
    }
  }
  return h;
}

Eigen::VectorXd excitation_diagonal(const ProductBasis& basis) {
  Eigen::VectorXd n(basis.dimension());
  for (int i = 0; i < basis.dimension(); ++i) {
    const BasisLabel l = basis.label(i);
    n[i] = l.photons + l.m.excitations(basis.n_atoms());
  }
  return n;
}

}  // namespace dicke::rwa
