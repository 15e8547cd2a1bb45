#pragma once

#include <complex>

#include "dicke/model.hpp"

namespace dicke::classical {

// Large-N_a results from the Holstein-Primakoff boson b (Jz = b^dag b - N_a/2).

/// Lowest energy of the one-excitation block {|0,1>, |1,0>} of the RWA
/// boson Hamiltonian, i.e. the lowest eigenvalue of
/// [[w_f, lambda], [lambda, w + (1/N_a - 1) eta]].
double hp_first_energy(const ModelParams& params);

/// Value of lambda where hp_first_energy vanishes.
double critical_coupling_cl(const ModelParams& params);

/// Coherent-state energy with real amplitudes:
/// w_f a^2 + (w - eta) b^2 + eta/N_a b^4 + 4 (lambda - lambda b^2 / (2 N_a)) a b.
double mean_field_energy(const ModelParams& params, double alpha, double beta);

struct MeanFieldPoint {
  double alpha = 0.0;
  double beta = 0.0;
  double energy = 0.0;
};

/// Minimizer of mean_field_energy over real alpha and |beta| <= sqrt(N_a)
/// (the boson number cannot exceed 2j). Returns (0, 0, 0) when the origin is
/// the minimum, otherwise the representative with alpha >= 0.
MeanFieldPoint mean_field_minimize(const ModelParams& params);

/// sqrt((w - eta) w_f) / 2, the onset of the nontrivial mean-field solution.
double critical_coupling_clcr(const ModelParams& params);

struct SpinExpectations {
  double jz = 0.0;
  std::complex<double> jplus;
  std::complex<double> jminus;
};

/// Expectations in |theta, phi> = exp(-i Jz phi) exp(-i Jy theta) |N_a/2, N_a/2>,
/// computed by exact rotation of the highest-weight state.
SpinExpectations spin_coherent_expectations(double theta, double phi, int n_atoms);

/// Closed-form expressions quoted alongside the coherent-state ansatz, kept
/// for comparison with the exact rotation. They do not agree with it in
/// general (theta = 0 already gives <Jz> = 0 here).
SpinExpectations spin_coherent_closed_form(double theta, double phi, int n_atoms);

/// B_j(beta) = sum_m sqrt(C(2j, j+m) C(2j, j+m+1)) cos(beta/2)^(2j+2m+1)
///             sin(beta/2)^(2j-2m-1), m = -j .. j-1, with j = n_atoms / 2.
double coherent_coefficient_b(int n_atoms, double beta);

struct SpinComparison {
  SpinExpectations exact;
  SpinExpectations closed_form;
  double max_abs_difference = 0.0;
};

SpinComparison compare_spin_coherent(double theta, double phi, int n_atoms);

}  // namespace dicke::classical
