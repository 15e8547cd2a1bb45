#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "dicke/classical.hpp"
#include "dicke/rwa.hpp"

using namespace dicke;
using namespace dicke::classical;

TEST_CASE("one-excitation classical energy") {
  CHECK(hp_first_energy(ModelParams::from_omega(1.0, 1.0, 0.0, 1.0, 5)) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(hp_first_energy(ModelParams::from_omega(1.0, 1.0, 0.0, 0.0, 5)) == 1.0);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int t = 0; t < 50; ++t) {
    const auto p = ModelParams::from_omega(0.2 + u(rng), 0.2 + u(rng), u(rng), u(rng), 1 + t % 9);
    Eigen::Matrix2d m;
    m << p.omega_f(), p.lambda(), p.lambda(), p.omega() + (1.0 / p.n_atoms() - 1.0) * p.eta();
    CHECK(std::abs(hp_first_energy(p) - Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(m).eigenvalues()[0]) < 1e-12);
  }
}

TEST_CASE("classical critical coupling is the exact one") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const auto p = ModelParams::from_omega(0.2 + u(rng), 0.5 + u(rng), 0.5 * u(rng), 0.0, 1 + t % 9);
    CHECK(critical_coupling_cl(p) == rwa::critical_coupling_1(p));
  }
  CHECK(critical_coupling_cl(ModelParams::from_omega(1.0, 1.0, 0.0, 0.0, 5)) == 1.0);
  CHECK(critical_coupling_cl(ModelParams::from_omega(1.0, 1.0, 0.5, 0.0, 5)) ==
        doctest::Approx(std::sqrt(0.6)).epsilon(1e-15));
}

TEST_CASE("mean-field energy expression") {
  const auto p = ModelParams::from_omega(1.0, 1.0, 0.0, 0.0, 5);
  CHECK(mean_field_energy(p.with_lambda(0.7), 0.0, 0.0) == 0.0);
  CHECK(mean_field_energy(p, 1.0, 0.0) == 1.0);
  // Central finite differences of the gradient.
  const auto q = ModelParams::from_omega(1.3, 0.9, 0.4, 0.6, 5);
  const double a = 0.37, b = -0.81, h = 1e-6;
  const double da = (mean_field_energy(q, a + h, b) - mean_field_energy(q, a - h, b)) / (2 * h);
  const double db = (mean_field_energy(q, a, b + h) - mean_field_energy(q, a, b - h)) / (2 * h);
  const double s = 1.0 / (2 * 5);
  const double ga = 2 * 1.3 * a + 4 * 0.6 * (1 - s * b * b) * b;
  const double gb = 2 * (0.9 - 0.4) * b + 4 * 0.4 / 5 * b * b * b +
                    4 * 0.6 * a * (1 - 3 * s * b * b);
  CHECK(da == doctest::Approx(ga).epsilon(1e-6));
  CHECK(db == doctest::Approx(gb).epsilon(1e-6));
}

TEST_CASE("mean-field minimization") {
  const auto below = mean_field_minimize(ModelParams::from_omega(1.0, 1.0, 0.0, 0.4, 5));
  CHECK(below.alpha == 0.0);
  CHECK(below.beta == 0.0);
  CHECK(below.energy == 0.0);
  const auto p = ModelParams::from_omega(1.0, 1.0, 0.0, 0.6, 5);
  const auto above = mean_field_minimize(p);
  CHECK(above.energy < 0.0);
  CHECK(above.alpha >= 0.0);
  CHECK(above.energy == doctest::Approx(mean_field_energy(p, above.alpha, above.beta)).epsilon(1e-12));
  // Grid oracle over the physical range beta^2 <= N_a.
  double best = 0.0;
  const double bmax = std::sqrt(5.0);
  for (int i = 0; i <= 800; ++i) {
    for (int j = 0; j <= 400; ++j) {
      const double a = -10.0 + 20.0 * i / 800;
      const double b = -bmax + 2 * bmax * j / 400;
      best = std::min(best, mean_field_energy(p, a, b));
    }
  }
  CHECK(above.energy <= best + 1e-12);
  CHECK(above.energy == doctest::Approx(best).epsilon(1e-2));
}

TEST_CASE("mean-field threshold") {
  CHECK(critical_coupling_clcr(ModelParams::from_omega(1.0, 1.0, 0.0, 0.0, 5)) == 0.5);
  CHECK(critical_coupling_clcr(ModelParams::from_omega(1.0, 1.0, 0.5, 0.0, 5)) ==
        doctest::Approx(std::sqrt(0.5) / 2).epsilon(1e-15));
  CHECK(critical_coupling_clcr(ModelParams::from_omega(1.0, 1.0, 1.0, 0.0, 5)) == 0.0);
  CHECK_THROWS_AS(critical_coupling_clcr(ModelParams::from_omega(1.0, 1.0, 1.5, 0.0, 5)),
                  DomainError);
  for (double eta : {0.0, 0.5}) {
    const auto p = ModelParams::from_omega(1.0, 1.0, eta, 0.0, 5);
    double lo = 0.0, hi = 2.0;
    while (hi - lo > 1e-9) {
      const double mid = 0.5 * (lo + hi);
      const auto m = mean_field_minimize(p.with_lambda(mid));
      (m.alpha == 0.0 && m.beta == 0.0 ? lo : hi) = mid;
    }
    CHECK(std::abs(lo - critical_coupling_clcr(p)) < 1e-6);
  }
}

TEST_CASE("spin coherent expectations by exact rotation") {
  const auto top = spin_coherent_expectations(0.0, 0.0, 5);
  CHECK(top.jz == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(std::abs(top.jplus) < 1e-14);
  CHECK(spin_coherent_expectations(std::numbers::pi, 0.0, 5).jz == doctest::Approx(-2.5).epsilon(1e-13));
  const auto eq = spin_coherent_expectations(std::numbers::pi / 2, 0.0, 4);
  CHECK(0.5 * (eq.jplus + eq.jminus).real() == doctest::Approx(2.0).epsilon(1e-13));
  for (double th : {0.3, 1.1, 2.6}) {
    for (double ph : {0.0, 0.8, 4.0}) {
      const auto e = spin_coherent_expectations(th, ph, 6);
      const double jx = 0.5 * (e.jplus + e.jminus).real();
      const double jy = (0.5 * (e.jplus - e.jminus) / std::complex<double>(0, 1)).real();
      CHECK(jx * jx + jy * jy + e.jz * e.jz == doctest::Approx(9.0).epsilon(1e-12));
      CHECK(e.jz == doctest::Approx(3.0 * std::cos(th)).epsilon(1e-12));
    }
  }
}

TEST_CASE("closed forms are reported, not trusted") {
  const auto c = compare_spin_coherent(0.0, 0.0, 5);
  CHECK(c.exact.jz == doctest::Approx(2.5));
  CHECK(c.max_abs_difference > 1.0);
  CHECK(std::isfinite(coherent_coefficient_b(5, 0.7)));
}
