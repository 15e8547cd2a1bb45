#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "dicke/oracles.hpp"
#include "dicke/rwa.hpp"

using namespace dicke;

TEST_CASE("vacuum block") {
  const auto p = ModelParams::from_delta(1.0, 0.3, 0.8, 0.4, 5);
  const auto b = rwa::build_subspace(p, 0);
  REQUIRE(b.size() == 1);
  CHECK(b.offdiag.empty());
  CHECK(b.diag[0] == doctest::Approx(-2.5 * (0.3 - 0.8 / 2)).epsilon(1e-15));
  CHECK(b.energy_offset == -2.5);
}

TEST_CASE("n = 1 block at resonance") {
  const auto p = ModelParams::from_delta(1.0, 0.0, 0.0, 1.0, 5);
  const auto b = rwa::build_subspace(p, 1);
  REQUIRE(b.size() == 2);
  REQUIRE(b.offdiag.size() == 1);
  CHECK(b.offdiag[0] == doctest::Approx(1.0).epsilon(1e-15));
  const auto labels = rwa::subspace_labels(1, 5);
  CHECK(labels[0].photons == 0);
  CHECK(labels[0].m.twice_m == -3);
  CHECK(labels[1].photons == 1);
  CHECK(labels[1].m.twice_m == -5);
}

TEST_CASE("lambda = 0 blocks are diagonal and sizes follow n - max(0, n - N_a) + 1") {
  const auto p = ModelParams::from_delta(1.0, 0.2, 0.5, 0.0, 4);
  for (int n = 0; n < 12; ++n) {
    const auto b = rwa::build_subspace(p, n);
    CHECK(b.size() == n - std::max(0, n - 4) + 1);
    for (double o : b.offdiag) CHECK(o == 0.0);
  }
}

TEST_CASE("blocks reproduce the product-basis spectrum") {
  const auto p = ModelParams::from_omega(1.0, 1.2, 0.7, 0.9, 3);
  const int n_cut = 6;
  const Eigen::MatrixXd h = rwa::product_matrix(p, n_cut);
  const Eigen::MatrixXd kron = oracle::kron_rwa_hamiltonian(p, n_cut);
  CHECK((h - kron).cwiseAbs().maxCoeff() < 1e-12);
  const ProductBasis basis(3, n_cut);
  const Eigen::VectorXd nd = rwa::excitation_diagonal(basis);
  CHECK((h * nd.asDiagonal() - nd.asDiagonal() * h).cwiseAbs().maxCoeff() < 1e-12);
  // Complete subspaces n <= n_cut live wholly inside the truncated basis.
  for (int n = 0; n <= n_cut; ++n) {
    std::vector<int> idx;
    for (int i = 0; i < basis.dimension(); ++i)
      if (nd[i] == n) idx.push_back(i);
    Eigen::MatrixXd block(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) block(a, b) = h(idx[a], idx[b]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block);
    const auto t = tridiag_eigenvalues(rwa::build_subspace(p, n));
    REQUIRE(t.size() == idx.size());
    for (std::size_t k = 0; k < t.size(); ++k) CHECK(std::abs(t[k] - es.eigenvalues()[k]) < 1e-10);
  }
}

TEST_CASE("n = 1 ground energy matches the 2x2 closed form") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int t = 0; t < 100; ++t) {
    const int na = 1 + t % 7;
    const auto p = ModelParams::from_omega(0.5 + u(rng), 0.5 + u(rng), u(rng), u(rng), na);
    // {|0>|1-N_a/2>, |1>|-N_a/2>} block written out by hand.
    const double m0 = 1.0 - 0.5 * na, m1 = -0.5 * na;
    const double a = p.omega() * m0 + p.eta() * m0 * m0 / na;
    const double b = p.omega_f() + p.omega() * m1 + p.eta() * m1 * m1 / na;
    const double c = p.lambda();  // lambda N_a^{-1/2} sqrt(N_a)
    const double e = 0.5 * (a + b) - std::sqrt(0.25 * (a - b) * (a - b) + c * c);
    CHECK(std::abs(rwa::subspace_ground(p, 1).energy - e) < 1e-12);
  }
}

TEST_CASE("ground state examples") {
  const auto vac = rwa::ground_state(ModelParams::from_omega(1.0, 1.0, 0.0, 0.5, 5));
  CHECK(vac.subspace_index == 0);
  CHECK(vac.energy == -2.5);
  CHECK(vac.state.amplitude({0, DickeLabel{-5}}) == 1.0);
  for (int na = 1; na <= 8; ++na) {
    CHECK(rwa::ground_state(ModelParams::from_delta(1.0, 0.5, 0.0, 0.0, na)).subspace_index == 0);
  }
  const auto p = ModelParams::from_omega(1.0, 1.0, 0.0, 1.0 + 1e-3, 5);
  const auto g = rwa::ground_state(p);
  CHECK(g.subspace_index == 1);
  const auto closed = rwa::first_nonvacuum_state(p);
  CHECK(1.0 - fidelity(g.state, closed) < 1e-10);
  CHECK(std::abs(std::abs(g.state.amplitudes()[0]) - std::abs(closed.amplitudes()[0])) < 1e-10);
}

TEST_CASE("ground state is flagged on the transition") {
  const auto p = ModelParams::from_omega(1.0, 1.0, 0.0, 1.0, 5);
  const auto g = rwa::ground_state(p);
  CHECK(g.subspace_index == 0);
  CHECK(g.at_transition);
}

TEST_CASE("search exhaustion is reported") {
  rwa::SearchPolicy tight;
  tight.n_max = 2;
  CHECK_THROWS_AS(rwa::ground_state(ModelParams::from_omega(1.0, 1.0, 0.0, 3.0, 5), tight),
                  UnboundedSearchError);
}

TEST_CASE("subspace ground states are nondegenerate for lambda > 0") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int t = 0; t < 100; ++t) {
    const auto p = ModelParams::from_omega(0.5 + u(rng), 0.5 + u(rng), u(rng), 0.05 + u(rng), 5);
    const auto ev = tridiag_eigenvalues(rwa::build_subspace(p, 1 + t % 9));
    if (ev.size() > 1) CHECK(ev[1] - ev[0] > 1e-10);
  }
}

TEST_CASE("first critical coupling") {
  CHECK(rwa::critical_coupling_1(ModelParams::from_omega(1.0, 1.0, 0.0, 0.0, 3)) == 1.0);
  CHECK(rwa::critical_coupling_1(ModelParams::from_omega(1.0, 1.0, 0.5, 0.0, 5)) ==
        doctest::Approx(0.7745966692414834).epsilon(1e-15));
  CHECK(rwa::critical_coupling_1(ModelParams::from_omega(1.0, 1.0, 0.5, 0.0, 1000000)) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-6));
  CHECK_THROWS_AS(rwa::critical_coupling_1(ModelParams::from_omega(1.0, 1.0, 2.0, 0.0, 5)),
                  DomainError);
}

TEST_CASE("amplitude parameter h") {
  CHECK(rwa::amplitude_h(ModelParams::from_delta(1.0, 0.0, 0.0, 1.0, 5)) ==
        doctest::Approx(-1.0).epsilon(1e-15));
  // (1 - 1/N_a) eta = 0.8 dominates: h ~ -0.8 / 0.01.
  const double h = rwa::amplitude_h(ModelParams::from_delta(1.0, 0.0, 1.0, 0.01, 5));
  const double expected = (-0.8 - std::sqrt(4e-4 + 0.64)) / 0.02;
  CHECK(h == doctest::Approx(expected).epsilon(1e-14));
  CHECK(h == doctest::Approx(-80.0125).epsilon(1e-6));
  // Positive detuning favors the photon: h -> 0.
  CHECK(std::abs(rwa::amplitude_h(ModelParams::from_delta(1.0, 1.0, 0.0, 1e-6, 5))) < 1e-5);
  CHECK_THROWS_AS(rwa::amplitude_h(ModelParams::from_delta(1.0, 0.0, 0.0, 0.0, 5)), DomainError);
}

TEST_CASE("first non-vacuum state limits") {
  const auto half = rwa::first_nonvacuum_state(ModelParams::from_delta(1.0, 0.0, 0.0, 1.0, 5));
  CHECK(half.amplitude({0, DickeLabel{-3}}) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(half.amplitude({1, DickeLabel{-5}}) == doctest::Approx(1.0 / std::sqrt(2.0)));
  const auto w = rwa::first_nonvacuum_state(ModelParams::from_delta(1.0, 0.0, 2.0, 1e-6, 5));
  CHECK(std::abs(w.amplitude({0, DickeLabel{-3}})) == doctest::Approx(1.0).epsilon(1e-10));
  const auto photon = rwa::first_nonvacuum_state(ModelParams::from_delta(1.0, 1.0, 0.0, 1e-6, 5));
  CHECK(std::abs(photon.amplitude({1, DickeLabel{-5}})) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(rwa::first_nonvacuum_state(ModelParams::from_delta(1.0, 0.0, 0.0, 0.0, 5)),
                  DomainError);
}

TEST_CASE("transition ladder") {
  const auto p = ModelParams::from_omega(1.0, 1.0, 0.0, 0.0, 5);
  const auto l = rwa::transition_ladder(p, 1e-3, 1.2);
  REQUIRE_FALSE(l.empty());
  CHECK(std::abs(l.front().lambda - 1.0) < 1e-8);
  CHECK(l.front().n_before == 0);
  CHECK(l.front().n_after == 1);
  CHECK(rwa::transition_ladder(p, 1e-3, 0.9).empty());
  const auto l2 = rwa::transition_ladder(ModelParams::from_omega(1.0, 1.0, 0.5, 0.0, 2), 1e-3, 2.0);
  REQUIRE_FALSE(l2.empty());
  CHECK(std::abs(l2.front().lambda - std::sqrt(0.75)) < 1e-8);
  for (std::size_t i = 1; i < l2.size(); ++i) CHECK(l2[i].lambda > l2[i - 1].lambda);
}
