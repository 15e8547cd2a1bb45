#include <doctest.h>

#include <cmath>
#include <complex>

#include "dicke/model.hpp"

using namespace dicke;

TEST_CASE("params derive the third frequency exactly") {
  const auto a = ModelParams::from_omega(1.0, 1.3, 0.2, 0.5, 5);
  CHECK(a.delta() == doctest::Approx(0.3).epsilon(1e-15));
  const auto b = ModelParams::from_delta(2.0, -0.5, 0.0, 0.1, 3);
  CHECK(b.omega() == 1.5);
  CHECK(b.with_lambda(0.7).lambda() == 0.7);
  CHECK(b.with_eta(0.4).eta() == 0.4);
  CHECK(b.with_eta(0.4).omega() == 1.5);
}

TEST_CASE("params reject invalid values") {
  CHECK_THROWS_AS(ModelParams::from_omega(0.0, 1.0, 0.0, 0.1, 5), DomainError);
  CHECK_THROWS_AS(ModelParams::from_omega(1.0, 1.0, 0.0, -0.1, 5), DomainError);
  CHECK_THROWS_AS(ModelParams::from_omega(1.0, 1.0, 0.0, 0.1, 0), DomainError);
  CHECK_THROWS_AS(ModelParams::from_delta(1.0, -2.0, 0.0, 0.1, 2), DomainError);
}

TEST_CASE("dicke labels") {
  CHECK(DickeLabel::lowest(5).twice_m == -5);
  CHECK(DickeLabel::from_excitations(1, 5).value() == -1.5);
  CHECK(DickeLabel{3}.excitations(5) == 4);
  CHECK(to_string(DickeLabel{-5}) == "-5/2");
  CHECK(to_string(DickeLabel{2}) == "1");
  CHECK_FALSE(DickeLabel{2}.in_range(5));
  CHECK_FALSE(DickeLabel{7}.in_range(5));
  CHECK(DickeLabel{-1}.in_range(5));
}

TEST_CASE("jz element") {
  CHECK(jz_element(DickeLabel{-2}, 2) == -1.0);
  CHECK(jz_element(DickeLabel{1}, 5) == 0.5);
  CHECK(jz_element(DickeLabel{0}, 4) == 0.0);
  CHECK_THROWS_AS(jz_element(DickeLabel{6}, 4), DomainError);
}

TEST_CASE("ladder elements") {
  CHECK(jpm_element(DickeLabel{-2}, Ladder::raise, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(jpm_element(DickeLabel{5}, Ladder::raise, 5) == 0.0);
  CHECK(jpm_element(DickeLabel{-5}, Ladder::lower, 5) == 0.0);
  CHECK(jpm_element(DickeLabel{0}, Ladder::lower, 4) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
  CHECK(jpm_element(DickeLabel{-5}, Ladder::raise, 5) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
}

TEST_CASE("total excitation") {
  CHECK(total_excitation(0, DickeLabel{-5}) == -2.5);
  CHECK(total_excitation(1, DickeLabel{-5}) == -1.5);
  CHECK(total_excitation(3, DickeLabel{1}) == 3.5);
}

TEST_CASE("spin algebra on the Dicke manifold") {
  for (int na = 1; na <= 8; ++na) {
    const SpinMatrices s = spin_matrices(na);
    const Eigen::MatrixXcd jx = s.jx().cast<std::complex<double>>();
    const Eigen::MatrixXcd jy = s.jy();
    const Eigen::MatrixXcd jz = s.jz.cast<std::complex<double>>();
    const std::complex<double> i(0, 1);
    CHECK((jx * jy - jy * jx - i * jz).cwiseAbs().maxCoeff() < 1e-12);
    const double j = 0.5 * na;
    const Eigen::MatrixXcd j2 = jx * jx + jy * jy + jz * jz;
    CHECK((j2 - j * (j + 1) * Eigen::MatrixXcd::Identity(na + 1, na + 1)).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("product basis is a photon-major bijection") {
  const ProductBasis b(5, 7);
  CHECK(b.dimension() == 48);
  for (int i = 0; i < b.dimension(); ++i) CHECK(b.index(b.label(i)) == i);
  CHECK(b.label(0).photons == 0);
  CHECK(b.label(0).m.twice_m == -5);
  CHECK(b.label(6).photons == 1);
  CHECK_THROWS(b.index(8, DickeLabel{-5}));
}

TEST_CASE("pure state validation and overlap") {
  const std::vector<BasisLabel> labels{{0, DickeLabel{-3}}, {1, DickeLabel{-1}}};
  CHECK_THROWS_AS(PureState(3, labels, Eigen::Vector2d(1.0, 1.0)), DomainError);
  const auto s = PureState::normalized(3, labels, Eigen::Vector2d(1.0, 1.0));
  CHECK(s.amplitude({1, DickeLabel{-1}}) == doctest::Approx(std::sqrt(0.5)));
  CHECK(s.amplitude({2, DickeLabel{-3}}) == 0.0);
  CHECK(s.max_photons() == 1);
  const PureState t(3, {{1, DickeLabel{-1}}}, Eigen::VectorXd::Ones(1));
  CHECK(fidelity(s, t) == doctest::Approx(0.5).epsilon(1e-15));
  const Eigen::VectorXd v = s.on_basis(ProductBasis(3, 2));
  CHECK(v.size() == 12);
  CHECK(v[5] == doctest::Approx(std::sqrt(0.5)));
}
