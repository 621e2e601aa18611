#include "rotent/entanglement.hpp"
#include "rotent/errors.hpp"
#include "rotent/sweeps.hpp"
#include "rotent/verification.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace rotent;

namespace {

Mat4 two_mode_squeezed(double r) {
  const double c = std::cosh(2 * r) / 2, s = std::sinh(2 * r) / 2;
  Mat4 m;
  m << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return m;
}

CovarianceMatrix reference_covariance(double T) {
  auto p = reference_parameters();
  p.T = T;
  const auto ev = evaluate_point(p);
  REQUIRE(ev.covariance.has_value());
  return *ev.covariance;
}

}  // namespace

TEST_CASE("decoupled thermal state is separable") {
  for (double nbar : {0.0, 0.5, 10.0, 1e4}) {
    CovarianceMatrix c{Eigen::Vector4d(nbar + 0.5, nbar + 0.5, 0.5, 0.5).asDiagonal()};
    const auto r = log_negativity(c);
    CHECK(r.eta_minus == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.E_N == 0.0);
    CHECK(r.nu_min == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("two-mode squeezed vacuum") {
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    const CovarianceMatrix c{two_mode_squeezed(r)};
    const auto rep = log_negativity(c);
    CHECK(rep.E_N == doctest::Approx(2 * r).epsilon(1e-10));
    CHECK(rep.eta_minus == doctest::Approx(std::exp(-2 * r) / 2).epsilon(1e-10));
    CHECK(partial_transpose_nu_min(c.C) == doctest::Approx(rep.eta_minus).epsilon(1e-10));
    CHECK(check_physicality(c).pass);
  }
}

TEST_CASE("reference point near zero temperature") {
  const auto c = reference_covariance(0.0);
  const auto rep = log_negativity(c);
  // independent evaluation through a Bartels-Stewart Lyapunov solve
  CHECK(rep.E_N == doctest::Approx(0.05936326088771307).epsilon(1e-8));
  CHECK(rep.nu_min >= 0.5 - 1e-9);
  CHECK(partial_transpose_nu_min(c.C) == doctest::Approx(rep.eta_minus).epsilon(1e-10));
}

TEST_CASE("physicality check") {
  CHECK(check_physicality({Mat4::Identity() / 2}).pass);
  CHECK(check_physicality({Mat4::Identity() / 2}).nu_min == doctest::Approx(0.5));

  const CovarianceMatrix thermal{Eigen::Vector4d(3.5, 3.5, 0.5, 0.5).asDiagonal()};
  const auto spectrum = symplectic_eigenvalues(thermal.C);
  CHECK(spectrum(0) == doctest::Approx(0.5));
  CHECK(spectrum(1) == doctest::Approx(3.5));
  CHECK(check_physicality(thermal).pass);

  const auto bad = check_physicality({Mat4::Identity() / 4});
  CHECK(bad.nu_min == doctest::Approx(0.25));
  CHECK_FALSE(bad.pass);
}

TEST_CASE("indefinite matrix is rejected") {
  Mat4 c;
  c << 0.1, -1.8, 0.6, 0.3,
       -1.8, 1.1, 0.35, 0.4,
       0.6, 0.35, 0.7, 0.3,
       0.3, 0.4, 0.3, -1.7;
  CHECK_THROWS_AS(log_negativity({c}), NumericalError);
}

TEST_CASE("E_N is symmetric under swapping the modes") {
  std::mt19937_64 rng(17);
  Eigen::PermutationMatrix<4> swap;
  swap.indices() << 2, 3, 0, 1;
  for (int n = 0; n < 200; ++n) {
    const auto m = draw_stable_model(rng);
    const auto c = solve_lyapunov_direct(m);
    const CovarianceMatrix swapped{swap * c.C * swap.transpose()};
    CHECK(log_negativity(swapped).E_N == doctest::Approx(log_negativity(c).E_N).epsilon(1e-12));
  }
}

TEST_CASE("determinant formula matches the partial-transpose spectrum") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 300; ++n) {
    const auto m = draw_stable_model(rng);
    const auto c = solve_lyapunov_direct(m);
    const auto rep = log_negativity(c);
    CHECK(partial_transpose_nu_min(c.C) == doctest::Approx(rep.eta_minus).epsilon(1e-10));
  }
}

TEST_CASE("decoupled solver output is never entangled") {
  std::mt19937_64 rng(29);
  for (int n = 0; n < 100; ++n) {
    auto m = draw_stable_model(rng);
    m = make_linear_model(m.omega_phi, m.gamma_phi, 0.0, m.Delta, m.gamma, m.nbar);
    CHECK(log_negativity(solve_lyapunov_direct(m)).E_N == 0.0);
  }
}

TEST_CASE("E_N is continuous at the reference point") {
  const auto c = reference_covariance(1.0);
  const double base = log_negativity(c).E_N;
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1e-9, 1e-9);
  for (int n = 0; n < 50; ++n) {
    Mat4 delta;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j <= i; ++j) delta(i, j) = delta(j, i) = u(rng);
    CHECK(std::abs(log_negativity({c.C + delta}).E_N - base) <= 1e-6);
  }
}

TEST_CASE("low-temperature fit") {
  std::vector<LowTemperaturePoint> pts;
  for (double n : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0}) pts.push_back({n, 0.5 - 3.1e-6 * n});
  auto fit = fit_low_temperature(pts);
  CHECK(fit.E0 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fit.kappa == doctest::Approx(3.1e-6).epsilon(1e-9));
  CHECK(fit.residual < 1e-14);
  CHECK(fit.points_used == 6);

  for (auto& p : pts) p.E_N = 0.25;
  fit = fit_low_temperature(pts);
  CHECK(fit.kappa == 0.0);
  CHECK(fit.E0 == doctest::Approx(0.25));

  // cutoff and E_N > 0 filtering
  pts.push_back({100.0, 0.0});
  pts.push_back({50.0, 0.1});
  fit = fit_low_temperature(pts, 10.0);
  CHECK(fit.points_used == 6);

  const std::vector<LowTemperaturePoint> degenerate{{1.0, 0.4}, {1.0, 0.41}, {1.0, 0.39}};
  CHECK_THROWS(fit_low_temperature(degenerate));
  const std::vector<LowTemperaturePoint> too_few{{1.0, 0.4}, {2.0, 0.41}};
  CHECK_THROWS(fit_low_temperature(too_few));
}
