#include "rotent/verification.hpp"

#include "rotent/entanglement.hpp"
#include "rotent/errors.hpp"
#include "rotent/lyapunov.hpp"

#include <algorithm>
#include <cmath>

namespace rotent {

namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng);
}

}  // namespace

LinearModel draw_model(std::mt19937_64& rng, const ModelDraw& d) {
  const double gamma_phi = log_uniform(rng, d.gamma_phi_min, d.gamma_phi_max);
  const double gamma = log_uniform(rng, d.gamma_min, d.gamma_max);
  double delta = uniform(rng, d.delta_min, d.delta_max);
  if (uniform(rng, 0, 1) < 0.5) delta = -delta;
  const double G = uniform(rng, d.G_min, d.G_max);
  const double nbar = log_uniform(rng, d.nbar_min, d.nbar_max);
  return make_linear_model(1.0, gamma_phi, G, delta, gamma, nbar);
}

LinearModel draw_stable_model(std::mt19937_64& rng, const ModelDraw& draw) {
  for (;;) {
    LinearModel m = draw_model(rng, draw);
    if (assess_stability(m).routh_hurwitz_pass) return m;
  }
}

double CrossSolverStats::max_agreement() const {
  return std::max({max_direct_vs_elimination, max_direct_vs_quadrature,
                   max_elimination_vs_quadrature});
}

double structural_identity_deviation(const LinearModel& m, const Mat4& C) {
  const double l1 = C(kPhi, kPhi), l2 = C(kLz, kLz), l3 = C(kX, kX), l4 = C(kY, kY);
  const double w = m.omega_phi, G = m.G, g = m.gamma, D = m.Delta;
  Mat4 expected = C;
  expected(kPhi, kLz) = 0;
  expected(kPhi, kX) = (l1 - l2) * w / G;
  expected(kPhi, kY) = g * (l3 + l4 - 1) / (2 * G);
  expected(kLz, kX) = -m.gamma_phi * (2 * m.nbar + 1 - 2 * l2) / (2 * G);
  expected(kLz, kY) = (g * g * (l3 + l4 - 1) - 4 * D * l2 * w - 4 * l1 * (G * G - D * w)) / (4 * G * w);
  expected(kX, kY) = g * (2 * l3 - 1) / (4 * D);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) expected(i, j) = expected(j, i);
  return covariance_deviation(C, expected);
}

CrossSolverStats run_cross_solver_suite(std::uint64_t seed, int count, const ModelDraw& draw) {
  std::mt19937_64 rng(seed);
  CrossSolverStats s;
  for (int n = 0; n < count; ++n) {
    const LinearModel m = draw_stable_model(rng, draw);
    ++s.instances;
    try {
      const auto direct = solve_lyapunov_direct(m);
      const auto elim = solve_lyapunov_elimination(m);
      const auto quad = covariance_quadrature_oracle(m);
      s.max_direct_vs_elimination =
          std::max(s.max_direct_vs_elimination, covariance_deviation(direct.C, elim.C));
      s.max_direct_vs_quadrature =
          std::max(s.max_direct_vs_quadrature, covariance_deviation(direct.C, quad.C));
      s.max_elimination_vs_quadrature =
          std::max(s.max_elimination_vs_quadrature, covariance_deviation(elim.C, quad.C));
      s.max_residual = std::max({s.max_residual, lyapunov_residual(m, direct),
                                 lyapunov_residual(m, elim)});
      s.max_structural = std::max({s.max_structural, structural_identity_deviation(m, direct.C),
                                   structural_identity_deviation(m, elim.C)});
      s.min_nu = std::min(s.min_nu, check_physicality(direct).nu_min);
    } catch (const NumericalError&) {
      ++s.failures;
    }
  }
  return s;
}

StabilityAgreement run_stability_agreement(std::uint64_t seed, int count, const ModelDraw& draw) {
  std::mt19937_64 rng(seed);
  StabilityAgreement a;
  for (int n = 0; n < count; ++n) {
    const auto v = assess_stability(draw_model(rng, draw));
    ++a.draws;
    a.stable += v.stable() ? 1 : 0;
    a.agree += v.consistent ? 1 : 0;
  }
  return a;
}

}  // namespace rotent
