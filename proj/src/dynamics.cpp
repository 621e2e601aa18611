#include "rotent/dynamics.hpp"

#include "rotent/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <string>

namespace rotent {

LinearModel make_linear_model(double omega_phi, double gamma_phi, double G, double Delta,
                              double gamma, double nbar) {
  LinearModel m;
  m.omega_phi = omega_phi;
  m.gamma_phi = gamma_phi;
  m.G = G;
  m.Delta = Delta;
  m.gamma = gamma;
  m.nbar = nbar;

  m.B(kPhi, kLz) = omega_phi;
  m.B(kLz, kPhi) = -omega_phi;
  m.B(kLz, kLz) = -gamma_phi;
  m.B(kLz, kX) = G;
  m.B(kX, kX) = -gamma / 2;
  m.B(kX, kY) = Delta;
  m.B(kY, kX) = -Delta;
  m.B(kY, kY) = -gamma / 2;
  m.B(kY, kPhi) = G;

  m.D(kLz, kLz) = gamma_phi * (2 * nbar + 1);
  m.D(kX, kX) = gamma / 2;
  m.D(kY, kY) = gamma / 2;
  return m;
}

LinearModel build_linear_model(const SteadyState& ss, const ParameterSet& p,
                               const DerivedQuantities& d, double nbar) {
  return make_linear_model(p.omega_phi, d.gamma_phi, ss.G, p.Delta, d.gamma, nbar);
}

StabilityVerdict assess_stability(const LinearModel& m) {
  StabilityVerdict v;
  const double w = m.omega_phi;
  const double gp = m.gamma_phi;
  const double g = m.gamma;
  const double G2 = m.G * m.G;
  const double D = m.Delta;
  const double g2 = g * g;
  const double D2 = D * D;

  // Third Hurwitz determinant (times 16) and the constant coefficient of the
  // characteristic polynomial (times 4 / omega_phi). The remaining Hurwitz
  // conditions hold identically for gamma, gamma_phi > 0.
  v.inequality_values[0] =
      gp * g *
          (16 * w * w * w * w + 32 * G2 * w * D + 8 * w * w * (g2 - 4 * D2) +
           (g2 + 4 * D2) * (g2 + 4 * D2)) +
      16 * G2 * w * g2 * D + 4 * gp * gp * gp * (g2 * g + 4 * g * D2) +
      4 * gp * gp * (4 * w * w * g2 + g2 * g2 + 4 * G2 * w * D + 4 * g2 * D2);
  v.inequality_values[1] = w * (g2 + 4 * D2) - 4 * G2 * D;
  v.routh_hurwitz_pass = v.inequality_values[0] > 0 && v.inequality_values[1] > 0;

  Eigen::EigenSolver<Mat4> es(m.B, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw EigenSolverError("eigenvalue computation of the drift matrix did not converge");
  v.spectral_abscissa = es.eigenvalues().real().maxCoeff();
  v.consistent = v.routh_hurwitz_pass == (v.spectral_abscissa < 0);
  return v;
}

double thermal_occupancy(double omega, double T, const PhysicalConstants& k) {
  if (T <= 0) return 0.0;
  return 1.0 / std::expm1(k.hbar * omega / (k.kB * T));
}

namespace {

struct ResponseTerms {
  double omega_phi, G2, Delta, kappa2, gamma;

  double lorentz(double w) const {
    return (kappa2 + (w - Delta) * (w - Delta)) * (kappa2 + (w + Delta) * (w + Delta));
  }
  double omega_eff_sq(double w) const {
    return omega_phi * omega_phi -
           G2 * omega_phi * Delta * (kappa2 - w * w + Delta * Delta) / lorentz(w);
  }
  double damping_rate_shift(double w) const {
    return G2 * omega_phi * Delta * gamma / lorentz(w);
  }
};

}  // namespace

EffectiveResponse effective_response(const SteadyState& ss, const ParameterSet& p,
                                     const DerivedQuantities& d, const PhysicalConstants& k) {
  const ResponseTerms terms{p.omega_phi, ss.G * ss.G, p.Delta, d.gamma * d.gamma / 4, d.gamma};
  constexpr double kTol = 1e-10;
  constexpr int kMaxIter = 1000;

  double w = p.omega_phi;
  int total_iterations = 0;
  bool converged = false;
  for (double damping : {1.0, 0.5}) {
    w = p.omega_phi;
    for (int it = 0; it < kMaxIter; ++it) {
      ++total_iterations;
      const double sq = terms.omega_eff_sq(w);
      if (!(sq > 0) || !std::isfinite(sq))
        throw ConvergenceError("effective frequency squared is non-positive (" +
                                   std::to_string(sq) + " rad^2/s^2)",
                               w);
      const double next = (1 - damping) * w + damping * std::sqrt(sq);
      const bool done = std::abs(next - w) <= kTol * std::abs(w);
      w = next;
      if (done) {
        converged = true;
        break;
      }
    }
    if (converged) break;
  }
  if (!converged)
    throw ConvergenceError("effective frequency fixed point did not converge", w);

  EffectiveResponse r;
  r.omega_eff = w;
  r.iterations = total_iterations;
  r.D_eff = d.D_phi + d.I * terms.damping_rate_shift(w);
  r.T_eff = (d.D_phi / r.D_eff) * p.T;
  r.T_c = k.hbar * w / (4 * k.kB);
  r.nbar = thermal_occupancy(w, p.T, k);
  r.n_m = k.kB * r.T_eff / (k.hbar * w);
  return r;
}

}  // namespace rotent
