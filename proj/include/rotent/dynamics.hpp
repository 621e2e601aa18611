#pragma once

#include "rotent/params.hpp"
#include "rotent/steady_state.hpp"

#include <Eigen/Dense>

#include <array>

namespace rotent {

using Mat4 = Eigen::Matrix4d;

// Indices into the fluctuation vector u = (dphi, dL_z, dX, dY).
enum Quadrature : int { kPhi = 0, kLz = 1, kX = 2, kY = 3 };

/// Linearized fluctuation dynamics  du/dt = B u + noise,  with
/// stationary noise correlations D (delta-correlated, high-Q limit).
struct LinearModel {
  Mat4 B = Mat4::Zero();
  Mat4 D = Mat4::Zero();
  double Delta = 0;
  double G = 0;
  double gamma = 0;
  double gamma_phi = 0;
  double omega_phi = 0;
  double nbar = 0;
};

/// Assemble B and D from raw rates. Useful on its own for dimensionless
/// studies; build_linear_model() forwards here.
LinearModel make_linear_model(double omega_phi, double gamma_phi, double G, double Delta,
                              double gamma, double nbar);

LinearModel build_linear_model(const SteadyState& ss, const ParameterSet& p,
                               const DerivedQuantities& d, double nbar);

struct StabilityVerdict {
  bool routh_hurwitz_pass = false;
  // Left-hand sides of the two Routh-Hurwitz inequalities (both must be > 0),
  // with D_phi / I replaced by gamma_phi.
  std::array<double, 2> inequality_values{};
  double spectral_abscissa = 0;  // max Re(eig B), rad/s
  bool consistent = false;       // RH verdict == (spectral_abscissa < 0)

  /// Eigenvalue verdict; this is what downstream stages gate on.
  bool stable() const { return spectral_abscissa < 0; }
};

/// Throws EigenSolverError when the eigenvalue iteration fails.
StabilityVerdict assess_stability(const LinearModel& m);

struct EffectiveResponse {
  double omega_eff = 0;  // rad/s
  double D_eff = 0;      // J s
  double T_eff = 0;      // K
  double T_c = 0;        // hbar omega_eff / (4 kB), K
  double nbar = 0;       // thermal occupancy at omega_eff and ambient T
  double n_m = 0;        // kB T_eff / (hbar omega_eff)
  int iterations = 0;
};

/// Radiation-modified mirror frequency and damping.
///
/// With F(w) = [(gamma/2)^2 + (w - Delta)^2] [(gamma/2)^2 + (w + Delta)^2]:
///   omega_eff^2 = omega_phi^2 - G^2 omega_phi Delta ((gamma/2)^2 - w^2 + Delta^2) / F(w)
///   D_eff       = D_phi + I G^2 omega_phi Delta gamma / F(w)
/// evaluated self-consistently at w = omega_eff. Throws ConvergenceError when
/// the fixed point cannot be reached (including omega_eff^2 <= 0).
EffectiveResponse effective_response(const SteadyState& ss, const ParameterSet& p,
                                     const DerivedQuantities& d,
                                     const PhysicalConstants& k = kCodata);

/// Bose-Einstein occupancy 1 / (exp(hbar omega / kB T) - 1); 0 at T = 0.
double thermal_occupancy(double omega, double T, const PhysicalConstants& k = kCodata);

}  // namespace rotent
