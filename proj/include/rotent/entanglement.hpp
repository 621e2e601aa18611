#pragma once

#include "rotent/lyapunov.hpp"

#include <limits>
#include <span>

namespace rotent {

struct EntanglementReport {
  double sigma = 0;      // |R| + |S| - 2|F|
  double detC = 0;
  double eta_minus = 0;  // smallest symplectic eigenvalue of the partial transpose
  double E_N = 0;        // max(0, -ln(2 eta_minus))
  double nu_min = 0;     // smallest symplectic eigenvalue of C itself
};

/// Logarithmic negativity of the two-mode Gaussian state with covariance C.
/// Throws NumericalError when sigma^2 - 4|C| < -1e-12 sigma^2.
EntanglementReport log_negativity(const CovarianceMatrix& C);

/// Symplectic spectrum (two values, ascending) from the eigenvalues of
/// Omega C, Omega = J + J, J = [[0, 1], [-1, 0]].
Eigen::Vector2d symplectic_eigenvalues(const Mat4& C);

/// Smallest symplectic eigenvalue after flipping the sign of the field
/// momentum (dY). Equals eta_minus; computed by diagonalization instead of
/// the determinant formula.
double partial_transpose_nu_min(const Mat4& C);

struct PhysicalityCheck {
  double nu_min = 0;
  bool pass = false;  // nu_min >= 1/2 - 1e-9
};

PhysicalityCheck check_physicality(const CovarianceMatrix& C);

struct LowTemperaturePoint {
  double nbar = 0;
  double E_N = 0;
};

struct LowTemperatureFit {
  double E0 = 0;
  double kappa = 0;     // E_N ~ E0 - kappa * nbar
  double residual = 0;  // RMS misfit
  int points_used = 0;
};

/// Least-squares line through the points with E_N > 0 and nbar <= nbar_cutoff.
/// Throws Error with fewer than three distinct abscissas left.
LowTemperatureFit fit_low_temperature(std::span<const LowTemperaturePoint> points,
                                      double nbar_cutoff = std::numeric_limits<double>::infinity());

}  // namespace rotent
