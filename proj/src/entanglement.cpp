#include "rotent/entanglement.hpp"

#include "rotent/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

namespace rotent {

namespace {

Mat4 symplectic_form() {
  Mat4 omega = Mat4::Zero();
  omega(0, 1) = 1;
  omega(1, 0) = -1;
  omega(2, 3) = 1;
  omega(3, 2) = -1;
  return omega;
}

}  // namespace

EntanglementReport log_negativity(const CovarianceMatrix& cov) {
  EntanglementReport r;
  const double detR = cov.mirror_block().determinant();
  const double detS = cov.field_block().determinant();
  const double detF = cov.cross_block().determinant();
  r.sigma = detR + detS - 2 * detF;
  r.detC = cov.C.determinant();

  double disc = r.sigma * r.sigma - 4 * r.detC;
  if (disc < 0) {
    if (disc < -1e-12 * r.sigma * r.sigma)
      throw NumericalError("unphysical covariance: sigma^2 - 4|C| = " + std::to_string(disc));
    disc = 0;
  }
  const double root = std::sqrt(disc);
  // sigma - root = 4|C| / (sigma + root) avoids cancellation when |C| << sigma^2
  const double eta_sq = r.sigma > 0 ? 2 * r.detC / (r.sigma + root) : (r.sigma - root) / 2;
  r.eta_minus = std::sqrt(std::max(eta_sq, 0.0));
  // a non-negative cross-block determinant means the state is separable
  r.E_N = detF >= 0 ? 0.0 : std::max(0.0, -std::log(2 * r.eta_minus));
  r.nu_min = symplectic_eigenvalues(cov.C)(0);
  return r;
}

Eigen::Vector2d symplectic_eigenvalues(const Mat4& C) {
  Eigen::EigenSolver<Mat4> es(symplectic_form() * C, false);
  if (es.info() != Eigen::Success) throw EigenSolverError("symplectic diagonalization failed");
  std::vector<double> nu;
  for (int i = 0; i < 4; ++i) nu.push_back(std::abs(es.eigenvalues()(i).imag()));
  std::sort(nu.begin(), nu.end());
  // eigenvalues come in pairs +-i nu
  return {0.5 * (nu[0] + nu[1]), 0.5 * (nu[2] + nu[3])};
}

double partial_transpose_nu_min(const Mat4& C) {
  const Eigen::Vector4d flip(1, 1, 1, -1);
  const Mat4 pt = flip.asDiagonal() * C * flip.asDiagonal();
  return symplectic_eigenvalues(pt)(0);
}

PhysicalityCheck check_physicality(const CovarianceMatrix& C) {
  PhysicalityCheck out;
  out.nu_min = symplectic_eigenvalues(C.C)(0);
  out.pass = out.nu_min >= 0.5 - 1e-9;
  return out;
}

LowTemperatureFit fit_low_temperature(std::span<const LowTemperaturePoint> points,
                                      double nbar_cutoff) {
  std::vector<LowTemperaturePoint> kept;
  std::set<double> abscissas;
  for (const auto& p : points) {
    if (p.E_N > 0 && p.nbar <= nbar_cutoff) {
      kept.push_back(p);
      abscissas.insert(p.nbar);
    }
  }
  if (abscissas.size() < 3)
    throw Error("low-temperature fit needs at least three distinct nbar values with E_N > 0");

  const double n = static_cast<double>(kept.size());
  double mean_x = 0, mean_y = 0;
  for (const auto& p : kept) {
    mean_x += p.nbar;
    mean_y += p.E_N;
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0, sxy = 0;
  for (const auto& p : kept) {
    sxx += (p.nbar - mean_x) * (p.nbar - mean_x);
    sxy += (p.nbar - mean_x) * (p.E_N - mean_y);
  }
  if (!(sxx > 0)) throw Error("low-temperature fit: degenerate nbar values");

  LowTemperatureFit fit;
  const double slope = sxy / sxx;
  fit.kappa = 0.0 - slope;
  fit.E0 = mean_y - slope * mean_x;
  double ss = 0;
  for (const auto& p : kept) {
    const double e = p.E_N - (fit.E0 - fit.kappa * p.nbar);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / n);
  fit.points_used = static_cast<int>(kept.size());
  return fit;
}

}  // namespace rotent
