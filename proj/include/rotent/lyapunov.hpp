#pragma once

#include "rotent/dynamics.hpp"

#include <Eigen/Dense>

namespace rotent {

/// Stationary symmetric correlation matrix in the (dphi, dL_z, dX, dY)
/// ordering, vacuum variance 1/2.
struct CovarianceMatrix {
  Mat4 C = Mat4::Zero();

  Eigen::Matrix2d mirror_block() const { return C.topLeftCorner<2, 2>(); }      // R
  Eigen::Matrix2d field_block() const { return C.bottomRightCorner<2, 2>(); }   // S
  Eigen::Matrix2d cross_block() const { return C.topRightCorner<2, 2>(); }      // F
};

/// Solves B C + C B^T = -D for symmetric C as a 10-unknown linear system.
/// Throws NumericalError when the system is singular (marginal stability).
CovarianceMatrix solve_lyapunov_direct(const LinearModel& m);

/// Solves the same equation by successive elimination: scan the entries of
/// C' = B C + C B^T + D in row-major order for one that contains exactly one
/// unsolved off-diagonal unknown, solve for it in terms of the diagonal,
/// substitute, repeat; then solve the remaining four equations for the
/// diagonal. Requires G != 0 and Delta != 0; throws NumericalError otherwise
/// or if no such pivot entry exists at some step.
CovarianceMatrix solve_lyapunov_elimination(const LinearModel& m);

struct QuadratureOptions {
  double horizon = 0;   // seconds; raised to at least 20 / |spectral abscissa|
  long steps = 10000;   // Simpson sub-intervals on the base panel, >= 1e4
  double doubling_tol = 1e-9;
  int max_doublings = 64;
};

/// C = int_0^inf exp(B s) D exp(B^T s) ds without touching the Lyapunov
/// equation. Simpson quadrature on a base panel [0, h] with ||B|| h <= 1,
/// then exact panel doubling  C(2h) = C(h) + exp(B h) C(h) exp(B h)^T
/// until the horizon is reached and one further doubling changes no entry
/// by more than doubling_tol. Throws NumericalError for unstable B and
/// ConvergenceError if the doubling test never settles.
CovarianceMatrix covariance_quadrature_oracle(const LinearModel& m,
                                              const QuadratureOptions& opt = {});

/// ||B C + C B^T + D||_max / ||D||_max (absolute when D = 0).
double lyapunov_residual(const LinearModel& m, const CovarianceMatrix& C);

/// Largest entrywise deviation |a_ij - b_ij| / sqrt(a_ii a_jj). For
/// covariance matrices this is the natural per-entry relative scale; it stays
/// meaningful for entries that vanish.
double covariance_deviation(const Mat4& a, const Mat4& b);

}  // namespace rotent
