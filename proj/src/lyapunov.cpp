#include "rotent/lyapunov.hpp"

#include "rotent/errors.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace rotent {

namespace {

constexpr int kN = 4;
constexpr int kUnknowns = 10;

// Unknown index of the symmetric entry (i, j): diagonal first (0..3), then
// off-diagonals in row-major upper-triangle order (4..9).
constexpr int unknown_index(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j) return i;
  constexpr std::array<std::array<int, kN>, kN> table{{
      {-1, 4, 5, 6},
      {4, -1, 7, 8},
      {5, 7, -1, 9},
      {6, 8, 9, -1},
  }};
  return table[i][j];
}

// Upper-triangle entries in row-major order.
constexpr std::array<std::pair<int, int>, kUnknowns> kEntries{{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3},
}};

Mat4 symmetrized(const Mat4& c) { return 0.5 * (c + c.transpose()); }

// B and D scaled by a common rate; the Lyapunov solution is unchanged.
double rate_scale(const LinearModel& m) {
  const double s = m.B.cwiseAbs().maxCoeff();
  return s > 0 ? s : 1.0;
}

// Coefficients of the (i, j) entry of B C + C B^T + D, as a linear form over
// the ten unknowns with the constant term last.
using LinearForm = Eigen::Matrix<double, kUnknowns + 1, 1>;

LinearForm lyapunov_entry(const Mat4& B, const Mat4& D, int i, int j) {
  LinearForm f = LinearForm::Zero();
  for (int k = 0; k < kN; ++k) {
    f(unknown_index(k, j)) += B(i, k);
    f(unknown_index(i, k)) += B(j, k);
  }
  f(kUnknowns) = D(i, j);
  return f;
}

}  // namespace

CovarianceMatrix solve_lyapunov_direct(const LinearModel& m) {
  const double s = rate_scale(m);
  const Mat4 B = m.B / s;
  const Mat4 D = m.D / s;

  Eigen::Matrix<double, kUnknowns, kUnknowns> A;
  Eigen::Matrix<double, kUnknowns, 1> rhs;
  for (int e = 0; e < kUnknowns; ++e) {
    const auto [i, j] = kEntries[e];
    const LinearForm f = lyapunov_entry(B, D, i, j);
    A.row(e) = f.head<kUnknowns>().transpose();
    rhs(e) = -f(kUnknowns);
  }

  Eigen::FullPivLU<Eigen::Matrix<double, kUnknowns, kUnknowns>> lu(A);
  if (!lu.isInvertible())
    throw NumericalError("Lyapunov system is singular (drift matrix marginally stable?)");
  const Eigen::Matrix<double, kUnknowns, 1> x = lu.solve(rhs);

  CovarianceMatrix out;
  for (int i = 0; i < kN; ++i)
    for (int j = 0; j < kN; ++j) out.C(i, j) = x(unknown_index(i, j));
  out.C = symmetrized(out.C);
  return out;
}

namespace {

// One pass of the elimination for B X + X B^T + Q = 0, Q symmetric.
Mat4 eliminate(const Mat4& B, const Mat4& Q) {
  std::array<LinearForm, kUnknowns> entries;
  for (int e = 0; e < kUnknowns; ++e)
    entries[e] = lyapunov_entry(B, Q, kEntries[e].first, kEntries[e].second);

  // solved[u] expresses off-diagonal unknown u through the diagonal only
  // (coefficients 0..3 and the constant).
  std::array<std::optional<LinearForm>, kUnknowns> solved;
  std::array<bool, kUnknowns> used{};

  auto substitute = [&](const LinearForm& f) {
    LinearForm r = f;
    for (int u = kN; u < kUnknowns; ++u) {
      if (!solved[u] || r(u) == 0) continue;
      const double c = r(u);
      r(u) = 0;
      r += c * *solved[u];
    }
    return r;
  };
  // Cancellations that are exact in the symbolic entry leave rounding dust.
  auto is_zero = [](double c, const LinearForm& f) {
    return std::abs(c) <= 1e-13 * f.head<kUnknowns>().cwiseAbs().maxCoeff();
  };

  for (int step = 0; step < kUnknowns - kN; ++step) {
    bool pivoted = false;
    for (int e = 0; e < kUnknowns && !pivoted; ++e) {
      if (used[e]) continue;
      const LinearForm f = substitute(entries[e]);
      int target = -1;
      int count = 0;
      for (int u = kN; u < kUnknowns; ++u) {
        if (solved[u] || is_zero(f(u), f)) continue;
        target = u;
        ++count;
      }
      if (count != 1) continue;

      LinearForm expr = -f / f(target);
      for (int u = kN; u < kUnknowns; ++u) expr(u) = 0;
      solved[target] = expr;
      used[e] = true;
      pivoted = true;
    }
    if (!pivoted)
      throw NumericalError("elimination stalled: no entry of B C + C B^T + D contains a single "
                           "unsolved off-diagonal element (step " + std::to_string(step) + ")");
  }

  // The four unused entries are now equations in the diagonal alone.
  Eigen::Matrix4d A;
  Eigen::Vector4d rhs;
  int row = 0;
  for (int e = 0; e < kUnknowns; ++e) {
    if (used[e]) continue;
    const LinearForm f = substitute(entries[e]);
    A.row(row) = f.head<kN>().transpose();
    rhs(row) = -f(kUnknowns);
    ++row;
  }
  Eigen::FullPivLU<Eigen::Matrix4d> lu(A);
  if (!lu.isInvertible()) throw NumericalError("diagonal system of the elimination is singular");
  const Eigen::Vector4d lambda = lu.solve(rhs);

  Mat4 X = Mat4::Zero();
  for (int i = 0; i < kN; ++i) X(i, i) = lambda(i);
  for (int e = 0; e < kUnknowns; ++e) {
    const auto [i, j] = kEntries[e];
    if (i == j) continue;
    const LinearForm& f = *solved[unknown_index(i, j)];
    X(i, j) = X(j, i) = f.head<kN>().dot(lambda) + f(kUnknowns);
  }
  return X;
}

}  // namespace

CovarianceMatrix solve_lyapunov_elimination(const LinearModel& m) {
  if (m.G == 0)
    throw NumericalError("elimination solver divides by G; use the direct solver for G = 0");
  if (m.Delta == 0)
    throw NumericalError("elimination solver divides by Delta; use the direct solver for Delta = 0");

  const double s = rate_scale(m);
  const Mat4 B = m.B / s;
  const Mat4 D = m.D / s;

  // The closed-form expressions divide by G and Delta; two refinement passes
  // on the residual recover the digits lost to that.
  Mat4 C = eliminate(B, D);
  for (int pass = 0; pass < 2; ++pass) {
    const Mat4 residual = B * C + C * B.transpose() + D;
    C += eliminate(B, symmetrized(residual));
  }

  CovarianceMatrix out;
  out.C = symmetrized(C);
  return out;
}

CovarianceMatrix covariance_quadrature_oracle(const LinearModel& m,
                                              const QuadratureOptions& opt) {
  if (opt.steps < 10000) throw Error("quadrature oracle needs at least 1e4 steps");

  Eigen::EigenSolver<Mat4> es(m.B, false);
  if (es.info() != Eigen::Success) throw EigenSolverError("eigenvalues of B did not converge");
  const double abscissa = es.eigenvalues().real().maxCoeff();
  if (!(abscissa < 0)) throw NumericalError("quadrature oracle requires a stable drift matrix");

  const double horizon = std::max(opt.horizon, 20.0 / std::abs(abscissa));
  const double norm = m.B.cwiseAbs().rowwise().sum().maxCoeff();
  int doublings = 0;
  double panel = horizon;
  while (norm * panel > 1.0) {
    panel /= 2;
    ++doublings;
  }

  // Composite Simpson on [0, panel].
  const long n = opt.steps + (opt.steps % 2);
  const double h = panel / static_cast<double>(n);
  const Mat4 step = (m.B * h).exp();
  Mat4 E = Mat4::Identity();
  Mat4 integral = Mat4::Zero();
  for (long k = 0; k <= n; ++k) {
    const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    integral += w * (E * m.D * E.transpose());
    if (k < n) E = step * E;
  }
  integral *= h / 3;
  Mat4 P = (m.B * panel).exp();

  auto doubled = [&](const Mat4& c, const Mat4& p) {
    return Mat4(c + p * c * p.transpose());
  };
  for (int k = 0; k < doublings; ++k) {
    integral = doubled(integral, P);
    P = P * P;
  }
  for (int k = 0; k < opt.max_doublings; ++k) {
    const Mat4 next = doubled(integral, P);
    P = P * P;
    const double change = covariance_deviation(next, integral);
    integral = next;
    if (change <= opt.doubling_tol) {
      CovarianceMatrix out;
      out.C = symmetrized(integral);
      return out;
    }
  }
  throw ConvergenceError("quadrature oracle did not settle under horizon doubling",
                         covariance_deviation(doubled(integral, P), integral));
}

double lyapunov_residual(const LinearModel& m, const CovarianceMatrix& C) {
  const Mat4 r = m.B * C.C + C.C * m.B.transpose() + m.D;
  const double d = m.D.cwiseAbs().maxCoeff();
  const double rmax = r.cwiseAbs().maxCoeff();
  return d > 0 ? rmax / d : rmax;
}

double covariance_deviation(const Mat4& a, const Mat4& b) {
  double worst = 0;
  for (int i = 0; i < kN; ++i) {
    for (int j = 0; j < kN; ++j) {
      const double scale = std::max(std::sqrt(std::abs(a(i, i) * a(j, j))),
                                    std::numeric_limits<double>::min());
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / scale);
    }
  }
  return worst;
}

}  // namespace rotent
