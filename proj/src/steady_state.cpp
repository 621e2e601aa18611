#include "rotent/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rotent {

SteadyState steady_state(const ParameterSet& p, const DerivedQuantities& d) {
  SteadyState s;
  const double half = d.gamma / 2;
  s.a_s = std::sqrt(d.gamma * d.photon_flux) / std::sqrt(half * half + p.Delta * p.Delta);
  s.phi_s = d.g * s.a_s * s.a_s / p.omega_phi;
  s.L_z_s = 0;
  s.G = d.g * s.a_s * std::numbers::sqrt2;
  s.delta_bare = p.Delta + d.g * s.phi_s;
  return s;
}

namespace {

struct Cubic {
  double delta, kappa2, K;  // kappa2 = (gamma/2)^2
  double operator()(double x) const {
    return ((x - 2 * delta) * x + kappa2 + delta * delta) * x - K;
  }
};

// f changes sign on [lo, hi]
double bisect(const Cubic& f, double lo, double hi) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const bool rising = f(lo) < 0;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= 2 * eps * std::max(std::abs(lo), std::abs(hi)))
      break;
    const double fm = f(mid);
    if (fm == 0) return mid;
    ((fm < 0) == rising ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> bistability_roots(const ParameterSet& p, const DerivedQuantities& d,
                                      double delta_bare) {
  if (d.g == 0 || d.photon_flux == 0) return {0.0};

  const double kappa = d.gamma / 2;
  const Cubic f{delta_bare, kappa * kappa, d.g * d.g * d.gamma * d.photon_flux / p.omega_phi};

  // f(0) = -K < 0 and f(x) < 0 for all x < 0, so every root is positive.
  std::vector<double> brackets{0.0};
  const double disc = 4 * delta_bare * delta_bare - 12 * f.kappa2;
  if (disc > 0) {
    const double r = std::sqrt(disc);
    const double x1 = (4 * delta_bare - r) / 6;
    const double x2 = (4 * delta_bare + r) / 6;
    brackets.push_back(x1);
    brackets.push_back(x2);
  }
  double hi = std::max(brackets.back(), 1.0);
  while (f(hi) <= 0) hi *= 2;
  brackets.push_back(hi);

  std::vector<double> x_roots;
  for (std::size_t i = 0; i + 1 < brackets.size(); ++i) {
    const double a = brackets[i];
    const double b = brackets[i + 1];
    const double fa = f(a);
    const double fb = f(b);
    if (fa == 0) {
      x_roots.push_back(a);
      continue;
    }
    if ((fa < 0) == (fb < 0)) continue;
    x_roots.push_back(bisect(f, a, b));
  }
  std::vector<double> roots;
  for (double x : x_roots) roots.push_back(x / d.g);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) {
                            return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
                          }),
              roots.end());
  return roots;
}

}  // namespace rotent
