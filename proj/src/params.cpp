#include "rotent/params.hpp"

#include "rotent/errors.hpp"

#include <cmath>
#include <string>

namespace rotent {

namespace {

void require_positive(const char* name, double v) {
  if (!std::isfinite(v)) throw ParameterError(name, "must be finite");
  if (!(v > 0)) throw ParameterError(name, "must be strictly positive, got " + std::to_string(v));
}

void require_non_negative(const char* name, double v) {
  if (!std::isfinite(v)) throw ParameterError(name, "must be finite");
  if (v < 0) throw ParameterError(name, "must be non-negative, got " + std::to_string(v));
}

}  // namespace

ParameterSet validate_parameters(const ParameterSet& p) {
  require_positive("L", p.L);
  require_positive("lambda", p.lambda);
  require_positive("omega_phi", p.omega_phi);
  require_positive("M", p.M);
  require_positive("R", p.R);
  require_positive("Q_phi", p.Q_phi);
  require_positive("finesse", p.finesse);
  require_non_negative("l", p.l);
  if (std::floor(p.l) != p.l) throw ParameterError("l", "must be an integer, got " + std::to_string(p.l));
  require_non_negative("P_in", p.P_in);
  if (!std::isfinite(p.Delta)) throw ParameterError("Delta", "must be finite");
  require_non_negative("T", p.T);
  return p;
}

DerivedQuantities derive_quantities(const ParameterSet& p, const PhysicalConstants& k) {
  DerivedQuantities d;
  d.I = p.M * p.R * p.R / 2;
  d.xi_phi = k.c * p.l * k.hbar / p.L;
  d.g = (k.c * p.l / p.L) * std::sqrt(k.hbar / (d.I * p.omega_phi));
  d.gamma_phi = p.omega_phi / p.Q_phi;
  d.D_phi = d.gamma_phi * d.I;
  d.omega_c = 2 * std::numbers::pi * k.c / p.lambda;
  // linewidth = free spectral range (pi c / L, rad/s) over finesse
  d.gamma = std::numbers::pi * k.c / (p.L * p.finesse);
  d.photon_flux = p.P_in / (k.hbar * d.omega_c);
  return d;
}

}  // namespace rotent
