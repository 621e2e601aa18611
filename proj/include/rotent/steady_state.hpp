#pragma once

#include "rotent/params.hpp"

#include <vector>

namespace rotent {

// Semiclassical fixed point with the field phase chosen so a_s is real.
struct SteadyState {
  double a_s = 0;         // intracavity amplitude (sqrt of photon number)
  double phi_s = 0;       // static angular deflection
  double L_z_s = 0;       // always zero
  double G = 0;           // g * a_s * sqrt(2), rad/s
  double delta_bare = 0;  // Delta + g * phi_s, rad/s
};

/// Steady state at the effective detuning p.Delta (feedback-stabilized cavity).
SteadyState steady_state(const ParameterSet& p, const DerivedQuantities& d);

/// All real equilibrium deflections phi_s at a fixed bare detuning, ascending.
///
/// Self-consistency phi = g a^2(delta - g phi) / omega_phi is a cubic in
/// x = g phi:  x^3 - 2 delta x^2 + ((gamma/2)^2 + delta^2) x - K = 0 with
/// K = g^2 gamma |a_in|^2 / omega_phi. One root, or three in the bistable
/// regime; coincident roots are reported once.
std::vector<double> bistability_roots(const ParameterSet& p, const DerivedQuantities& d,
                                      double delta_bare);

}  // namespace rotent
