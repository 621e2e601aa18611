#pragma once

#include "rotent/constants.hpp"

#include <numbers>

namespace rotent {

/// Physical inputs of the cavity + rotating mirror system, SI units.
/// Angular frequencies (omega_phi, Delta) are in rad/s.
struct ParameterSet {
  double L = 1e-3;                          // cavity length (m)
  double lambda = 810e-9;                   // laser wavelength (m)
  double omega_phi = 2 * std::numbers::pi * 1e7;  // mirror rotation frequency (rad/s)
  double M = 100e-12;                       // mirror mass (kg)
  double R = 10e-6;                         // mirror radius (m)
  double Q_phi = 2e6;                       // mechanical quality factor
  double finesse = 5e3;
  double l = 100;                           // orbital angular momentum, integer >= 0
  double P_in = 50e-3;                      // input power (W)
  double Delta = 2 * std::numbers::pi * 1e7;  // effective detuning (rad/s)
  double T = 0.0;                           // ambient temperature (K)

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

/// The reference operating point: mm cavity, 810 nm, 10 MHz rotor of
/// 100 ng and 10 um radius, l = 100, 50 mW, Delta = omega_phi.
inline ParameterSet reference_parameters() { return ParameterSet{}; }

/// Quantities that follow from a ParameterSet alone.
struct DerivedQuantities {
  double I = 0;            // moment of inertia (kg m^2)
  double g = 0;            // optorotational coupling (rad/s)
  double gamma = 0;        // cavity decay rate (rad/s)
  double gamma_phi = 0;    // mirror damping rate D_phi / I (rad/s)
  double D_phi = 0;        // mirror damping constant (J s)
  double xi_phi = 0;       // torque per photon (N m)
  double omega_c = 0;      // optical angular frequency (rad/s)
  double photon_flux = 0;  // |a_in|^2 (photons/s)
};

/// Returns p unchanged or throws ParameterError naming the first bad field.
ParameterSet validate_parameters(const ParameterSet& p);

DerivedQuantities derive_quantities(const ParameterSet& p,
                                    const PhysicalConstants& k = kCodata);

}  // namespace rotent
