#pragma once

#include "rotent/dynamics.hpp"

#include <cstdint>
#include <random>

namespace rotent {

// Dimensionless random draws (omega_phi = 1) covering weak to strong
// coupling, both detuning signs, and damping from 1e-3 to 1.
struct ModelDraw {
  double gamma_phi_min = 1e-3, gamma_phi_max = 1.0;  // log-uniform
  double gamma_min = 0.1, gamma_max = 10.0;          // log-uniform
  double delta_min = 0.05, delta_max = 3.0;          // |Delta|, random sign
  double G_min = 0.01, G_max = 1.5;                  // uniform
  double nbar_min = 1e-3, nbar_max = 1e3;            // log-uniform
};

LinearModel draw_model(std::mt19937_64& rng, const ModelDraw& draw = {});

/// Keeps drawing until the Routh-Hurwitz inequalities hold.
LinearModel draw_stable_model(std::mt19937_64& rng, const ModelDraw& draw = {});

struct CrossSolverStats {
  int instances = 0;
  int failures = 0;                  // any solver threw
  double max_direct_vs_elimination = 0;
  double max_direct_vs_quadrature = 0;
  double max_elimination_vs_quadrature = 0;
  double max_residual = 0;           // over direct and elimination solutions
  double max_structural = 0;         // worst closed-form off-diagonal identity
  double min_nu = 1e300;             // smallest symplectic eigenvalue seen

  double max_agreement() const;
};

/// Worst deviation of C from the closed-form off-diagonal entries the
/// elimination produces (C[phi][Lz] = 0 and the four relations through the
/// diagonal), each scaled by sqrt(C_ii C_jj).
double structural_identity_deviation(const LinearModel& m, const Mat4& C);

/// Direct, elimination and quadrature solutions on `count` stable draws.
CrossSolverStats run_cross_solver_suite(std::uint64_t seed, int count, const ModelDraw& draw = {});

struct StabilityAgreement {
  int draws = 0;
  int stable = 0;
  int agree = 0;
};

/// RH verdict vs eigenvalue sign on `count` unfiltered draws.
StabilityAgreement run_stability_agreement(std::uint64_t seed, int count,
                                           const ModelDraw& draw = {.G_max = 3.0});

}  // namespace rotent
