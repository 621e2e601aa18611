#pragma once

#include "rotent/sweeps.hpp"

#include <string>

namespace rotent {

/// Header + one line per row; columns axis_value, a_s, G, stable, omega_eff,
/// nbar, T_eff, eta_minus, E_N, nu_min. Absent values are empty fields.
std::string sweep_csv(const SweepResult& result);

/// Static SVG line plot of E_N against the sweep axis. Absent E_N breaks the line.
std::string sweep_svg(const SweepResult& result);

/// Resolved parameters, derived quantities, grid, conventions and solver
/// tolerances as pretty-printed JSON.
std::string sweep_provenance(const SweepResult& result);

struct RenderedFiles {
  std::string csv;
  std::string svg;
  std::string provenance;
};

/// Writes <prefix>.csv, <prefix>.svg and <prefix>.provenance.json.
/// Throws Error naming the path on I/O failure.
RenderedFiles render_outputs(const SweepResult& result, const std::string& prefix);

}  // namespace rotent
