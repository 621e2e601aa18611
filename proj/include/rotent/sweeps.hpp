#pragma once

#include "rotent/dynamics.hpp"
#include "rotent/entanglement.hpp"
#include "rotent/params.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rotent {

enum class SweepAxis { temperature, detuning, angular_momentum, mass };
enum class AxisScale { linear, log };

std::string_view axis_name(SweepAxis axis);
/// Throws Error for names other than temperature|detuning|angular_momentum|mass.
SweepAxis parse_axis(std::string_view name);

/// Sets the ParameterSet field the axis controls (T, Delta, l or M).
void apply_axis(ParameterSet& p, SweepAxis axis, double value);

/// Sets a ParameterSet field by its name; throws Error for unknown names.
void set_parameter(ParameterSet& p, std::string_view name, double value);
double get_parameter(const ParameterSet& p, std::string_view name);
/// Field names in declaration order.
const std::vector<std::string>& parameter_names();

struct SweepSpec {
  SweepAxis axis = SweepAxis::temperature;
  double min = 0;
  double max = 0;
  int points = 1;
  AxisScale scale = AxisScale::linear;
  std::vector<double> values;  // explicit grid; overrides min/max/points when non-empty
  ParameterSet base;
  std::vector<std::pair<std::string, double>> overrides;

  /// The grid in sweep order. Integer axes (angular_momentum) are rounded.
  std::vector<double> axis_values() const;
  /// base with overrides applied.
  ParameterSet resolved_base() const;
};

/// Throws Error when the spec cannot produce a non-empty, in-domain grid.
void validate_sweep(const SweepSpec& spec);

struct PipelineOptions {
  bool verify_solvers = false;  // also run the elimination solver per point
  unsigned threads = 1;         // 0 = hardware concurrency
};

struct SweepRow {
  double axis_value = 0;
  double a_s = 0;
  double G = 0;
  bool stable = false;
  std::optional<double> omega_eff;
  std::optional<double> nbar;
  std::optional<double> T_eff;
  std::optional<double> eta_minus;
  std::optional<double> E_N;
  std::optional<double> nu_min;
  std::optional<double> solver_deviation;  // direct vs elimination, verify mode only
  std::string error;                       // empty on success
};

/// Everything computed for one parameter point.
struct PointEvaluation {
  ParameterSet params;
  DerivedQuantities derived;
  SteadyState steady;
  std::optional<EffectiveResponse> response;
  LinearModel model;
  StabilityVerdict stability;
  std::optional<CovarianceMatrix> covariance;
  std::optional<EntanglementReport> report;
  std::optional<double> solver_deviation;
  std::string error;
};

/// validate -> derive -> steady state -> effective response -> linear model
/// (nbar at omega_eff) -> stability -> Lyapunov (direct) -> log negativity.
/// Numerical failures are recorded in .error; ParameterError propagates.
PointEvaluation evaluate_point(const ParameterSet& p, const PipelineOptions& opt = {});

SweepRow to_row(double axis_value, const PointEvaluation& ev);

struct SweepResult {
  SweepSpec spec;
  ParameterSet resolved;  // base after overrides
  PipelineOptions options;
  std::vector<SweepRow> rows;
};

SweepResult run_sweep(const SweepSpec& spec, const PipelineOptions& opt = {});

enum class ThresholdTarget { entanglement, stability };

/// Axis value at which the target predicate (E_N > 0, or stable) first flips
/// along the rows, refined by bisection with `evaluate` between the bracketing
/// rows (<= 40 iterations, relative width 1e-6; integer steps on integer
/// axes). Returns the first value on the far side of the flip, or nullopt
/// when the predicate never changes.
std::optional<double> find_threshold(const SweepResult& result, ThresholdTarget target,
                                     const std::function<SweepRow(double)>& evaluate);

/// Same, re-evaluating the full pipeline at the resolved base parameters.
std::optional<double> find_threshold(const SweepResult& result,
                                     ThresholdTarget target = ThresholdTarget::entanglement);

}  // namespace rotent
