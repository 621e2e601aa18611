#include "rotent/sweeps.hpp"

#include "rotent/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace rotent {

namespace {

using Field = double ParameterSet::*;

struct FieldRef {
  const char* name;
  Field member;
};

constexpr FieldRef kFields[] = {
    {"L", &ParameterSet::L},
    {"lambda", &ParameterSet::lambda},
    {"omega_phi", &ParameterSet::omega_phi},
    {"M", &ParameterSet::M},
    {"R", &ParameterSet::R},
    {"Q_phi", &ParameterSet::Q_phi},
    {"finesse", &ParameterSet::finesse},
    {"l", &ParameterSet::l},
    {"P_in", &ParameterSet::P_in},
    {"Delta", &ParameterSet::Delta},
    {"T", &ParameterSet::T},
};

Field find_field(std::string_view name) {
  for (const auto& f : kFields)
    if (name == f.name) return f.member;
  throw Error("unknown parameter '" + std::string(name) + "'");
}

bool predicate(const SweepRow& row, ThresholdTarget target) {
  if (target == ThresholdTarget::stability) return row.stable;
  return row.E_N.has_value() && *row.E_N > 0;
}

}  // namespace

std::string_view axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::temperature: return "temperature";
    case SweepAxis::detuning: return "detuning";
    case SweepAxis::angular_momentum: return "angular_momentum";
    case SweepAxis::mass: return "mass";
  }
  return "?";
}

SweepAxis parse_axis(std::string_view name) {
  for (auto a : {SweepAxis::temperature, SweepAxis::detuning, SweepAxis::angular_momentum,
                 SweepAxis::mass})
    if (axis_name(a) == name) return a;
  throw Error("unknown sweep axis '" + std::string(name) +
              "' (expected temperature, detuning, angular_momentum or mass)");
}

void apply_axis(ParameterSet& p, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::temperature: p.T = value; break;
    case SweepAxis::detuning: p.Delta = value; break;
    case SweepAxis::angular_momentum: p.l = value; break;
    case SweepAxis::mass: p.M = value; break;
  }
}

void set_parameter(ParameterSet& p, std::string_view name, double value) {
  p.*find_field(name) = value;
}

double get_parameter(const ParameterSet& p, std::string_view name) {
  return p.*find_field(name);
}

const std::vector<std::string>& parameter_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& f : kFields) out.emplace_back(f.name);
    return out;
  }();
  return names;
}

std::vector<double> SweepSpec::axis_values() const {
  std::vector<double> out;
  if (!values.empty()) {
    out = values;
  } else if (points == 1) {
    out.push_back(min);
  } else {
    for (int i = 0; i < points; ++i) {
      const double t = static_cast<double>(i) / (points - 1);
      double v = scale == AxisScale::log ? min * std::pow(max / min, t) : min + t * (max - min);
      if (i == points - 1) v = max;
      out.push_back(v);
    }
  }
  if (axis == SweepAxis::angular_momentum) {
    for (auto& v : out) v = std::round(v);
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

ParameterSet SweepSpec::resolved_base() const {
  ParameterSet p = base;
  for (const auto& [name, value] : overrides) set_parameter(p, name, value);
  return p;
}

void validate_sweep(const SweepSpec& spec) {
  if (spec.values.empty()) {
    if (spec.points < 1) throw Error("sweep needs at least one point");
    if (!std::isfinite(spec.min) || !std::isfinite(spec.max))
      throw Error("sweep range must be finite");
    if (spec.points > 1 && spec.max < spec.min) throw Error("sweep max is below min");
    if (spec.scale == AxisScale::log && !(spec.min > 0 && spec.max > 0))
      throw Error("logarithmic sweep needs a positive range");
  }
  const auto grid = spec.axis_values();
  if (grid.empty()) throw Error("sweep grid is empty");
  const ParameterSet base = spec.resolved_base();
  for (double v : grid) {
    ParameterSet p = base;
    apply_axis(p, spec.axis, v);
    validate_parameters(p);
  }
}

PointEvaluation evaluate_point(const ParameterSet& p, const PipelineOptions& opt) {
  PointEvaluation ev;
  ev.params = validate_parameters(p);
  ev.derived = derive_quantities(ev.params);
  ev.steady = steady_state(ev.params, ev.derived);

  try {
    ev.response = effective_response(ev.steady, ev.params, ev.derived);
  } catch (const NumericalError& e) {
    ev.error = e.what();
  }
  const double nbar = ev.response ? ev.response->nbar : 0.0;
  ev.model = build_linear_model(ev.steady, ev.params, ev.derived, nbar);

  try {
    ev.stability = assess_stability(ev.model);
  } catch (const NumericalError& e) {
    ev.error = e.what();
    return ev;
  }
  if (!ev.error.empty()) return ev;
  if (!ev.stability.stable()) {
    ev.error = "unstable: spectral abscissa " + std::to_string(ev.stability.spectral_abscissa);
    return ev;
  }

  try {
    ev.covariance = solve_lyapunov_direct(ev.model);
    if (opt.verify_solvers && ev.model.G != 0 && ev.model.Delta != 0) {
      const auto alt = solve_lyapunov_elimination(ev.model);
      ev.solver_deviation = covariance_deviation(ev.covariance->C, alt.C);
    }
    ev.report = log_negativity(*ev.covariance);
  } catch (const NumericalError& e) {
    ev.error = e.what();
  }
  return ev;
}

SweepRow to_row(double axis_value, const PointEvaluation& ev) {
  SweepRow row;
  row.axis_value = axis_value;
  row.a_s = ev.steady.a_s;
  row.G = ev.steady.G;
  row.stable = ev.stability.stable();
  if (ev.response) {
    row.omega_eff = ev.response->omega_eff;
    row.nbar = ev.response->nbar;
    row.T_eff = ev.response->T_eff;
  }
  if (ev.report) {
    row.eta_minus = ev.report->eta_minus;
    row.E_N = ev.report->E_N;
    row.nu_min = ev.report->nu_min;
  }
  row.solver_deviation = ev.solver_deviation;
  row.error = ev.error;
  return row;
}

SweepResult run_sweep(const SweepSpec& spec, const PipelineOptions& opt) {
  validate_sweep(spec);
  SweepResult result;
  result.spec = spec;
  result.resolved = spec.resolved_base();
  result.options = opt;

  const auto grid = spec.axis_values();
  result.rows.resize(grid.size());

  auto work = [&](std::size_t i) {
    ParameterSet p = result.resolved;
    apply_axis(p, spec.axis, grid[i]);
    result.rows[i] = to_row(grid[i], evaluate_point(p, opt));
  };

  unsigned threads = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                      : opt.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) work(i);
    return result;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < grid.size(); i = next++) work(i);
    });
  }
  pool.clear();  // joins
  return result;
}

std::optional<double> find_threshold(const SweepResult& result, ThresholdTarget target,
                                     const std::function<SweepRow(double)>& evaluate) {
  const auto& rows = result.rows;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const bool left = predicate(rows[i], target);
    if (predicate(rows[i + 1], target) == left) continue;

    double lo = rows[i].axis_value;
    double hi = rows[i + 1].axis_value;
    const bool integer_axis = result.spec.axis == SweepAxis::angular_momentum;
    for (int it = 0; it < 40; ++it) {
      if (integer_axis ? hi - lo <= 1
                       : std::abs(hi - lo) <= 1e-6 * std::max(std::abs(lo), std::abs(hi)))
        break;
      double mid = 0.5 * (lo + hi);
      if (integer_axis) mid = std::floor(mid);
      (predicate(evaluate(mid), target) == left ? lo : hi) = mid;
    }
    return hi;
  }
  return std::nullopt;
}

std::optional<double> find_threshold(const SweepResult& result, ThresholdTarget target) {
  const ParameterSet base = result.resolved;
  const SweepAxis axis = result.spec.axis;
  const PipelineOptions opt = result.options;
  return find_threshold(result, target, [&](double v) {
    ParameterSet p = base;
    apply_axis(p, axis, v);
    return to_row(v, evaluate_point(p, opt));
  });
}

}  // namespace rotent
