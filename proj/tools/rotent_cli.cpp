// rotent: stationary mirror-field entanglement of a Laguerre-Gaussian cavity
// mode coupled to a rotating end mirror.

#include "rotent/config.hpp"
#include "rotent/errors.hpp"
#include "rotent/render.hpp"
#include "rotent/sweeps.hpp"
#include "rotent/verification.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

using namespace rotent;

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kNumericalError = 2;

Config load(const std::string& path) { return path.empty() ? Config{} : load_config(path); }

std::string opt(const std::optional<double>& v) { return v ? fmt::format("{:.10g}", *v) : "n/a"; }

int cmd_point(const std::string& config_path, bool verify) {
  const Config cfg = load(config_path);
  const auto ev = evaluate_point(cfg.params, {.verify_solvers = verify});
  fmt::print("a_s          {:.10g}\n", ev.steady.a_s);
  fmt::print("G            {:.10g} rad/s\n", ev.steady.G);
  fmt::print("stable       {}\n", ev.stability.stable() ? "yes" : "no");
  if (ev.response) {
    fmt::print("omega_eff    {:.10g} rad/s ({:.6g} omega_phi)\n", ev.response->omega_eff,
               ev.response->omega_eff / cfg.params.omega_phi);
    fmt::print("nbar         {:.10g}\n", ev.response->nbar);
    fmt::print("T_eff        {:.10g} K\n", ev.response->T_eff);
    fmt::print("T_c          {:.10g} K\n", ev.response->T_c);
  }
  if (ev.report) {
    fmt::print("sigma        {:.10g}\n", ev.report->sigma);
    fmt::print("det C        {:.10g}\n", ev.report->detC);
    fmt::print("eta_minus    {:.10g}\n", ev.report->eta_minus);
    fmt::print("E_N          {:.10g}\n", ev.report->E_N);
    fmt::print("nu_min       {:.10g}\n", ev.report->nu_min);
  }
  if (ev.solver_deviation) fmt::print("solver dev   {:.3e}\n", *ev.solver_deviation);
  if (!ev.error.empty()) {
    fmt::print(stderr, "error: {}\n", ev.error);
    return kNumericalError;
  }
  return kOk;
}

int cmd_stability(const std::string& config_path) {
  const Config cfg = load(config_path);
  const auto d = derive_quantities(cfg.params);
  const auto ss = steady_state(cfg.params, d);
  const auto m = build_linear_model(ss, cfg.params, d, 0.0);
  const auto v = assess_stability(m);
  fmt::print("routh_hurwitz      {}\n", v.routh_hurwitz_pass ? "pass" : "fail");
  fmt::print("inequality[0]      {:.6e}\n", v.inequality_values[0]);
  fmt::print("inequality[1]      {:.6e}\n", v.inequality_values[1]);
  fmt::print("spectral_abscissa  {:.6e} rad/s\n", v.spectral_abscissa);
  fmt::print("consistent         {}\n", v.consistent ? "yes" : "no");
  fmt::print("bare detuning      {:.10g} rad/s\n", ss.delta_bare);
  const auto roots = bistability_roots(cfg.params, d, ss.delta_bare);
  fmt::print("bistability roots  {}\n", roots.size());
  for (double r : roots) fmt::print("  phi_s = {:.10e}\n", r);
  return v.stable() ? kOk : kNumericalError;
}

struct SweepFlags {
  std::string out = "sweep";
  std::optional<std::string> axis;
  std::optional<double> min, max;
  std::optional<int> points;
  std::optional<std::string> scale;
  bool verify = false;
  unsigned threads = 0;
};

int cmd_sweep(const std::string& config_path, const SweepFlags& f) {
  const Config cfg = load(config_path);
  SweepSpec spec = cfg.sweep.value_or(SweepSpec{});
  spec.base = cfg.params;
  try {
    if (f.axis) spec.axis = parse_axis(*f.axis);
    if (f.min || f.max || f.points) spec.values.clear();
    if (f.min) spec.min = *f.min;
    if (f.max) spec.max = *f.max;
    if (f.points) spec.points = *f.points;
    if (f.scale) {
      if (*f.scale == "log") spec.scale = AxisScale::log;
      else if (*f.scale == "linear") spec.scale = AxisScale::linear;
      else throw Error("--scale must be linear or log");
    }
    if (!cfg.sweep && !(f.axis && f.min && f.max && f.points))
      throw Error("no [sweep] section: --axis, --min, --max and --points are required");
    validate_sweep(spec);
  } catch (const Error& e) {
    throw ConfigError("sweep", 0, e.what());
  }

  const auto result = run_sweep(spec, {.verify_solvers = f.verify, .threads = f.threads});
  const auto files = render_outputs(result, f.out);

  int failed = 0;
  double worst_dev = 0;
  for (const auto& r : result.rows) {
    failed += r.error.empty() ? 0 : 1;
    if (r.solver_deviation) worst_dev = std::max(worst_dev, *r.solver_deviation);
  }
  fmt::print("{} points along {}, {} without a value\n", result.rows.size(), axis_name(spec.axis),
             failed);
  if (f.verify) fmt::print("max direct/elimination deviation {:.3e}\n", worst_dev);
  if (const auto t = find_threshold(result)) fmt::print("E_N > 0 boundary at {:.8g}\n", *t);
  fmt::print("wrote {}\n      {}\n      {}\n", files.csv, files.svg, files.provenance);
  return kOk;
}

int cmd_verify(std::uint64_t seed, int instances) {
  const auto s = run_cross_solver_suite(seed, instances);
  fmt::print("instances                 {}\n", s.instances);
  fmt::print("solver failures           {}\n", s.failures);
  fmt::print("direct vs elimination     {:.3e}\n", s.max_direct_vs_elimination);
  fmt::print("direct vs quadrature      {:.3e}\n", s.max_direct_vs_quadrature);
  fmt::print("elimination vs quadrature {:.3e}\n", s.max_elimination_vs_quadrature);
  fmt::print("max Lyapunov residual     {:.3e}\n", s.max_residual);
  fmt::print("max structural deviation  {:.3e}\n", s.max_structural);
  fmt::print("min symplectic eigenvalue {:.12g}\n", s.min_nu);
  const auto a = run_stability_agreement(seed, 1000);
  fmt::print("RH vs spectral            {}/{} agree ({} stable)\n", a.agree, a.draws, a.stable);

  const bool ok = s.failures == 0 && s.max_agreement() <= 1e-8 && s.max_residual <= 1e-10 &&
                  s.max_structural <= 1e-9 && a.agree == a.draws;
  fmt::print("{}\n", ok ? "PASS" : "FAIL");
  return ok ? kOk : kNumericalError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stationary mirror-field entanglement for a rotating-mirror LG cavity"};
  app.require_subcommand(1);

  std::string config_path;
  bool verify_solvers = false;
  std::uint64_t seed = 20080101;
  int instances = 200;
  SweepFlags sf;

  auto* point = app.add_subcommand("point", "evaluate one parameter point");
  point->add_option("--config", config_path, "configuration file");
  point->add_flag("--verify-solvers", verify_solvers, "cross-check with the elimination solver");

  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and write CSV/SVG/provenance");
  sweep->add_option("--config", config_path, "configuration file");
  sweep->add_option("--out", sf.out, "output path prefix")->capture_default_str();
  sweep->add_option("--axis", sf.axis, "temperature|detuning|angular_momentum|mass");
  sweep->add_option("--min", sf.min, "first axis value (SI)");
  sweep->add_option("--max", sf.max, "last axis value (SI)");
  sweep->add_option("--points", sf.points, "number of grid points");
  sweep->add_option("--scale", sf.scale, "linear|log");
  sweep->add_option("--threads", sf.threads, "worker threads, 0 = all cores");
  sweep->add_flag("--verify-solvers", sf.verify, "cross-check with the elimination solver");

  auto* stability = app.add_subcommand("stability", "Routh-Hurwitz and eigenvalue stability");
  stability->add_option("--config", config_path, "configuration file");

  auto* verify = app.add_subcommand("verify", "randomized three-solver agreement suite");
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--instances", instances, "number of stable draws")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*point) return cmd_point(config_path, verify_solvers);
    if (*sweep) return cmd_sweep(config_path, sf);
    if (*stability) return cmd_stability(config_path);
    if (*verify) return cmd_verify(seed, instances);
  } catch (const ConfigError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kConfigError;
  } catch (const ParameterError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kConfigError;
  } catch (const Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kNumericalError;
  }
  return kOk;
}
