#include "rotent/render.hpp"

#include "rotent/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

namespace rotent {

namespace {

std::string field(const std::optional<double>& v) {
  return v ? fmt::format("{:.17g}", *v) : std::string{};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  out.close();
  if (!out) throw Error("write to '" + path + "' failed");
}

std::string axis_label(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::temperature: return "T (K)";
    case SweepAxis::detuning: return "Delta (rad/s)";
    case SweepAxis::angular_momentum: return "l";
    case SweepAxis::mass: return "M (kg)";
  }
  return "";
}

}  // namespace

std::string sweep_csv(const SweepResult& result) {
  std::string out = "axis_value,a_s,G,stable,omega_eff,nbar,T_eff,eta_minus,E_N,nu_min\n";
  for (const auto& r : result.rows) {
    out += fmt::format("{:.17g},{:.17g},{:.17g},{},{},{},{},{},{},{}\n", r.axis_value, r.a_s, r.G,
                       r.stable ? 1 : 0, field(r.omega_eff), field(r.nbar), field(r.T_eff),
                       field(r.eta_minus), field(r.E_N), field(r.nu_min));
  }
  return out;
}

std::string sweep_svg(const SweepResult& result) {
  constexpr double W = 640, H = 420, left = 70, right = 20, top = 20, bottom = 60;
  const double pw = W - left - right;
  const double ph = H - top - bottom;
  const bool logx = result.spec.scale == AxisScale::log && result.spec.values.empty();

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymax = 0;
  for (const auto& r : result.rows) {
    xmin = std::min(xmin, r.axis_value);
    xmax = std::max(xmax, r.axis_value);
    if (r.E_N) ymax = std::max(ymax, *r.E_N);
  }
  if (result.rows.empty()) xmin = 0, xmax = 1;
  if (!(xmax > xmin)) xmax = xmin + 1;
  if (!(ymax > 0)) ymax = 1;
  ymax *= 1.05;

  auto tx = [&](double x) {
    const double t = logx ? std::log(x / xmin) / std::log(xmax / xmin) : (x - xmin) / (xmax - xmin);
    return left + t * pw;
  };
  auto ty = [&](double y) { return top + ph * (1 - y / ymax); };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n"
      "<rect x=\"{2}\" y=\"{3}\" width=\"{4}\" height=\"{5}\" fill=\"none\" stroke=\"black\"/>\n",
      W, H, left, top, pw, ph);

  for (int i = 0; i <= 4; ++i) {
    const double t = i / 4.0;
    const double xv = logx ? xmin * std::pow(xmax / xmin, t) : xmin + t * (xmax - xmin);
    const double yv = t * ymax;
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1}\" x2=\"{0:.2f}\" y2=\"{2}\" stroke=\"black\"/>"
        "<text x=\"{0:.2f}\" y=\"{3}\" text-anchor=\"middle\">{4:.3g}</text>\n",
        tx(xv), top + ph, top + ph + 5, top + ph + 20, xv);
    svg += fmt::format(
        "<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"black\"/>"
        "<text x=\"{3}\" y=\"{4:.2f}\" text-anchor=\"end\">{5:.3g}</text>\n",
        left - 5, ty(yv), left, left - 8, ty(yv) + 4, yv);
  }
  svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", left + pw / 2,
                     H - 15, axis_label(result.spec.axis));
  svg += fmt::format(
      "<text x=\"18\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {0})\">E_N</text>\n",
      top + ph / 2);

  auto flush = [&](std::string& path) {
    if (!path.empty())
      svg += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\"/>\n",
                         path);
    path.clear();
  };
  std::string path;
  for (const auto& r : result.rows) {
    if (!r.E_N) {
      flush(path);
      continue;
    }
    path += fmt::format("{}{:.2f},{:.2f} ", path.empty() ? "M" : "L", tx(r.axis_value), ty(*r.E_N));
  }
  flush(path);
  svg += "</svg>\n";
  return svg;
}

std::string sweep_provenance(const SweepResult& result) {
  using nlohmann::ordered_json;
  ordered_json j;
  ordered_json params;
  for (const auto& name : parameter_names()) params[name] = get_parameter(result.resolved, name);
  j["parameters"] = params;

  const auto d = derive_quantities(result.resolved);
  j["derived"] = {{"I", d.I},         {"g", d.g},           {"gamma", d.gamma},
                  {"gamma_phi", d.gamma_phi}, {"D_phi", d.D_phi}, {"xi_phi", d.xi_phi},
                  {"omega_c", d.omega_c}, {"photon_flux", d.photon_flux}};

  const auto& s = result.spec;
  ordered_json sweep;
  sweep["axis"] = std::string(axis_name(s.axis));
  sweep["scale"] = s.scale == AxisScale::log ? "log" : "linear";
  if (s.values.empty()) {
    sweep["min"] = s.min;
    sweep["max"] = s.max;
    sweep["points"] = s.points;
  } else {
    sweep["values"] = s.values;
  }
  ordered_json overrides = ordered_json::object();
  for (const auto& [k, v] : s.overrides) overrides[k] = v;
  sweep["overrides"] = overrides;
  j["sweep"] = sweep;

  j["conventions"] = {
      {"cavity_decay", "gamma = pi c / (L finesse)"},
      {"photon_flux", "P_in / (hbar omega_c), omega_c = 2 pi c / lambda"},
      {"thermal_occupancy_frequency", "omega_eff"},
      {"vacuum_variance", 0.5},
  };
  j["constants"] = {{"c", kCodata.c}, {"hbar", kCodata.hbar}, {"kB", kCodata.kB}};
  j["tolerances"] = {
      {"effective_frequency_rel_tol", 1e-10},
      {"effective_frequency_max_iter", 1000},
      {"lyapunov_solver", "direct, 10 unknowns"},
      {"elimination_cross_check", result.options.verify_solvers},
      {"physicality_tol", 1e-9},
      {"threshold_bisection_rel_tol", 1e-6},
      {"threshold_bisection_max_iter", 40},
  };

  std::size_t failures = 0;
  for (const auto& r : result.rows) failures += r.error.empty() ? 0 : 1;
  j["rows"] = result.rows.size();
  j["failed_rows"] = failures;
  return j.dump(2) + "\n";
}

RenderedFiles render_outputs(const SweepResult& result, const std::string& prefix) {
  RenderedFiles files{prefix + ".csv", prefix + ".svg", prefix + ".provenance.json"};
  write_file(files.csv, sweep_csv(result));
  write_file(files.svg, sweep_svg(result));
  write_file(files.provenance, sweep_provenance(result));
  return files;
}

}  // namespace rotent
