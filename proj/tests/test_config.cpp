#include "rotent/config.hpp"
#include "rotent/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

using namespace rotent;

namespace {

ConfigError config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("expected ConfigError for: " << text);
  return ConfigError("", 0, "");
}

}  // namespace

TEST_CASE("empty document yields reference parameters") {
  CHECK(parse_config("").params == reference_parameters());
  CHECK(parse_config("# nothing here\n\n[physical]\n").params == reference_parameters());
  CHECK_FALSE(parse_config("").sweep.has_value());
}

TEST_CASE("physical keys override defaults") {
  const auto cfg = parse_config("T = 10\nl = 30   # charge\n[physical]\nP_in=0.02\n");
  CHECK(cfg.params.T == 10);
  CHECK(cfg.params.l == 30);
  CHECK(cfg.params.P_in == 0.02);
  CHECK(cfg.params.M == reference_parameters().M);
}

TEST_CASE("errors carry key and line") {
  auto e = config_error("T = 1\nmass = -1\n");
  CHECK(e.key() == "mass");
  CHECK(e.line() == 2);

  e = config_error("\n\nM = -1\n");
  CHECK(e.key() == "M");
  CHECK(e.line() == 3);

  e = config_error("T = cold\n");
  CHECK(e.key() == "T");

  e = config_error("T = 1\nT = 2\n");
  CHECK(e.line() == 2);

  e = config_error("L 1e-3\n");
  CHECK(e.line() == 1);

  e = config_error("[plots]\n");
  CHECK(e.key() == "plots");

  e = config_error("l = 2.5\n");
  CHECK(e.key() == "l");

  e = config_error("[sweep]\naxis = spin\nmin = 1\nmax = 2\npoints = 3\n");
  CHECK(e.key() == "axis");
  CHECK(e.line() == 2);

  e = config_error("[sweep]\naxis = temperature\nmin = -1\nmax = 2\npoints = 3\n");
  CHECK(std::string(e.what()).find("T") != std::string::npos);

  e = config_error("[sweep]\naxis = mass\nmin = 1e-10\n");
  CHECK(e.line() == 1);

  e = config_error("[sweep]\naxis = mass\nmin = 1\nmax = 2\npoints = 2.5\n");
  CHECK(e.key() == "points");

  e = config_error("[sweep]\naxis = mass\nbogus = 1\n");
  CHECK(e.key() == "bogus");
}

TEST_CASE("sweep section") {
  const auto cfg = parse_config(
      "T = 10\n[sweep]\naxis = angular_momentum\nmin = 1\nmax = 200\npoints = 200\n");
  REQUIRE(cfg.sweep);
  CHECK(cfg.sweep->axis == SweepAxis::angular_momentum);
  CHECK(cfg.sweep->axis_values().size() == 200);
  CHECK(cfg.sweep->base.T == 10);

  const auto listed = parse_config("[sweep]\naxis = temperature\nvalues = 0.1, 1, 10\n");
  CHECK(listed.sweep->axis_values() == std::vector<double>{0.1, 1, 10});

  const auto logscale =
      parse_config("[sweep]\naxis = temperature\nmin = 1e-3\nmax = 1e3\npoints = 7\nscale = log\n");
  const auto grid = logscale.sweep->axis_values();
  REQUIRE(grid.size() == 7);
  CHECK(grid[3] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(grid.back() == 1e3);
}

TEST_CASE("serialize and parse round-trip") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  for (int n = 0; n < 200; ++n) {
    Config c;
    c.params.L *= u(rng);
    c.params.lambda *= u(rng);
    c.params.omega_phi *= u(rng);
    c.params.M *= u(rng);
    c.params.R *= u(rng);
    c.params.Q_phi *= u(rng);
    c.params.finesse *= u(rng);
    c.params.l = std::round(100 * u(rng));
    c.params.P_in *= u(rng);
    c.params.Delta *= u(rng) - 1.25;
    c.params.T = 10 * u(rng);
    if (n % 2) {
      SweepSpec s;
      s.axis = SweepAxis::detuning;
      s.min = 0.1 * c.params.omega_phi;
      s.max = 3 * c.params.omega_phi * u(rng);
      s.points = 17;
      s.scale = AxisScale::log;
      s.base = c.params;
      c.sweep = s;
    }
    const auto back = parse_config(serialize_config(c));
    CHECK(back.params == c.params);
    CHECK(back.sweep.has_value() == c.sweep.has_value());
    if (c.sweep) {
      CHECK(back.sweep->axis_values() == c.sweep->axis_values());
      CHECK(serialize_config(back) == serialize_config(c));
    }
  }
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_config("/nonexistent/rotent.cfg"), ConfigError);
}
