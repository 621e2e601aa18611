#include "rotent/errors.hpp"
#include "rotent/params.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace rotent;

TEST_CASE("reference parameters validate") {
  const auto p = reference_parameters();
  CHECK(validate_parameters(p) == p);
}

TEST_CASE("validation names the offending field") {
  auto p = reference_parameters();
  p.M = 0;
  try {
    validate_parameters(p);
    FAIL("expected ParameterError");
  } catch (const ParameterError& e) {
    CHECK(e.field() == "M");
  }

  p = reference_parameters();
  p.T = -1;
  CHECK_THROWS_AS(validate_parameters(p), ParameterError);

  p = reference_parameters();
  p.l = 2.5;
  try {
    validate_parameters(p);
    FAIL("expected ParameterError");
  } catch (const ParameterError& e) {
    CHECK(e.field() == "l");
  }

  p = reference_parameters();
  p.P_in = -1e-3;
  CHECK_THROWS_AS(validate_parameters(p), ParameterError);
  p = reference_parameters();
  p.finesse = std::nan("");
  CHECK_THROWS_AS(validate_parameters(p), ParameterError);
}

TEST_CASE("zero temperature and zero power are legal") {
  auto p = reference_parameters();
  p.T = 0;
  p.P_in = 0;
  p.l = 0;
  CHECK_NOTHROW(validate_parameters(p));
}

TEST_CASE("derived quantities at the reference point") {
  const auto d = derive_quantities(reference_parameters());
  // 1e-10 kg * (1e-5 m)^2 / 2
  CHECK(d.I == doctest::Approx(5e-21).epsilon(1e-14));
  // (c l / L) sqrt(hbar / (I omega_phi)), evaluated independently
  CHECK(d.g == doctest::Approx(549.2674295328044).epsilon(1e-12));
  CHECK(d.gamma_phi == doctest::Approx(10 * std::numbers::pi).epsilon(1e-14));
  CHECK(d.gamma == doctest::Approx(188365156.73088533).epsilon(1e-12));
  CHECK(d.D_phi == doctest::Approx(d.gamma_phi * d.I).epsilon(1e-15));
  CHECK(d.xi_phi == doctest::Approx(kCodata.c * 100 * kCodata.hbar / 1e-3).epsilon(1e-15));
  CHECK(d.photon_flux * kCodata.hbar * d.omega_c == doctest::Approx(0.05).epsilon(1e-14));
}

TEST_CASE("no optical charge means no coupling") {
  auto p = reference_parameters();
  p.l = 0;
  const auto d = derive_quantities(p);
  CHECK(d.g == 0);
  CHECK(d.xi_phi == 0);
}

TEST_CASE("derived quantity identities on random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  auto jitter = [&](double x) { return x * std::pow(10.0, u(rng)); };
  for (int n = 0; n < 500; ++n) {
    ParameterSet p;
    p.L = jitter(p.L);
    p.lambda = jitter(p.lambda);
    p.omega_phi = jitter(p.omega_phi);
    p.M = jitter(p.M);
    p.R = jitter(p.R);
    p.Q_phi = jitter(p.Q_phi);
    p.finesse = jitter(p.finesse);
    p.l = std::round(jitter(50));
    p.P_in = jitter(p.P_in);
    const auto d = derive_quantities(validate_parameters(p));
    const double c = kCodata.c;

    CHECK(d.I == p.M * p.R * p.R / 2);
    CHECK(d.gamma_phi == p.omega_phi / p.Q_phi);
    CHECK(d.g * std::sqrt(d.I * p.omega_phi / kCodata.hbar) ==
          doctest::Approx(c * p.l / p.L).epsilon(1e-12));
    CHECK(d.gamma * p.L * p.finesse / (std::numbers::pi * c) == doctest::Approx(1.0).epsilon(1e-12));

    // doubling the mass doubles I and scales g by 1/sqrt(2), nothing else moves
    ParameterSet heavy = p;
    heavy.M *= 2;
    const auto h = derive_quantities(heavy);
    CHECK(h.I == doctest::Approx(2 * d.I).epsilon(1e-15));
    CHECK(h.g == doctest::Approx(d.g / std::numbers::sqrt2).epsilon(1e-14));
    CHECK(h.gamma == d.gamma);
    CHECK(h.gamma_phi == d.gamma_phi);
    CHECK(h.photon_flux == d.photon_flux);
    CHECK(h.xi_phi == d.xi_phi);
  }
}
