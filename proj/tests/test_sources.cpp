#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "kinetic/collision.hpp"
#include "kinetic/error.hpp"
#include "kinetic/sources.hpp"
#include "kinetic/transform.hpp"
#include "oracles/oracles.hpp"

using namespace kinetic;

namespace {

oracle::V3 ov(const Vec3& v) { return {v[0], v[1], v[2]}; }

double max_diff(const VelocityField& a, const VelocityField& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

VelocityField bimodal(const DualGrid& g) {
  return sample(g, [](const Vec3& v) {
    return 0.5 * oracle::maxwellian(ov(v), {-1, 0.5, 0}, 0.8) + 0.5 * oracle::maxwellian(ov(v), {1, 0, 0}, 0.8);
  });
}

}  // namespace

TEST_CASE("diffusion is the Laplacian") {
  const DualGrid g = build_grids(24, 8.0);
  const double T = 1.3, mu = 0.2;
  const VelocityField m = sample(g, [&](const Vec3& v) { return oracle::maxwellian(ov(v), {0, 0, 0}, T); });
  const VelocityField lap = from_fourier(apply_diffusion(to_fourier(m), mu));
  const VelocityField exact = sample(g, [&](const Vec3& v) {
    const double r2 = oracle::dot(ov(v), ov(v));
    return mu * oracle::maxwellian(ov(v), {0, 0, 0}, T) * (r2 / (T * T) - 3.0 / T);
  });
  // spectral truncation at |zeta| = N pi / 2L bounds the error
  CHECK(max_diff(lap, exact) <= 1e-6 * exact.max_abs());
}

TEST_CASE("thermostat transform") {
  const DualGrid g = build_grids(16, 6.0);
  for (double T : {1.0, 0.1, 0.0}) {
    const SpectralField mh = thermostat_transform(g, T);
    double err = 0.0;
    for (std::size_t k = 0; k < mh.size(); ++k)
      err = std::max(err, std::abs(mh[k] - oracle::maxwellian_transform(ov(g.spectral.point(k)), {0, 0, 0}, T)));
    // aliasing from the first periodic image of the Gaussian
    const double alias = 2.0 * std::pow(2.0 * oracle::kPi, -1.5) *
                         std::exp(-0.5 * T * std::pow(oracle::kPi / g.velocity.spacing, 2));
    CHECK(err <= alias + 1e-12);
  }
  CHECK_THROWS_AS(thermostat_transform(g, -1.0), ValidationError);
}

TEST_CASE("thermostat Maxwellian is its own fixed point") {
  const DualGrid g = build_grids(24, 8.0);
  const KernelCache c = KernelCache::build(KernelSpec{}, g);
  ThermostatSchedule s;
  s.T0 = 1.5;
  const VelocityField m = sample(g, [&](const Vec3& v) { return oracle::maxwellian(ov(v), {0, 0, 0}, 1.5); });
  CHECK(thermostat_operator(m, s, 0.0, c).max_abs() <= 1e-5 * m.max_abs());
  KernelSpec hard;
  hard.lambda = 1.0;
  CHECK_THROWS_AS(thermostat_operator(m, s, 0.0, KernelCache::build(hard, g)), ValidationError);
}

TEST_CASE("schedule values") {
  ThermostatSchedule s;
  s.T0 = 2.0;
  CHECK(s.value(5.0) == 2.0);
  s.kind = ThermostatSchedule::Kind::kDecaying;
  s.alpha = 0.5;
  CHECK(s.value(2.0) == doctest::Approx(2.0 * std::exp(-1.0)));
  s.alpha = 0.0;
  CHECK_THROWS_AS(s.validate(), ValidationError);
}

TEST_CASE("fused right-hand side equals the sum of its parts") {
  const DualGrid g = build_grids(12, 5.0);
  const KernelCache c = KernelCache::build(KernelSpec{}, g);
  const VelocityField f = bimodal(g);

  SourceSpec src;
  src.kind = SourceSpec::Kind::kThermostat;
  src.theta = 4.0 / 3.0;
  src.schedule.T0 = 0.7;
  src.zeta_prefactor = 0.5;
  const RightHandSide rhs(c, src);
  const VelocityField parts =
      0.5 * collide(f, f, c) + (4.0 / 3.0) * thermostat_operator(f, src.schedule, 0.0, c);
  CHECK(max_diff(rhs(f, 0.0), parts) <= 1e-12 * parts.max_abs());

  SourceSpec diff;
  diff.kind = SourceSpec::Kind::kDiffusion;
  diff.mu_diff = 0.1;
  KernelSpec inel;
  inel.e = 0.5;
  const KernelCache ci = KernelCache::build(inel, g);
  const RightHandSide rhs2(ci, diff);
  const VelocityField parts2 = collide(f, f, ci) + from_fourier(apply_diffusion(to_fourier(f), 0.1));
  CHECK(max_diff(rhs2(f, 0.0), parts2) <= 1e-12 * parts2.max_abs());
}

TEST_CASE("separate thermostat kernel") {
  const DualGrid g = build_grids(10, 5.0);
  KernelSpec hard;
  hard.lambda = 1.0;
  const KernelCache ch = KernelCache::build(hard, g), cm = KernelCache::build(KernelSpec{}, g);
  const VelocityField f = bimodal(g);
  SourceSpec src;
  src.kind = SourceSpec::Kind::kThermostat;
  src.theta = 1.0;
  src.schedule.T0 = 1.0;
  const RightHandSide rhs(ch, src, cm);
  const VelocityField parts = collide(f, f, ch) + thermostat_operator(f, src.schedule, 0.3, cm);
  CHECK(max_diff(rhs(f, 0.3), parts) <= 1e-12 * parts.max_abs());
}

TEST_CASE("source parsing and validation") {
  CHECK(parse_source_kind("diffusion") == SourceSpec::Kind::kDiffusion);
  CHECK(to_string(SourceSpec::Kind::kThermostat) == "thermostat");
  CHECK_THROWS_AS(parse_source_kind("heat"), ValidationError);
  SourceSpec s;
  s.kind = SourceSpec::Kind::kDiffusion;
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s.mu_diff = 0.1;
  CHECK_NOTHROW(s.validate());
}
