#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kinetic/error.hpp"
#include "kinetic/grid.hpp"
#include "oracles/oracles.hpp"

using namespace kinetic;

TEST_CASE("grid spacing and reciprocity") {
  const DualGrid g = build_grids(16, 8.0);
  CHECK(g.velocity.spacing == doctest::Approx(1.0));
  CHECK(g.spectral.spacing == doctest::Approx(std::numbers::pi / 8.0));
  CHECK(g.velocity.spacing * g.spectral.spacing == doctest::Approx(2.0 * std::numbers::pi / 16.0));
  CHECK(g.velocity.node(0) == -8.0);
  CHECK(g.velocity.node(8) == 0.0);
  CHECK(g.velocity.node(15) == 7.0);
  CHECK(g.spectral.node(0) == doctest::Approx(-std::numbers::pi));
}

TEST_CASE("grid nodes are antisymmetric about the center") {
  const DualGrid g = build_grids(10, 3.7);
  for (int j = 1; j < 10; ++j) CHECK(g.velocity.node(j) == -g.velocity.node(10 - j));
}

TEST_CASE("invalid grids are rejected") {
  CHECK_THROWS_AS(build_grids(7, 1.0), ValidationError);
  CHECK_THROWS_AS(build_grids(2, 1.0), ValidationError);
  CHECK_THROWS_AS(build_grids(8, 0.0), ValidationError);
  CHECK_THROWS_AS(build_grids(8, -1.0), ValidationError);
}

TEST_CASE("row-major layout") {
  const DualGrid g = build_grids(4, 2.0);
  CHECK(flat_index(4, 0, 0, 1) == 1);
  CHECK(flat_index(4, 0, 1, 0) == 4);
  CHECK(flat_index(4, 1, 0, 0) == 16);
  const Vec3 p = g.velocity.point(flat_index(4, 1, 2, 3));
  CHECK(p[0] == g.velocity.node(1));
  CHECK(p[1] == g.velocity.node(2));
  CHECK(p[2] == g.velocity.node(3));
}

TEST_CASE("periodic trapezoid integrates a Maxwellian spectrally") {
  const DualGrid g = build_grids(32, 8.0);
  const auto w = quadrature_weights(g.velocity, WeightRule::kPeriodicTrapezoid);
  const VelocityField f = sample(g, [](const Vec3& v) { return oracle::maxwellian({v[0], v[1], v[2]}, {0.3, -0.2, 0.1}, 1.0); });
  CHECK(integrate(w, f) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("left-half weights halve the first plane") {
  const DualGrid g = build_grids(4, 2.0);
  const auto w = quadrature_weights(g.velocity, WeightRule::kLeftHalfTrapezoid);
  const double h3 = std::pow(g.velocity.spacing, 3);
  CHECK(w[flat_index(4, 1, 1, 1)] == doctest::Approx(h3));
  CHECK(w[flat_index(4, 0, 1, 1)] == doctest::Approx(0.5 * h3));
  CHECK(w[flat_index(4, 0, 0, 0)] == doctest::Approx(0.125 * h3));
}

TEST_CASE("field arithmetic and grid mismatch") {
  const DualGrid a = build_grids(4, 1.0), b = build_grids(4, 2.0);
  VelocityField x(a, 1.0), y(a, 2.0), z(b, 1.0);
  x += y;
  CHECK(x[5] == 3.0);
  x.add_scaled(-0.5, y);
  CHECK(x[5] == 2.0);
  CHECK_THROWS_AS(x += z, ValidationError);
}

TEST_CASE("sampling a non-finite density fails") {
  const DualGrid g = build_grids(4, 1.0);
  CHECK_THROWS_AS(sample(g, [](const Vec3&) { return std::nan(""); }), NumericalError);
}
