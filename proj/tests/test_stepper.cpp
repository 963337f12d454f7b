#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "kinetic/error.hpp"
#include "kinetic/stepper.hpp"

using namespace kinetic;

namespace {

const DualGrid kGrid = build_grids(4, 1.0);

double one_step_error(Integrator method, double dt) {
  const Rhs decay = [](const VelocityField& f, double) { return -1.0 * f; };
  const VelocityField f(kGrid, 1.0);
  return std::abs(step(method, f, 0.0, dt, decay, nullptr)[0] - std::exp(-dt));
}

}  // namespace

TEST_CASE("zero right-hand side leaves the state alone") {
  const Rhs zero = [](const VelocityField& f, double) { return VelocityField(f.grid()); };
  VelocityField f(kGrid);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = 0.01 * double(i);
  for (Integrator m : {Integrator::kEuler, Integrator::kRk2}) {
    const VelocityField g = step(m, f, 0.0, 0.1, zero, nullptr);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(g[i] == f[i]);
  }
}

TEST_CASE("local error orders") {
  const double e1 = one_step_error(Integrator::kEuler, 0.1), e2 = one_step_error(Integrator::kEuler, 0.05);
  CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.05));
  const double r1 = one_step_error(Integrator::kRk2, 0.1), r2 = one_step_error(Integrator::kRk2, 0.05);
  CHECK(std::log2(r1 / r2) == doctest::Approx(3.0).epsilon(0.05));
  CHECK(r1 == doctest::Approx(0.1 * 0.1 * 0.1 / 6.0).epsilon(0.05));
}

TEST_CASE("time argument of the midpoint stage") {
  const Rhs clock = [](const VelocityField& f, double t) { return VelocityField(f.grid(), t); };
  const VelocityField f(kGrid);
  CHECK(step_rk2(f, 1.0, 0.2, clock, nullptr)[0] == doctest::Approx(0.2 * 1.1));
  CHECK(step_euler(f, 1.0, 0.2, clock, nullptr)[0] == doctest::Approx(0.2 * 1.0));
}

TEST_CASE("projection is applied and reported") {
  const auto w = quadrature_weights(kGrid.velocity);
  const VelocityField f(kGrid, 1.0);
  const ConstraintSystem sys = constraints_from_state(w, ConservationMode::kLinear, f);
  const Rhs grow = [](const VelocityField& g, double) { return VelocityField(g.grid(), 1.0); };
  StepInfo info;
  const VelocityField g = step_rk2(f, 0.0, 0.1, grow, &sys, &info);
  CHECK(g[0] == doctest::Approx(1.0));
  CHECK(info.corr_norm == doctest::Approx(0.1));
  CHECK(info.residual <= 1e-14);
  CHECK(info.stationarity_norm <= 1e-14);
}

TEST_CASE("non-finite state and bad steps") {
  const Rhs bad = [](const VelocityField& f, double) {
    return VelocityField(f.grid(), std::numeric_limits<double>::infinity());
  };
  const VelocityField f(kGrid, 1.0);
  CHECK_THROWS_AS(step_euler(f, 0.0, 0.1, bad, nullptr), NumericalError);
  const Rhs zero = [](const VelocityField& g, double) { return VelocityField(g.grid()); };
  CHECK_THROWS_AS(step_rk2(f, 0.0, 0.0, zero, nullptr), ValidationError);
  CHECK(parse_integrator("euler") == Integrator::kEuler);
  CHECK(to_string(Integrator::kRk2) == "rk2");
  CHECK_THROWS_AS(parse_integrator("rk4"), ValidationError);
}
