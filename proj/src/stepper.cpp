#include "kinetic/stepper.hpp"

#include <algorithm>
#include <cmath>

#include "kinetic/error.hpp"

namespace kinetic {

namespace {

void check_dt(double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("time step must be positive and finite");
}

void check_finite(const VelocityField& f, double t, const char* stage) {
  if (!f.all_finite()) {
    throw NumericalError(std::string("non-finite distribution after ") + stage + " at t = " + std::to_string(t));
  }
}

// Projects `x` in place and records the correction size.
void project_stage(const ConstraintSystem* sys, VelocityField& x, StepInfo* info) {
  if (sys == nullptr) return;
  VelocityField p = project(*sys, x);
  double corr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) corr = std::max(corr, std::abs(p[i] - x[i]));
  x = std::move(p);
  if (info != nullptr) {
    info->corr_norm = std::max(info->corr_norm, corr);
    info->residual = std::max(info->residual, sys->residual(x.values()));
  }
}

void record_stationarity(const ConstraintSystem* sys, const VelocityField& q, StepInfo* info) {
  if (info == nullptr) return;
  info->stationarity_norm = sys == nullptr ? q.max_abs() : tangent(*sys, q).max_abs();
}

}  // namespace

Integrator parse_integrator(const std::string& name) {
  if (name == "euler") return Integrator::kEuler;
  if (name == "rk2") return Integrator::kRk2;
  throw ValidationError("unknown integrator '" + name + "' (expected euler or rk2)");
}

std::string to_string(Integrator integrator) { return integrator == Integrator::kEuler ? "euler" : "rk2"; }

VelocityField step_euler(const VelocityField& f, double t, double dt, const Rhs& rhs, const ConstraintSystem* sys,
                         StepInfo* info) {
  check_dt(dt);
  if (info != nullptr) *info = StepInfo{};
  const VelocityField q = rhs(f, t);
  record_stationarity(sys, q, info);
  VelocityField next = f;
  next.add_scaled(dt, q);
  check_finite(next, t + dt, "Euler update");
  project_stage(sys, next, info);
  return next;
}

VelocityField step_rk2(const VelocityField& f, double t, double dt, const Rhs& rhs, const ConstraintSystem* sys,
                       StepInfo* info) {
  check_dt(dt);
  if (info != nullptr) *info = StepInfo{};
  const VelocityField q0 = rhs(f, t);
  record_stationarity(sys, q0, info);
  VelocityField mid = f;
  mid.add_scaled(0.5 * dt, q0);
  check_finite(mid, t + 0.5 * dt, "RK2 half step");
  project_stage(sys, mid, info);
  const VelocityField q1 = rhs(mid, t + 0.5 * dt);
  VelocityField next = f;
  next.add_scaled(dt, q1);
  check_finite(next, t + dt, "RK2 full step");
  project_stage(sys, next, info);
  return next;
}

VelocityField step(Integrator integrator, const VelocityField& f, double t, double dt, const Rhs& rhs,
                   const ConstraintSystem* sys, StepInfo* info) {
  return integrator == Integrator::kEuler ? step_euler(f, t, dt, rhs, sys, info)
                                          : step_rk2(f, t, dt, rhs, sys, info);
}

}  // namespace kinetic
