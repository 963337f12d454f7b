#pragma once

#include <functional>
#include <string>

#include "kinetic/conserve.hpp"
#include "kinetic/grid.hpp"

namespace kinetic {

/// Right-hand side df/dt = rhs(f, t).
using Rhs = std::function<VelocityField(const VelocityField&, double)>;

enum class Integrator { kEuler, kRk2 };

Integrator parse_integrator(const std::string& name);
std::string to_string(Integrator integrator);

struct StepInfo {
  double corr_norm = 0.0;          // largest |project(x) - x|_inf over the stages
  double stationarity_norm = 0.0;  // |Lambda rhs(f^n)|_inf
  double residual = 0.0;           // largest |C f - a|_inf after projection
};

/// f^{n+1} = project(f^n + dt rhs(f^n, t)). A null `sys` skips projection.
/// Throws NumericalError when the new state is not finite.
VelocityField step_euler(const VelocityField& f, double t, double dt, const Rhs& rhs, const ConstraintSystem* sys,
                         StepInfo* info = nullptr);

/// Midpoint rule, projecting each stage:
///   f~ = project(f^n + dt/2 rhs(f^n, t))
///   f^{n+1} = project(f^n + dt rhs(f~, t + dt/2))
VelocityField step_rk2(const VelocityField& f, double t, double dt, const Rhs& rhs, const ConstraintSystem* sys,
                       StepInfo* info = nullptr);

VelocityField step(Integrator integrator, const VelocityField& f, double t, double dt, const Rhs& rhs,
                   const ConstraintSystem* sys, StepInfo* info = nullptr);

}  // namespace kinetic
