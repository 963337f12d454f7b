#pragma once

#include <vector>

#include "kinetic/grid.hpp"
#include "kinetic/observables.hpp"

namespace kinetic {

/// t0 = 6 ln(5/2), the first time at which the BKW solution is non-negative.
double bkw_start_time();

/// Bobylev-Krook-Wu solution of the elastic Maxwell-molecule equation,
/// K = 1 - exp(-t/6):
///   f = exp(-|v|^2 / (2 K eta^2)) / (2 (2 pi K eta^2)^{3/2})
///       * ((5K - 3)/K + (1 - K)/K^2 |v|^2 / eta^2)
/// Requires t >= t0.
double bkw_exact(const Vec3& v, double t, double eta = 1.0);

struct SecondMoments {
  Mat3 M{};
  Vec3 r{};
};

/// Closed-form momentum and energy flows for the elastic Maxwell problem
/// started from 0.5 M_1(v - (-2, 2, 0)) + 0.5 M_1(v - (2, 0, 0)).
SecondMoments maxwell_second_moment_exact(double t);

struct MomentRecursionOptions {
  int max_order = 6;
  double tolerance = 1e-10;  // relative self-convergence under grid doubling
  int initial_intervals = 64;
  int max_intervals = 1 << 16;
};

/// Decay rate lambda_n of the isotropic moment recursion.
double moment_decay_rate(int n, double beta);
/// B_beta(k, n - k) = beta^{2k} int_0^1 s^k (1 - beta (2 - beta) s)^{n-k} ds
double moment_coupling(int k, int n, double beta);

/// Isotropic Maxwell-molecule moments m_n(t) = int |v|^{2n} f. `initial`
/// holds m_0(0) .. m_n(0) (m_0 = 1). The time convolution is integrated on a
/// uniform grid that is refined until the result settles.
double maxwell_moment_recursion(int n, double t, const std::vector<double>& initial, double beta,
                                const MomentRecursionOptions& options = {});

/// Kinetic energy per unit mass for inelastic Maxwell molecules,
///   K(t) = K0 exp(-beta (1 - beta) t) + |V|^2 / 2 (1 - exp(-beta (1 - beta) t)).
double inelastic_energy_exact(double t, double beta, double K0, const Vec3& V);

/// Temperature under a heat bath of strength eta,
///   T(t) = T0 exp(-rate t) + T_inf (1 - exp(-rate t)),
///   rate = zeta pi C0 (1 - e^2), T_inf = 2 eta / rate.
/// For e = 1 there is no equilibrium and T0 + 2 eta t is returned.
double diffusion_temperature_exact(double t, double eta, double zeta, double C0, double e, double T0);
double diffusion_temperature_limit(double eta, double zeta, double C0, double e);

/// Slow-down solution in physical variables,
///   f(v, t) = (4/pi) int_0^inf M_Tbar(v) / (1 + s^2)^2 ds,
///   Tbar = T + a s^2 exp(-2t/3).
/// Evaluated in u = ln s with composite Gauss-Legendre panels
/// doubled until the relative change is below 1e-10. T = 0 requires |v| > 0.
double self_similar_F(double speed, double T, double a = 1.0, double t = 0.0);

struct ColdAsymptotics {
  double small = 0.0;  // sqrt(2) / pi^{5/2} |v|^{-2} (1 + 2 |v|^2 ln|v|)
  double large = 0.0;  // 2 (2/pi)^{5/2} |v|^{-6}
};
ColdAsymptotics cold_asymptotics(double speed);

}  // namespace kinetic
