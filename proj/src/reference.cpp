#include "kinetic/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "kinetic/error.hpp"
#include "kinetic/quadrature.hpp"

namespace kinetic {

namespace {

constexpr double kPi = std::numbers::pi;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Weights of a cumulative rule on [0, i h] using grid values 0..i (and 0..2
// when i = 1).
void cumulative_weights(int i, double h, std::vector<double>& w) {
  w.assign(std::size_t(std::max(i, 2)) + 1, 0.0);
  if (i == 0) return;
  if (i == 1) {
    // Quadratic through nodes 0, 1, 2 integrated over [0, h].
    w[0] = 5.0 / 12.0 * h;
    w[1] = 8.0 / 12.0 * h;
    w[2] = -1.0 / 12.0 * h;
    return;
  }
  int simpson_end = i;
  if (i % 2 == 1) {
    simpson_end = i - 3;
    const double c = 3.0 * h / 8.0;
    w[std::size_t(i - 3)] += c;
    w[std::size_t(i - 2)] += 3.0 * c;
    w[std::size_t(i - 1)] += 3.0 * c;
    w[std::size_t(i)] += c;
  }
  for (int k = 0; k + 2 <= simpson_end; k += 2) {
    w[std::size_t(k)] += h / 3.0;
    w[std::size_t(k + 1)] += 4.0 * h / 3.0;
    w[std::size_t(k + 2)] += h / 3.0;
  }
}

// All orders 0..n on a uniform grid of `intervals` steps over [0, t].
double recursion_on_grid(int n, double t, const std::vector<double>& initial, double beta, int intervals) {
  const double h = t / intervals;
  std::vector<std::vector<double>> m(std::size_t(n) + 1, std::vector<double>(std::size_t(intervals) + 1));
  std::fill(m[0].begin(), m[0].end(), initial[0]);
  std::vector<double> w, integrand(std::size_t(intervals) + 1);
  for (int order = 1; order <= n; ++order) {
    const double lam = moment_decay_rate(order, beta);
    for (int k = 0; k <= intervals; ++k) integrand[std::size_t(k)] = 0.0;
    for (int k = 1; k <= order - 1; ++k) {
      const double c = binomial(2 * order + 2, 2 * k + 1) / (2.0 * (order + 1)) * moment_coupling(k, order, beta);
      for (int j = 0; j <= intervals; ++j)
        integrand[std::size_t(j)] += c * m[std::size_t(k)][std::size_t(j)] * m[std::size_t(order - k)][std::size_t(j)];
    }
    for (int i = 0; i <= intervals; ++i) {
      const double ti = i * h;
      double conv = 0.0;
      if (order > 1 && i > 0) {
        cumulative_weights(i, h, w);
        for (std::size_t j = 0; j < w.size(); ++j)
          conv += w[j] * integrand[j] * std::exp(-lam * (ti - double(j) * h));
      }
      m[std::size_t(order)][std::size_t(i)] = std::exp(-lam * ti) * initial[std::size_t(order)] + conv;
    }
  }
  return m[std::size_t(n)].back();
}

}  // namespace

double bkw_start_time() { return 6.0 * std::log(2.5); }

double bkw_exact(const Vec3& v, double t, double eta) {
  if (t < bkw_start_time() - 1e-12) throw ValidationError("the BKW solution is only valid for t >= 6 ln(5/2)");
  if (!(eta > 0.0)) throw ValidationError("BKW temperature parameter must be positive");
  const double K = 1.0 - std::exp(-t / 6.0);
  const double e2 = eta * eta;
  const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  const double gauss = std::exp(-v2 / (2.0 * K * e2)) / (2.0 * std::pow(2.0 * kPi * K * e2, 1.5));
  return gauss * ((5.0 * K - 3.0) / K + (1.0 - K) / (K * K) * v2 / e2);
}

SecondMoments maxwell_second_moment_exact(double t) {
  const Mat3 m0{{{5.0, -2.0, 0.0}, {-2.0, 3.0, 0.0}, {0.0, 0.0, 1.0}}};
  const double minf[3] = {8.0 / 3.0, 11.0 / 3.0, 8.0 / 3.0};
  const double a = std::exp(-t / 2.0), b = std::exp(-t / 3.0);
  SecondMoments s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s.M[i][j] = m0[i][j] * a + (i == j ? minf[i] : 0.0) * (1.0 - a);
  const double r0[3] = {-4.0 / 2.0, 13.0 / 2.0, 0.0};
  const double rinf[3] = {0.0, 43.0 / 6.0, 0.0};
  const double rmix[3] = {12.0 / 6.0, 4.0 / 6.0, 0.0};
  for (int i = 0; i < 3; ++i) s.r[i] = r0[i] * b + rinf[i] * (1.0 - b) - rmix[i] * (a - b);
  return s;
}

double moment_decay_rate(int n, double beta) {
  double s = std::pow(beta, 2 * n);
  for (int k = 0; k <= n; ++k) s += std::pow(1.0 - beta, 2 * k);
  return 1.0 - s / (n + 1);
}

double moment_coupling(int k, int n, double beta) {
  // Expand (1 - c s)^{n-k} and integrate term by term.
  const double c = beta * (2.0 - beta);
  double acc = 0.0;
  for (int j = 0; j <= n - k; ++j) acc += binomial(n - k, j) * std::pow(-c, j) / (k + j + 1);
  return std::pow(beta, 2 * k) * acc;
}

double maxwell_moment_recursion(int n, double t, const std::vector<double>& initial, double beta,
                                const MomentRecursionOptions& options) {
  if (n < 0 || n > options.max_order) {
    throw ValidationError("moment order must lie in [0, " + std::to_string(options.max_order) + "]");
  }
  if (initial.size() < std::size_t(n) + 1) throw ValidationError("initial moments m_0 .. m_n are required");
  if (n == 0) return initial[0];
  if (t == 0.0) return initial[std::size_t(n)];
  double previous = recursion_on_grid(n, t, initial, beta, options.initial_intervals);
  for (int m = 2 * options.initial_intervals; m <= options.max_intervals; m *= 2) {
    const double current = recursion_on_grid(n, t, initial, beta, m);
    if (std::abs(current - previous) <= options.tolerance * std::abs(current)) return current;
    previous = current;
  }
  throw NumericalError("moment recursion did not converge");
}

double inelastic_energy_exact(double t, double beta, double K0, const Vec3& V) {
  const double decay = std::exp(-beta * (1.0 - beta) * t);
  const double v2 = V[0] * V[0] + V[1] * V[1] + V[2] * V[2];
  return K0 * decay + 0.5 * v2 * (1.0 - decay);
}

double diffusion_temperature_limit(double eta, double zeta, double C0, double e) {
  if (e >= 1.0) return std::numeric_limits<double>::infinity();
  return 2.0 * eta / (zeta * kPi * C0 * (1.0 - e * e));
}

double diffusion_temperature_exact(double t, double eta, double zeta, double C0, double e, double T0) {
  if (!(e >= 0.0 && e <= 1.0)) throw ValidationError("restitution coefficient must lie in [0, 1]");
  if (e == 1.0) return T0 + 2.0 * eta * t;
  if (!(zeta > 0.0 && C0 > 0.0)) throw ValidationError("collision prefactor and C0 must be positive");
  const double rate = zeta * kPi * C0 * (1.0 - e * e);
  const double decay = std::exp(-rate * t);
  return T0 * decay + 2.0 * eta / rate * (1.0 - decay);
}

double self_similar_F(double speed, double T, double a, double t) {
  if (!(T >= 0.0)) throw ValidationError("thermostat temperature must be non-negative");
  if (T == 0.0 && speed == 0.0) throw ValidationError("the cold self-similar profile is singular at the origin");
  const double spread = a * std::exp(-2.0 * t / 3.0);
  const double v2 = speed * speed;
  auto maxwell = [&](double tbar) { return std::exp(-v2 / (2.0 * tbar)) / std::pow(2.0 * kPi * tbar, 1.5); };
  if (spread == 0.0) return maxwell(T);
  // In u = ln s the integrand has O(1) features at the scales 1, |v| / sqrt(a)
  // and sqrt(T / a), and decays at least like e^u below and e^{-6u} above.
  double lo = 0.0, hi = 0.0;
  for (double scale : {1.0, speed / std::sqrt(spread), std::sqrt(T / spread)}) {
    if (!(scale > 0.0)) continue;
    lo = std::min(lo, std::log(scale));
    hi = std::max(hi, std::log(scale));
  }
  lo -= 40.0;
  hi += 12.0;
  auto integrand = [&](double u) {
    const double s = std::exp(u);
    const double tbar = T + spread * s * s;
    if (tbar <= 0.0) return 0.0;
    return s * maxwell(tbar) / ((1.0 + s * s) * (1.0 + s * s));
  };
  auto evaluate = [&](int panels) {
    const QuadratureRule rule = composite_gauss_legendre(panels, 16, lo, hi);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * integrand(rule.nodes[i]);
    return 4.0 / kPi * acc;
  };
  double previous = evaluate(16);
  for (int panels = 32; panels <= (1 << 14); panels *= 2) {
    const double current = evaluate(panels);
    if (std::abs(current - previous) <= 1e-10 * std::abs(current)) return current;
    previous = current;
  }
  throw NumericalError("self-similar profile quadrature did not converge");
}

ColdAsymptotics cold_asymptotics(double speed) {
  if (!(speed > 0.0)) throw ValidationError("speed must be positive");
  ColdAsymptotics c;
  c.large = 2.0 * std::pow(2.0 / kPi, 2.5) / std::pow(speed, 6);
  c.small = std::sqrt(2.0) / std::pow(kPi, 2.5) / (speed * speed) * (1.0 + 2.0 * speed * speed * std::log(speed));
  return c;
}

}  // namespace kinetic
