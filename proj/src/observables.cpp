#include "kinetic/observables.hpp"

#include <algorithm>
#include <cmath>

#include "kinetic/error.hpp"

namespace kinetic {

MomentSet compute_moments(const VelocityField& f, std::span<const double> weights, double t) {
  if (weights.size() != f.size()) throw ValidationError("weights do not match the field");
  MomentSet s;
  s.t = t;
  const auto& vg = f.grid().velocity;
  double flow[3] = {0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double wf = weights[j] * f[j];
    const Vec3 v = vg.point(j);
    const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    s.rho += wf;
    for (int a = 0; a < 3; ++a) {
      s.m[a] += v[a] * wf;
      flow[a] += v[a] * v2 * wf;
      for (int b = a; b < 3; ++b) s.M[a][b] += v[a] * v[b] * wf;
    }
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < a; ++b) s.M[a][b] = s.M[b][a];
  s.min_f = f.min();
  s.valid = s.rho > 0.0 && std::isfinite(s.rho);
  if (!s.valid) return s;
  double v2 = 0.0;
  for (int a = 0; a < 3; ++a) {
    s.V[a] = s.m[a] / s.rho;
    s.r[a] = flow[a] / (2.0 * s.rho);
    v2 += s.V[a] * s.V[a];
  }
  s.E = (s.M[0][0] + s.M[1][1] + s.M[2][2] - s.rho * v2) / (2.0 * s.rho);
  s.T = 2.0 * s.E / 3.0;
  return s;
}

double rescaled_moment(const VelocityField& f, std::span<const double> weights, double q, double t, double mu) {
  if (!(q >= 0.0)) throw ValidationError("moment order q must be non-negative");
  if (weights.size() != f.size()) throw ValidationError("weights do not match the field");
  const auto& vg = f.grid().velocity;
  double acc = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const Vec3 v = vg.point(j);
    const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    acc += weights[j] * f[j] * (q == 0.0 ? 1.0 : std::pow(v2, q));
  }
  return std::exp(q * mu * t) * acc;
}

std::vector<std::pair<double, double>> axis_slice(const VelocityField& f, Axis axis) {
  const int n = f.grid().n();
  const int c = n / 2;
  std::vector<std::pair<double, double>> out;
  out.reserve(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    std::size_t idx = 0;
    switch (axis) {
      case Axis::kX: idx = flat_index(n, i, c, c); break;
      case Axis::kY: idx = flat_index(n, c, i, c); break;
      case Axis::kZ: idx = flat_index(n, c, c, i); break;
    }
    out.emplace_back(f.grid().velocity.node(i), f[idx]);
  }
  return out;
}

SelfSimilarScaling self_similar_rescale_points(std::span<const double> speeds, double t, double mu) {
  SelfSimilarScaling s;
  const double stretch = std::exp(0.5 * mu * t);
  s.amplitude = std::exp(1.5 * mu * t);
  s.speeds.reserve(speeds.size());
  for (double v : speeds) s.speeds.push_back(v * stretch);
  return s;
}

}  // namespace kinetic
