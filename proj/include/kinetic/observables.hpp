#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "kinetic/grid.hpp"

namespace kinetic {

using Mat3 = std::array<std::array<double, 3>, 3>;

/// Moments of f at one instant (Boltzmann constant k = 1, d = 3).
struct MomentSet {
  double t = 0.0;
  double rho = 0.0;
  Vec3 m{};       // momentum  int v f
  Vec3 V{};       // bulk velocity m / rho
  Mat3 M{};       // momentum flow  int v v^T f
  Vec3 r{};       // energy flow  (1 / 2 rho) int v |v|^2 f
  double E = 0.0; // internal energy (tr M - rho |V|^2) / (2 rho)
  double T = 0.0; // 2 E / 3
  double min_f = 0.0;
  double corr_norm = 0.0;          // |f - f~|_inf of the last projection
  double stationarity_norm = 0.0;  // |Lambda rhs(f)|_inf
  bool valid = false;              // rho > 0

  /// Kinetic energy per unit mass (1 / 2 rho) int |v|^2 f.
  double kinetic_energy() const { return 0.5 * (M[0][0] + M[1][1] + M[2][2]) / rho; }
};

MomentSet compute_moments(const VelocityField& f, std::span<const double> weights, double t);

/// exp(q mu t) sum_j w_j f_j |v_j|^{2q}: the |v|^{2q} moment in the
/// self-similar frame f = exp(3 mu t / 2) F(v exp(mu t / 2)).
double rescaled_moment(const VelocityField& f, std::span<const double> weights, double q, double t,
                       double mu = 2.0 / 3.0);

enum class Axis { kX = 0, kY = 1, kZ = 2 };

/// Profile of f along the grid line through the center node (index N/2 on
/// the other two axes): pairs (v, f).
std::vector<std::pair<double, double>> axis_slice(const VelocityField& f, Axis axis);

struct SelfSimilarScaling {
  std::vector<double> speeds;  // |v| exp(mu t / 2)
  double amplitude = 1.0;      // exp(3 mu t / 2)
};

/// Self-similar variables for f(v, t) = exp(3 mu t / 2) F(|v| exp(mu t / 2)):
/// a sample of f at physical speed |v| is F at |v| exp(mu t / 2), scaled down
/// by the amplitude exp(3 mu t / 2).
SelfSimilarScaling self_similar_rescale_points(std::span<const double> speeds, double t, double mu = 2.0 / 3.0);

}  // namespace kinetic
