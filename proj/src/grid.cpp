#include "kinetic/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kinetic/error.hpp"

namespace kinetic {

namespace {

Vec3 lattice_point(int n, double spacing, std::size_t flat) {
  const std::size_t nn = std::size_t(n);
  const int iz = int(flat % nn);
  const int iy = int((flat / nn) % nn);
  const int ix = int(flat / (nn * nn));
  return {(ix - n / 2) * spacing, (iy - n / 2) * spacing, (iz - n / 2) * spacing};
}

void require_same_grid(const DualGrid& a, const DualGrid& b) {
  if (!(a == b)) throw ValidationError("fields live on different grids");
}

}  // namespace

Vec3 VelocityGrid::point(std::size_t flat) const { return lattice_point(n, spacing, flat); }

Vec3 SpectralGrid::point(std::size_t flat) const { return lattice_point(n, spacing, flat); }

DualGrid build_grids(int n, double half_width) {
  if (n < 4 || n % 2 != 0) {
    throw ValidationError("grid.N must be an even integer >= 4, got " + std::to_string(n));
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw ValidationError("grid.L must be positive and finite");
  }
  DualGrid g;
  g.velocity.n = n;
  g.velocity.half_width = half_width;
  g.velocity.spacing = 2.0 * half_width / n;
  g.spectral.n = n;
  // h_zeta = 2 pi / (N h_v) = pi / L
  g.spectral.spacing = std::numbers::pi / half_width;
  g.spectral.half_width = n * g.spectral.spacing / 2.0;
  return g;
}

VelocityField::VelocityField(const DualGrid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid.size()) throw ValidationError("value count does not match N^3");
}

double VelocityField::max_abs() const {
  double m = 0.0;
  for (double x : values_) m = std::max(m, std::abs(x));
  return m;
}

double VelocityField::min() const {
  return values_.empty() ? 0.0 : *std::min_element(values_.begin(), values_.end());
}

bool VelocityField::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return std::isfinite(x); });
}

VelocityField& VelocityField::operator+=(const VelocityField& other) { return add_scaled(1.0, other); }

VelocityField& VelocityField::operator-=(const VelocityField& other) { return add_scaled(-1.0, other); }

VelocityField& VelocityField::operator*=(double s) {
  for (double& x : values_) x *= s;
  return *this;
}

VelocityField& VelocityField::add_scaled(double s, const VelocityField& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += s * other.values_[i];
  return *this;
}

VelocityField operator+(VelocityField a, const VelocityField& b) { return a += b; }
VelocityField operator-(VelocityField a, const VelocityField& b) { return a -= b; }
VelocityField operator*(double s, VelocityField a) { return a *= s; }

double SpectralField::max_abs() const {
  double m = 0.0;
  for (const Complex& x : values_) m = std::max(m, std::abs(x));
  return m;
}

SpectralField& SpectralField::operator+=(const SpectralField& other) { return add_scaled(1.0, other); }

SpectralField& SpectralField::operator*=(Complex s) {
  for (Complex& x : values_) x *= s;
  return *this;
}

SpectralField& SpectralField::add_scaled(Complex s, const SpectralField& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += s * other.values_[i];
  return *this;
}

VelocityField sample(const DualGrid& grid, const Density& density) {
  VelocityField f(grid);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double value = density(grid.velocity.point(i));
    if (!std::isfinite(value)) {
      throw NumericalError("density is not finite at lattice node " + std::to_string(i));
    }
    f[i] = value;
  }
  return f;
}

std::vector<double> quadrature_weights(const VelocityGrid& grid, WeightRule rule) {
  const int n = grid.n;
  std::vector<double> axis(std::size_t(n), grid.spacing);
  if (rule == WeightRule::kLeftHalfTrapezoid) axis[0] = 0.5 * grid.spacing;
  std::vector<double> w(grid.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) w[flat_index(n, i, j, k)] = axis[i] * axis[j] * axis[k];
  return w;
}

double integrate(std::span<const double> weights, const VelocityField& f) {
  if (weights.size() != f.size()) throw ValidationError("weight count does not match field size");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += weights[i] * f[i];
  return s;
}

}  // namespace kinetic
