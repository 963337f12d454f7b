#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace kinetic {

inline constexpr int kDim = 3;

using Vec3 = std::array<double, 3>;

/// Uniform velocity lattice v_j = -L + j*h on [-L, L) in each axis.
struct VelocityGrid {
  int n = 0;
  double half_width = 0.0;  // L
  double spacing = 0.0;     // h_v = 2L/N

  // Written as (j - N/2) h so that the lattice is exactly antisymmetric
  // under j -> N - j.
  double node(int j) const { return (j - n / 2) * spacing; }
  std::size_t size() const { return std::size_t(n) * n * n; }
  Vec3 point(std::size_t flat) const;
};

/// Fourier lattice dual to a VelocityGrid: h_v * h_zeta = 2*pi/N.
struct SpectralGrid {
  int n = 0;
  double spacing = 0.0;     // h_zeta
  double half_width = 0.0;  // L_zeta = N h_zeta / 2

  double node(int k) const { return (k - n / 2) * spacing; }
  std::size_t size() const { return std::size_t(n) * n * n; }
  Vec3 point(std::size_t flat) const;
};

struct DualGrid {
  VelocityGrid velocity;
  SpectralGrid spectral;

  int n() const { return velocity.n; }
  std::size_t size() const { return velocity.size(); }
  friend bool operator==(const DualGrid& a, const DualGrid& b) {
    return a.velocity.n == b.velocity.n &&
           a.velocity.half_width == b.velocity.half_width;
  }
};

/// Builds the velocity lattice and its Fourier dual. Rejects odd N, N < 4 and
/// non-positive L with ValidationError.
DualGrid build_grids(int n, double half_width);

// Row-major (x, y, z) flattening shared by every module.
inline std::size_t flat_index(int n, int ix, int iy, int iz) {
  return (std::size_t(ix) * n + iy) * n + iz;
}

/// Real field sampled on the velocity lattice.
class VelocityField {
 public:
  VelocityField() = default;
  explicit VelocityField(const DualGrid& grid, double fill = 0.0)
      : grid_(grid), values_(grid.size(), fill) {}
  VelocityField(const DualGrid& grid, std::vector<double> values);

  const DualGrid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  double max_abs() const;
  double min() const;
  bool all_finite() const;

  VelocityField& operator+=(const VelocityField& other);
  VelocityField& operator-=(const VelocityField& other);
  VelocityField& operator*=(double s);
  // this += s * other
  VelocityField& add_scaled(double s, const VelocityField& other);

 private:
  DualGrid grid_;
  std::vector<double> values_;
};

VelocityField operator+(VelocityField a, const VelocityField& b);
VelocityField operator-(VelocityField a, const VelocityField& b);
VelocityField operator*(double s, VelocityField a);

/// Complex field sampled on the centered Fourier lattice.
class SpectralField {
 public:
  using Complex = std::complex<double>;

  SpectralField() = default;
  explicit SpectralField(const DualGrid& grid)
      : grid_(grid), values_(grid.size(), Complex{}) {}

  const DualGrid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  Complex& operator[](std::size_t i) { return values_[i]; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::span<Complex> values() { return values_; }
  std::span<const Complex> values() const { return values_; }

  double max_abs() const;
  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator*=(Complex s);
  SpectralField& add_scaled(Complex s, const SpectralField& other);

 private:
  DualGrid grid_;
  std::vector<Complex> values_;
};

using Density = std::function<double(const Vec3&)>;

/// Samples a closed-form density at every lattice node. Throws
/// NumericalError if the density is not finite at some node.
VelocityField sample(const DualGrid& grid, const Density& density);

enum class WeightRule {
  // Trapezoid on the periodic closure of [-L, L): every node weighs h^3.
  kPeriodicTrapezoid,
  // Half weight on the j = 0 plane of each axis, full weight elsewhere.
  kLeftHalfTrapezoid,
};

/// Tensor-product quadrature weights: integral of g ~ sum_j w_j g(v_j).
std::vector<double> quadrature_weights(const VelocityGrid& grid,
                                       WeightRule rule = WeightRule::kPeriodicTrapezoid);

/// sum_j w_j f_j
double integrate(std::span<const double> weights, const VelocityField& f);

}  // namespace kinetic
