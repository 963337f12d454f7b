#pragma once

#include "kinetic/grid.hpp"
#include "kinetic/kernel.hpp"
#include "kinetic/transform.hpp"

namespace kinetic {

/// Spectral collision operator
///   Q_hat(zeta) = (2 pi)^{-3/2} h_zeta^3 sum_xi f_hat(zeta - xi) g_hat(xi) G_hat(xi, zeta)
/// over interior modes. Nyquist modes (index 0 on any axis) are excluded from
/// both operands and set to zero in the output; terms with zeta - xi outside
/// the lattice are dropped. The second argument is the collision partner.
SpectralField collide_fourier(const SpectralField& f_hat, const SpectralField& g_hat, const KernelCache& cache);

/// Velocity-space form: from_fourier(collide_fourier(to_fourier(f), to_fourier(g))).
VelocityField collide(const VelocityField& f, const VelocityField& g, const KernelCache& cache,
                      InverseDiagnostics* diag = nullptr);

/// Number of threads used for the convolution; 0 selects the hardware count.
/// Results do not depend on this setting.
void set_collision_workers(int workers);
int collision_workers();

struct OracleOptions {
  // Node counts exceed the phase content of the integrand by
  // margin + margin_cuberoot * phase^{1/3}.
  double angular_margin = 4.0;
  double angular_margin_cuberoot = 3.0;
  double radial_margin = 8.0;
  double radial_margin_cuberoot = 3.0;
};

/// Brute-force evaluation of
///   Q_hat(zeta) = int_{|u| <= R} G(u, zeta) [f(v) g(v - u)]^(zeta) du
/// with a spherical product cubature in u and the product of the
/// trigonometric interpolants of f and g transformed exactly. Test oracle
/// for collide; refuses N > 12.
VelocityField collide_direct_oracle(const VelocityField& f, const VelocityField& g, const KernelSpec& spec,
                                    const DualGrid& grid, const OracleOptions& options = {});

}  // namespace kinetic
