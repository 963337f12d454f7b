#pragma once

#include "kinetic/grid.hpp"

namespace kinetic {

struct InverseDiagnostics {
  double imag_residue = 0.0;  // max |Im| of the inverse before it is discarded
  double spectral_norm = 0.0; // max |f_hat|
};

/// Continuous-convention Fourier transform on the centered lattices:
///   f_hat(zeta_k) = (2 pi)^{-3/2} h_v^3 sum_j f(v_j) exp(-i zeta_k . v_j)
SpectralField to_fourier(const VelocityField& f);

/// Inverse of to_fourier. The imaginary part of the result is dropped; it is
/// reported through `diag` and must stay below 1e-6 |f_hat|_inf, otherwise a
/// NumericalError is raised.
VelocityField from_fourier(const SpectralField& f_hat, InverseDiagnostics* diag = nullptr);

/// Complex inverse without the realness check; used where the spectral field
/// is not the transform of a real function.
std::vector<std::complex<double>> from_fourier_complex(const SpectralField& f_hat);

}  // namespace kinetic
