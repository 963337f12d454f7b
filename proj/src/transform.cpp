#include "kinetic/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "kinetic/error.hpp"

namespace kinetic {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// FFTW planning is not thread safe, execution with the new-array interface
// is. Plans are created once per N and never destroyed.
const PlanPair& plans_for(int n) {
  static std::mutex mutex;
  static std::map<int, PlanPair> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const std::size_t total = std::size_t(n) * n * n;
  auto* buf = fftw_alloc_complex(total);
  PlanPair p;
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  p.forward = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_FORWARD, flags);
  p.backward = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_BACKWARD, flags);
  fftw_free(buf);
  if (!p.forward || !p.backward) throw NumericalError("FFTW failed to create a plan");
  return cache.emplace(n, p).first->second;
}

inline double parity(int i) { return (i & 1) ? -1.0 : 1.0; }

// Multiplies by (-1)^(i+j+k) * overall.
void checkerboard(std::complex<double>* data, int n, double overall) {
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = overall * parity(i + j);
      for (int k = 0; k < n; ++k, ++idx) {
        data[idx] *= s;
        s = -s;
      }
    }
}

void execute(fftw_plan plan, std::complex<double>* data) {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, p, p);
}

}  // namespace

// With v_j = (j - N/2) h_v and zeta_k = (k - N/2) h_zeta, h_v h_zeta = 2 pi / N,
//   exp(-i zeta_k v_j) = exp(-2 pi i j k / N) (-1)^j (-1)^k (-1)^(N/2)
// per axis, so the centered transform is an FFT between two checkerboards.
SpectralField to_fourier(const VelocityField& f) {
  const DualGrid& g = f.grid();
  const int n = g.n();
  SpectralField out(g);
  auto data = out.values();
  for (std::size_t i = 0; i < f.size(); ++i) data[i] = f[i];
  checkerboard(data.data(), n, 1.0);
  execute(plans_for(n).forward, data.data());
  const double h3 = std::pow(g.velocity.spacing, 3);
  const double scale = h3 / std::pow(2.0 * std::numbers::pi, 1.5) * parity(3 * n / 2);
  checkerboard(data.data(), n, scale);
  return out;
}

std::vector<std::complex<double>> from_fourier_complex(const SpectralField& f_hat) {
  const DualGrid& g = f_hat.grid();
  const int n = g.n();
  std::vector<std::complex<double>> data(f_hat.values().begin(), f_hat.values().end());
  checkerboard(data.data(), n, 1.0);
  execute(plans_for(n).backward, data.data());
  const double h3 = std::pow(g.spectral.spacing, 3);
  const double scale = h3 / std::pow(2.0 * std::numbers::pi, 1.5) * parity(3 * n / 2);
  checkerboard(data.data(), n, scale);
  return data;
}

VelocityField from_fourier(const SpectralField& f_hat, InverseDiagnostics* diag) {
  const auto data = from_fourier_complex(f_hat);
  VelocityField out(f_hat.grid());
  double residue = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    out[i] = data[i].real();
    residue = std::max(residue, std::abs(data[i].imag()));
  }
  const double norm = f_hat.max_abs();
  if (diag) *diag = {residue, norm};
  if (residue > 1e-6 * norm) {
    throw NumericalError("inverse transform has a large imaginary part; input is not Hermitian");
  }
  if (!out.all_finite()) throw NumericalError("inverse transform produced non-finite values");
  return out;
}

}  // namespace kinetic
