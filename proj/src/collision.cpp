#include "kinetic/collision.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "kinetic/error.hpp"

namespace kinetic {

namespace {

std::atomic<int> g_workers{0};

// Interior modes, re-indexed from -half..half to 0..w-1, real and imaginary
// parts stored separately.
struct Compact {
  int half = 0, w = 0;
  std::vector<double> re, im;

  std::size_t at(int x, int y, int z) const {
    return (std::size_t(x + half) * w + std::size_t(y + half)) * w + std::size_t(z + half);
  }
};

Compact compact(const SpectralField& f, bool reversed) {
  const int n = f.grid().n();
  Compact c;
  c.half = n / 2 - 1;
  c.w = 2 * c.half + 1;
  c.re.resize(std::size_t(c.w) * c.w * c.w);
  c.im.resize(c.re.size());
  const int s = reversed ? -1 : 1;
  for (int x = -c.half; x <= c.half; ++x)
    for (int y = -c.half; y <= c.half; ++y)
      for (int z = -c.half; z <= c.half; ++z) {
        const auto v = f[flat_index(n, s * x + n / 2, s * y + n / 2, s * z + n / 2)];
        const std::size_t i = c.at(x, y, z);
        c.re[i] = v.real();
        c.im[i] = v.imag();
      }
  return c;
}

bool is_hermitian(const SpectralField& f) {
  const int n = f.grid().n();
  const double tol = 1e-12 * f.max_abs();
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int z = 1; z < n; ++z) {
        const auto a = f[flat_index(n, x, y, z)];
        const auto b = f[flat_index(n, n - x, n - y, n - z)];
        if (std::abs(a - std::conj(b)) > tol) return false;
      }
  return true;
}

struct Convolution {
  const KernelCache::Tables& t;
  const Compact& frev;  // frev(J - K) = f_hat(K - J)
  Compact g;            // g_hat(J)
  Compact gj;           // g_hat(J) * J(|xi_J|)

  // sum_J f_hat(K - J) g_hat(J) [I(K, J) - J(J)]
  std::complex<double> mode(int kx, int ky, int kz) const {
    const int half = t.half;
    const double beta = t.spec.beta();
    const double h = t.grid.spectral.spacing;
    const auto& row = t.shell_table.empty() ? t.j_shell : t.shell_table[std::size_t(kx * kx + ky * ky + kz * kz)];
    const int zlo = std::max(-half, kz - half), zhi = std::min(half, kz + half);
    const int len = zhi - zlo + 1;
    std::vector<double> table(std::size_t(len > 0 ? len : 0));
    double acc_re = 0.0, acc_im = 0.0;
    for (int jx = std::max(-half, kx - half); jx <= std::min(half, kx + half); ++jx) {
      for (int jy = std::max(-half, ky - half); jy <= std::min(half, ky + half); ++jy) {
        // Kernel values along the z line.
        if (t.mode == TableMode::kLattice) {
          const int dx = t.q * jx - t.p * kx, dy = t.q * jy - t.p * ky;
          const int mxy = dx * dx + dy * dy;
          for (int i = 0; i < len; ++i) {
            const int dz = t.q * (zlo + i) - t.p * kz;
            table[std::size_t(i)] = row[std::size_t(mxy + dz * dz)];
          }
        } else if (t.mode == TableMode::kInterpolated) {
          const double dx = jx - 0.5 * beta * kx, dy = jy - 0.5 * beta * ky;
          for (int i = 0; i < len; ++i) {
            const double dz = (zlo + i) - 0.5 * beta * kz;
            const double x = std::sqrt(dx * dx + dy * dy + dz * dz) * h / t.db;
            const int i0 = int(x);
            const double f = x - i0;
            const double* y = row.data() + i0;
            table[std::size_t(i)] = -f * (f - 1) * (f - 2) / 6 * y[0] + (f + 1) * (f - 1) * (f - 2) / 2 * y[1] -
                                    (f + 1) * f * (f - 2) / 2 * y[2] + (f + 1) * f * (f - 1) / 6 * y[3];
          }
        } else {
          const double a = 0.5 * beta * h * std::sqrt(double(kx * kx + ky * ky + kz * kz));
          const double dx = jx - 0.5 * beta * kx, dy = jy - 0.5 * beta * ky;
          for (int i = 0; i < len; ++i) {
            const double dz = (zlo + i) - 0.5 * beta * kz;
            const double b = std::sqrt(dx * dx + dy * dy + dz * dz) * h;
            double acc = 0.0;
            for (std::size_t r = 0; r < t.rule.size(); ++r) {
              const double x = t.rule.nodes[r];
              acc += t.radial_weight[r] * sinc(a * x) * sinc(b * x);
            }
            table[std::size_t(i)] = acc;
          }
        }
        const std::size_t gi = g.at(jx, jy, zlo);
        const std::size_t fi = frev.at(jx - kx, jy - ky, zlo - kz);
        const double* fr = frev.re.data() + fi;
        const double* fim = frev.im.data() + fi;
        const double* gr = g.re.data() + gi;
        const double* gim = g.im.data() + gi;
        const double* hr = gj.re.data() + gi;
        const double* him = gj.im.data() + gi;
        double sr = 0.0, si = 0.0;
        for (int i = 0; i < len; ++i) {
          const double tv = table[std::size_t(i)];
          const double wr = gr[i] * tv - hr[i];
          const double wi = gim[i] * tv - him[i];
          sr += fr[i] * wr - fim[i] * wi;
          si += fr[i] * wi + fim[i] * wr;
        }
        acc_re += sr;
        acc_im += si;
      }
    }
    return {acc_re, acc_im};
  }
};

}  // namespace

void set_collision_workers(int workers) { g_workers = std::max(0, workers); }

int collision_workers() {
  const int w = g_workers.load();
  if (w > 0) return w;
  return std::max(1u, std::thread::hardware_concurrency());
}

SpectralField collide_fourier(const SpectralField& f_hat, const SpectralField& g_hat, const KernelCache& cache) {
  const auto& t = cache.tables();
  if (!(f_hat.grid() == t.grid) || !(g_hat.grid() == t.grid)) {
    throw ValidationError("collision operands and kernel cache are on different grids");
  }
  const int n = t.grid.n();
  const int half = t.half;
  const Compact frev = compact(f_hat, true);
  Convolution conv{t, frev, compact(g_hat, false), {}};
  conv.gj = conv.g;
  for (int x = -half; x <= half; ++x)
    for (int y = -half; y <= half; ++y)
      for (int z = -half; z <= half; ++z) {
        const std::size_t i = conv.g.at(x, y, z);
        const double j = t.j_shell[std::size_t(x * x + y * y + z * z)];
        conv.gj.re[i] *= j;
        conv.gj.im[i] *= j;
      }

  // Modes to evaluate; with Hermitian operands only one of each +-K pair.
  const bool hermitian = is_hermitian(f_hat) && is_hermitian(g_hat);
  std::vector<std::array<int, 3>> modes;
  for (int x = -half; x <= half; ++x)
    for (int y = -half; y <= half; ++y)
      for (int z = -half; z <= half; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;  // G_hat(xi, 0) = 0
        const bool upper = x > 0 || (x == 0 && (y > 0 || (y == 0 && z > 0)));
        if (hermitian && !upper) continue;
        modes.push_back({x, y, z});
      }

  const double h = t.grid.spectral.spacing;
  const double pref = std::pow(h, 3) / std::pow(2.0 * std::numbers::pi, 1.5) * 16.0 * std::numbers::pi *
                      std::numbers::pi * t.spec.C;
  SpectralField out(t.grid);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < modes.size(); i += stride) {
      const auto [x, y, z] = modes[i];
      const std::complex<double> v = pref * conv.mode(x, y, z);
      out[flat_index(n, x + n / 2, y + n / 2, z + n / 2)] = v;
      if (hermitian) out[flat_index(n, n / 2 - x, n / 2 - y, n / 2 - z)] = std::conj(v);
    }
  };
  const int workers = std::min<int>(collision_workers(), int(modes.size()));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < workers; ++k) pool.emplace_back(work, std::size_t(k), std::size_t(workers));
    for (auto& th : pool) th.join();
  }
  return out;
}

VelocityField collide(const VelocityField& f, const VelocityField& g, const KernelCache& cache,
                      InverseDiagnostics* diag) {
  return from_fourier(collide_fourier(to_fourier(f), to_fourier(g), cache), diag);
}

}  // namespace kinetic
