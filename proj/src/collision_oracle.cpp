#include <algorithm>
#include <cmath>
#include <numbers>

#include "kinetic/collision.hpp"
#include "kinetic/error.hpp"
#include "kinetic/quadrature.hpp"

namespace kinetic {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

// Interior coefficients by a plain discrete Fourier sum; no FFT involved.
std::vector<Complex> direct_transform(const VelocityField& f, int half) {
  const DualGrid& g = f.grid();
  const int n = g.n(), w = 2 * half + 1;
  std::vector<Complex> axis(std::size_t(w) * n);
  for (int k = -half; k <= half; ++k)
    for (int j = 0; j < n; ++j)
      axis[std::size_t(k + half) * n + j] = std::polar(1.0, -k * g.spectral.spacing * g.velocity.node(j));
  const double scale = std::pow(g.velocity.spacing, 3) / std::pow(2.0 * kPi, 1.5);
  std::vector<Complex> out(std::size_t(w) * w * w);
  for (int kx = 0; kx < w; ++kx)
    for (int ky = 0; ky < w; ++ky)
      for (int kz = 0; kz < w; ++kz) {
        Complex acc = 0.0;
        for (int jx = 0; jx < n; ++jx)
          for (int jy = 0; jy < n; ++jy) {
            const Complex exy = axis[std::size_t(kx) * n + jx] * axis[std::size_t(ky) * n + jy];
            for (int jz = 0; jz < n; ++jz)
              acc += f[flat_index(n, jx, jy, jz)] * exy * axis[std::size_t(kz) * n + jz];
          }
        out[(std::size_t(kx) * w + ky) * w + kz] = scale * acc;
      }
  return out;
}

}  // namespace

VelocityField collide_direct_oracle(const VelocityField& f, const VelocityField& g, const KernelSpec& spec,
                                    const DualGrid& grid, const OracleOptions& opt) {
  if (grid.n() > 12) throw ValidationError("the direct collision oracle is limited to N <= 12");
  if (!(f.grid() == grid) || !(g.grid() == grid)) throw ValidationError("oracle operands are on another grid");
  spec.validate();
  const int n = grid.n(), half = n / 2 - 1, w = 2 * half + 1;
  const std::size_t w3 = std::size_t(w) * w * w;
  const double h = grid.spectral.spacing;
  const double beta = spec.beta();
  const double R = spec.radius(grid.velocity.half_width);

  const auto fh = direct_transform(f, half);
  const auto gh = direct_transform(g, half);
  auto at = [w, half](int x, int y, int z) {
    return (std::size_t(x + half) * w + std::size_t(y + half)) * w + std::size_t(z + half);
  };

  // f and g are real, so the product coefficients and Q_hat are Hermitian:
  // only K in the upper half space (and K = 0) are evaluated.
  std::vector<std::array<int, 3>> upper;
  for (int x = -half; x <= half; ++x)
    for (int y = -half; y <= half; ++y)
      for (int z = -half; z <= half; ++z)
        if (x > 0 || (x == 0 && (y > 0 || (y == 0 && z >= 0)))) upper.push_back({x, y, z});

  // Plane-wave content of the integrand in u: exp(-i xi.u) from the shifted
  // partner, exp(i beta zeta.u / 2) and the radial sinc from G.
  const double kmax = std::sqrt(3.0) * half * h;
  const double k_angular = kmax * (1.0 + 0.5 * beta);
  const double radial_phase = R * kmax * (1.0 + beta);
  const int radial_nodes = int(std::ceil(0.5 * radial_phase + opt.radial_margin_cuberoot * std::cbrt(radial_phase) +
                                         opt.radial_margin));
  const QuadratureRule radial = gauss_legendre(radial_nodes, 0.0, R);

  std::vector<Complex> q_hat(w3, 0.0);
  const std::size_t wz = static_cast<std::size_t>(w);
  std::vector<Complex> ex(wz), ey(wz), ez(wz), px(wz), py(wz), pz(wz);
  std::vector<double> radial_sinc(std::size_t(3 * half * half) + 1);
  std::vector<double> partial_re(upper.size() * wz * wz), partial_im(partial_re.size());
  std::vector<double> exy_re(wz * wz), exy_im(wz * wz);

  for (std::size_t ir = 0; ir < radial.size(); ++ir) {
    const double r = radial.nodes[ir];
    const double kr = r * k_angular;
    const int degree = int(std::ceil(kr + opt.angular_margin_cuberoot * std::cbrt(kr) + opt.angular_margin));
    const QuadratureRule polar = gauss_legendre(degree / 2 + 1, -1.0, 1.0);
    const int nphi = degree + 1;
    const double amp = spec.C * 4.0 * kPi * std::pow(r, spec.lambda);
    for (std::size_t s = 0; s < radial_sinc.size(); ++s) radial_sinc[s] = sinc(0.5 * beta * r * h * std::sqrt(double(s)));
    for (std::size_t it = 0; it < polar.size(); ++it) {
      const double ct = polar.nodes[it], st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      // u_z is fixed along a circle of latitude: sum over J_z first,
      //   S(K, Jx, Jy) = sum_Jz f_hat(K - J) g_hat(J) exp(-i h Jz u_z).
      for (int k = -half; k <= half; ++k) {
        ez[std::size_t(k + half)] = std::polar(1.0, -k * h * r * ct);
        pz[std::size_t(k + half)] = std::polar(1.0, 0.5 * beta * k * h * r * ct);
      }
      std::fill(partial_re.begin(), partial_re.end(), 0.0);
      std::fill(partial_im.begin(), partial_im.end(), 0.0);
      for (std::size_t ik = 0; ik < upper.size(); ++ik) {
        const auto [kx, ky, kz] = upper[ik];
        const int zlo = std::max(-half, kz - half), zhi = std::min(half, kz + half);
        for (int jx = std::max(-half, kx - half); jx <= std::min(half, kx + half); ++jx)
          for (int jy = std::max(-half, ky - half); jy <= std::min(half, ky + half); ++jy) {
            Complex acc = 0.0;
            for (int jz = zlo; jz <= zhi; ++jz)
              acc += fh[at(kx - jx, ky - jy, kz - jz)] * gh[at(jx, jy, jz)] * ez[std::size_t(jz + half)];
            const std::size_t j = ik * wz * wz + std::size_t(jx + half) * wz + std::size_t(jy + half);
            partial_re[j] = acc.real();
            partial_im[j] = acc.imag();
          }
      }
      for (int ip = 0; ip < nphi; ++ip) {
        const double phi = 2.0 * kPi * ip / nphi;
        const double weight = radial.weights[ir] * r * r * polar.weights[it] * 2.0 * kPi / nphi;
        const double ux = r * st * std::cos(phi), uy = r * st * std::sin(phi);
        for (int k = -half; k <= half; ++k) {
          const std::size_t i = std::size_t(k + half);
          ex[i] = std::polar(1.0, -k * h * ux);
          ey[i] = std::polar(1.0, -k * h * uy);
          px[i] = std::polar(1.0, 0.5 * beta * k * h * ux);
          py[i] = std::polar(1.0, 0.5 * beta * k * h * uy);
        }
        for (std::size_t ix = 0; ix < wz; ++ix)
          for (std::size_t iy = 0; iy < wz; ++iy) {
            const Complex v = ex[ix] * ey[iy];
            exy_re[ix * wz + iy] = v.real();
            exy_im[ix * wz + iy] = v.imag();
          }
        for (std::size_t ik = 0; ik < upper.size(); ++ik) {
          const auto [kx, ky, kz] = upper[ik];
          // Coefficient of the product f_I(v) g_I(v - u) at K.
          const double* sr = partial_re.data() + ik * wz * wz;
          const double* si = partial_im.data() + ik * wz * wz;
          double dr = 0.0, di = 0.0;
          for (std::size_t j = 0; j < wz * wz; ++j) {
            dr += sr[j] * exy_re[j] - si[j] * exy_im[j];
            di += sr[j] * exy_im[j] + si[j] * exy_re[j];
          }
          const Complex d(dr, di);
          const int shell = kx * kx + ky * ky + kz * kz;
          const Complex wave = px[std::size_t(kx + half)] * py[std::size_t(ky + half)] * pz[std::size_t(kz + half)];
          const Complex gval = amp * (wave * radial_sinc[std::size_t(shell)] - 1.0);
          q_hat[at(kx, ky, kz)] += weight * gval * d;
        }
      }
    }
  }
  for (const auto& [kx, ky, kz] : upper) q_hat[at(-kx, -ky, -kz)] = std::conj(q_hat[at(kx, ky, kz)]);

  // Convolution normalization, then a plain inverse sum over interior modes.
  const double conv = std::pow(h, 3) / std::pow(2.0 * kPi, 1.5);
  const double inv = std::pow(h, 3) / std::pow(2.0 * kPi, 1.5);
  VelocityField out(grid);
  for (int jx = 0; jx < n; ++jx)
    for (int jy = 0; jy < n; ++jy)
      for (int jz = 0; jz < n; ++jz) {
        const double v[3] = {grid.velocity.node(jx), grid.velocity.node(jy), grid.velocity.node(jz)};
        Complex acc = 0.0;
        for (int kx = -half; kx <= half; ++kx)
          for (int ky = -half; ky <= half; ++ky)
            for (int kz = -half; kz <= half; ++kz) {
              const double phase = h * (kx * v[0] + ky * v[1] + kz * v[2]);
              acc += q_hat[at(kx, ky, kz)] * std::polar(1.0, phase);
            }
        out[flat_index(n, jx, jy, jz)] = conv * inv * acc.real();
      }
  return out;
}

}  // namespace kinetic
