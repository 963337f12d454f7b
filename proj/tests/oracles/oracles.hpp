// Independent reference computations for the unit and acceptance tests.
// Nothing here calls into the library beyond its plain data types.
#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

using V3 = std::array<double, 3>;
constexpr double kPi = std::numbers::pi;

inline double dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const V3& a) { return std::sqrt(dot(a, a)); }

inline double maxwellian(const V3& v, const V3& c, double T) {
  const V3 d{v[0] - c[0], v[1] - c[1], v[2] - c[2]};
  return std::exp(-dot(d, d) / (2.0 * T)) / std::pow(2.0 * kPi * T, 1.5);
}

/// (2 pi)^{-3/2} int M_T(v - c) exp(-i zeta.v) dv
inline std::complex<double> maxwellian_transform(const V3& zeta, const V3& c, double T) {
  return std::pow(2.0 * kPi, -1.5) * std::exp(-0.5 * T * dot(zeta, zeta)) * std::polar(1.0, -dot(zeta, c));
}

/// int_0^R r^2 sinc(a r) sinc(b r) dr from the antiderivative of sin sin.
inline double radial_I_maxwell(double a, double b, double R) {
  if (a == 0.0 && b == 0.0) return R * R * R / 3.0;
  if (a == 0.0 || b == 0.0) {
    const double c = a == 0.0 ? b : a;
    return (std::sin(c * R) / (c * c) - R * std::cos(c * R) / c) / c;
  }
  const double d = a - b, s = a + b;
  const double first = d == 0.0 ? R : std::sin(d * R) / d;
  return (first - std::sin(s * R) / s) / (2.0 * a * b);
}

/// int_0^R r^2 sinc(c r) dr
inline double radial_J_maxwell(double c, double R) { return radial_I_maxwell(c, 0.0, R); }

/// Sphere integral of C |u|^lambda [exp(-i beta/2 zeta.(|u| sigma - u)) - 1]
/// by a Gauss-Legendre rule in cos(theta) and the trapezoid rule in phi.
inline std::complex<double> G_by_sphere(double lambda, double beta, double C, const V3& u, const V3& zeta,
                                        int n_theta = 64, int n_phi = 128) {
  // Legendre nodes by Newton iteration.
  std::complex<double> acc = 0.0;
  const double ru = norm(u);
  for (int i = 1; i <= n_theta; ++i) {
    double x = std::cos(kPi * (i - 0.25) / (n_theta + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n_theta; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n_theta * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const double st = std::sqrt(1.0 - x * x);
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * kPi * j / n_phi;
      const V3 sigma{st * std::cos(phi), st * std::sin(phi), x};
      const V3 arg{ru * sigma[0] - u[0], ru * sigma[1] - u[1], ru * sigma[2] - u[2]};
      acc += w * (2.0 * kPi / n_phi) * (std::polar(1.0, -0.5 * beta * dot(zeta, arg)) - 1.0);
    }
  }
  return C * std::pow(ru, lambda) * acc;
}

/// 4 pi int_0^inf r^2 g(r) dr by adaptive Gauss-Kronrod on [0, r_max].
template <class F>
double radial_mass(F g, double r_max) {
  auto integrand = [&](double r) { return 4.0 * kPi * r * r * g(r); };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, r_max, 15, 1e-13);
}

template <class F>
double integrate_1d(F g, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, a, b, 15, 1e-13);
}

/// BKW profile, written out independently of the library.
inline double bkw(double r, double t, double eta) {
  const double K = 1.0 - std::exp(-t / 6.0);
  const double e2 = eta * eta;
  return std::exp(-r * r / (2.0 * K * e2)) / (2.0 * std::pow(2.0 * kPi * K * e2, 1.5)) *
         ((5.0 * K - 3.0) / K + (1.0 - K) / (K * K) * r * r / e2);
}

/// d/dt of the BKW profile by a fourth-order central difference.
inline double bkw_dt(double r, double t, double eta, double h = 1e-3) {
  return (-bkw(r, t + 2 * h, eta) + 8 * bkw(r, t + h, eta) - 8 * bkw(r, t - h, eta) + bkw(r, t - 2 * h, eta)) /
         (12.0 * h);
}

}  // namespace oracle
