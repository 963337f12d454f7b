#include <doctest.h>

#include <cmath>
#include <random>

#include "kinetic/error.hpp"
#include "kinetic/transform.hpp"
#include "oracles/oracles.hpp"

using namespace kinetic;

namespace {

oracle::V3 ov(const Vec3& v) { return {v[0], v[1], v[2]}; }

}  // namespace

TEST_CASE("centered Maxwellian matches the Gaussian transform") {
  const DualGrid g = build_grids(32, 5.0);
  const VelocityField f = sample(g, [](const Vec3& v) { return oracle::maxwellian(ov(v), {0, 0, 0}, 1.0); });
  const SpectralField fh = to_fourier(f);
  double err = 0.0;
  for (std::size_t k = 0; k < fh.size(); ++k) {
    err = std::max(err, std::abs(fh[k] - oracle::maxwellian_transform(ov(g.spectral.point(k)), {0, 0, 0}, 1.0)));
  }
  CHECK(err <= 1e-6);
}

TEST_CASE("shifted Maxwellian picks up the shift phase") {
  const DualGrid g = build_grids(32, 6.0);
  const oracle::V3 c{0.5, -0.25, 1.0};
  const VelocityField f = sample(g, [&](const Vec3& v) { return oracle::maxwellian(ov(v), c, 1.0); });
  const SpectralField fh = to_fourier(f);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, fh.size() - 1);
  for (int i = 0; i < 5; ++i) {
    const std::size_t k = pick(rng);
    const auto exact = oracle::maxwellian_transform(ov(g.spectral.point(k)), c, 1.0);
    CHECK(std::abs(fh[k] - exact) <= 1e-6);
  }
}

TEST_CASE("round trip and linearity") {
  const DualGrid g = build_grids(12, 3.0);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  VelocityField f(g), h(g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    f[i] = u(rng);
    h[i] = u(rng);
  }
  const VelocityField back = from_fourier(to_fourier(f));
  double err = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) err = std::max(err, std::abs(back[i] - f[i]));
  CHECK(err <= 1e-10 * f.max_abs());

  const SpectralField lhs = to_fourier(2.5 * f + h);
  SpectralField rhs = to_fourier(f);
  rhs *= 2.5;
  rhs += to_fourier(h);
  double lin = 0.0;
  for (std::size_t k = 0; k < lhs.size(); ++k) lin = std::max(lin, std::abs(lhs[k] - rhs[k]));
  CHECK(lin <= 1e-13 * lhs.max_abs());
}

TEST_CASE("zero in, zero out") {
  const DualGrid g = build_grids(8, 2.0);
  CHECK(to_fourier(VelocityField(g)).max_abs() == 0.0);
  CHECK(from_fourier(SpectralField(g)).max_abs() == 0.0);
}

TEST_CASE("even input has a real transform") {
  const DualGrid g = build_grids(16, 4.0);
  const VelocityField f = sample(g, [](const Vec3& v) { return std::exp(-std::abs(v[0]) - v[1] * v[1] - std::cos(v[2])); });
  // Points at index 0 have no mirror partner on the lattice; zero them.
  VelocityField e = f;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j)
      for (int k = 0; k < 16; ++k)
        if (i == 0 || j == 0 || k == 0) e[flat_index(16, i, j, k)] = 0.0;
  const SpectralField fh = to_fourier(e);
  double imag = 0.0;
  for (std::size_t k = 0; k < fh.size(); ++k) imag = std::max(imag, std::abs(fh[k].imag()));
  CHECK(imag <= 1e-10 * fh.max_abs());
}

TEST_CASE("inverse of an anti-Hermitian field is rejected") {
  const DualGrid g = build_grids(8, 2.0);
  SpectralField fh(g);
  fh[flat_index(8, 5, 4, 4)] = {0.0, 1.0};
  CHECK_THROWS_AS(from_fourier(fh), NumericalError);
  InverseDiagnostics diag;
  const VelocityField ok = from_fourier(to_fourier(VelocityField(g, 1.0)), &diag);
  CHECK(diag.imag_residue <= 1e-10 * diag.spectral_norm);
  CHECK(ok[0] == doctest::Approx(1.0));
}
