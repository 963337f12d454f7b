#include <doctest.h>

#include <cmath>
#include <random>

#include "kinetic/error.hpp"
#include "kinetic/kernel.hpp"
#include "oracles/oracles.hpp"

using namespace kinetic;

namespace {

oracle::V3 ov(const Vec3& v) { return {v[0], v[1], v[2]}; }

}  // namespace

TEST_CASE("default constant normalizes the sphere") {
  CHECK(KernelSpec::default_constant() * 4.0 * oracle::kPi == doctest::Approx(1.0));
  KernelSpec s;
  s.e = 0.5;
  CHECK(s.beta() == doctest::Approx(0.75));
  CHECK(s.radius(3.0) == doctest::Approx(3.0));
}

TEST_CASE("invalid kernel parameters are rejected") {
  KernelSpec s;
  s.lambda = -0.5;
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s = {};
  s.e = 1.5;
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s = {};
  s.truncation = 0.0;
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s = {};
  s.C = -1.0;
  CHECK_THROWS_AS(s.validate(), ValidationError);
}

TEST_CASE("sinc") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(sinc(1e-9) == doctest::Approx(1.0));
  CHECK(sinc(2.0) == doctest::Approx(std::sin(2.0) / 2.0));
}

TEST_CASE("pointwise kernel against a sphere cubature") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2, 2);
  for (double lambda : {0.0, 1.0}) {
    for (double e : {1.0, 0.5}) {
      KernelSpec s;
      s.lambda = lambda;
      s.e = e;
      for (int i = 0; i < 4; ++i) {
        const Vec3 uu{u(rng), u(rng), u(rng)}, z{u(rng), u(rng), u(rng)};
        const auto lib = eval_G(s, uu, z);
        const auto ref = oracle::G_by_sphere(lambda, s.beta(), s.C, ov(uu), ov(z));
        CHECK(std::abs(lib - ref) <= 1e-10 * (1.0 + std::abs(ref)));
      }
    }
  }
}

TEST_CASE("kernel vanishes at zero frequency") {
  KernelSpec s;
  CHECK(std::abs(eval_G(s, {1, 2, 3}, {0, 0, 0})) == 0.0);
}

TEST_CASE("Maxwell radial integrals match the closed form") {
  const DualGrid g = build_grids(16, 6.0);
  const double R = 6.0;
  for (double e : {1.0, 0.5}) {
    KernelSpec s;
    s.e = e;
    for (TableMode mode : {TableMode::kLattice, TableMode::kInterpolated, TableMode::kDirect}) {
      const KernelCache c = KernelCache::build(s, g, 256, mode);
      CHECK(c.radius() == doctest::Approx(R));
      for (double a : {0.0, 0.3, 1.1, 2.5})
        for (double b : {0.0, 0.4, 1.1, 3.0})
          CHECK(c.I(a, b) == doctest::Approx(oracle::radial_I_maxwell(a, b, R)).epsilon(1e-9).scale(1.0));
      for (double x : {0.0, 0.7, 4.0}) CHECK(c.J(x) == doctest::Approx(oracle::radial_J_maxwell(x, R)).scale(1.0));
    }
  }
}

TEST_CASE("lattice tables agree with direct quadrature") {
  const DualGrid g = build_grids(12, 5.0);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> idx(1, 11);
  for (double lambda : {0.0, 1.0}) {
    for (double e : {1.0, 0.5}) {
      KernelSpec s;
      s.lambda = lambda;
      s.e = e;
      const KernelCache lat = KernelCache::build(s, g, 256, TableMode::kLattice);
      const KernelCache itp = KernelCache::build(s, g, 256, TableMode::kInterpolated);
      for (int i = 0; i < 20; ++i) {
        const Vec3 xi = g.spectral.point(flat_index(12, idx(rng), idx(rng), idx(rng)));
        const Vec3 ze = g.spectral.point(flat_index(12, idx(rng), idx(rng), idx(rng)));
        const double ref = lat.G_hat_direct(xi, ze);
        CHECK(lat.eval_G_hat(xi, ze) == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
        CHECK(itp.eval_G_hat(xi, ze) == doctest::Approx(ref).epsilon(1e-6).scale(1.0));
      }
    }
  }
}

TEST_CASE("G_hat is even under joint sign flip") {
  const DualGrid g = build_grids(8, 4.0);
  KernelSpec s;
  s.lambda = 1.0;
  s.e = 0.5;
  const KernelCache c = KernelCache::build(s, g);
  const Vec3 xi{0.3, -0.7, 1.2}, ze{-0.4, 0.9, 0.1};
  CHECK(c.G_hat_direct(xi, ze) == doctest::Approx(c.G_hat_direct({-xi[0], -xi[1], -xi[2]}, {-ze[0], -ze[1], -ze[2]})));
}
