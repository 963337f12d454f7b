#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "kinetic/collision.hpp"
#include "kinetic/error.hpp"
#include "kinetic/grid.hpp"
#include "kinetic/quadrature.hpp"
#include "kinetic/reference.hpp"
#include "oracles/oracles.hpp"

using namespace kinetic;

namespace {

oracle::V3 ov(const Vec3& v) { return {v[0], v[1], v[2]}; }

double max_diff(const VelocityField& a, const VelocityField& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

VelocityField random_bump(const DualGrid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  const oracle::V3 c1{u(rng), u(rng), u(rng)}, c2{u(rng), u(rng), u(rng)};
  const double t1 = 0.6 + u(rng) * 0.2, t2 = 0.8 + u(rng) * 0.2;
  return sample(g, [&](const Vec3& v) {
    return 0.6 * oracle::maxwellian(ov(v), c1, t1) + 0.4 * oracle::maxwellian(ov(v), c2, t2);
  });
}

}  // namespace

TEST_CASE("Maxwellian is an equilibrium of the elastic operator") {
  const DualGrid g = build_grids(24, 7.0);
  for (double lambda : {0.0, 1.0}) {
    KernelSpec s;
    s.lambda = lambda;
    const KernelCache c = KernelCache::build(s, g);
    const VelocityField m = sample(g, [](const Vec3& v) { return oracle::maxwellian(ov(v), {0.2, 0, -0.1}, 1.0); });
    CHECK(collide(m, m, c).max_abs() <= 1e-4 * m.max_abs());
  }
}

TEST_CASE("elastic and inelastic operators conserve mass") {
  const DualGrid g = build_grids(12, 5.0);
  const auto w = quadrature_weights(g.velocity);
  const VelocityField f = random_bump(g, 3);
  for (double e : {1.0, 0.5}) {
    KernelSpec s;
    s.e = e;
    const KernelCache c = KernelCache::build(s, g);
    CHECK(std::abs(integrate(w, collide(f, f, c))) <= 1e-12);
  }
}

TEST_CASE("BKW time derivative matches the operator") {
  const DualGrid g = build_grids(24, 7.0);
  const KernelCache c = KernelCache::build(KernelSpec{}, g);
  const double t = bkw_start_time() + 0.5;
  const VelocityField f = sample(g, [&](const Vec3& v) { return oracle::bkw(oracle::norm(ov(v)), t, 1.0); });
  const VelocityField q = collide(f, f, c);
  const VelocityField dt = sample(g, [&](const Vec3& v) { return oracle::bkw_dt(oracle::norm(ov(v)), t, 1.0); });
  CHECK(max_diff(q, dt) <= 0.01 * dt.max_abs());
}

TEST_CASE("spectral operator matches the brute-force oracle") {
  const DualGrid g = build_grids(8, 4.0);
  for (double lambda : {0.0, 1.0}) {
    for (double e : {1.0, 0.5}) {
      KernelSpec s;
      s.lambda = lambda;
      s.e = e;
      const KernelCache c = KernelCache::build(s, g, 256, TableMode::kDirect);
      const VelocityField f = random_bump(g, 17), h = random_bump(g, 23);
      const VelocityField fast = collide(f, h, c);
      const VelocityField slow = collide_direct_oracle(f, h, s, g);
      CHECK(max_diff(fast, slow) <= 1e-8 * std::max(1.0, slow.max_abs()));
    }
  }
}

TEST_CASE("worker count does not change the result") {
  const DualGrid g = build_grids(12, 5.0);
  KernelSpec s;
  s.lambda = 1.0;
  s.e = 0.5;
  const KernelCache c = KernelCache::build(s, g);
  const VelocityField f = random_bump(g, 9);
  set_collision_workers(1);
  const VelocityField one = collide(f, f, c);
  set_collision_workers(4);
  const VelocityField four = collide(f, f, c);
  set_collision_workers(1);
  CHECK(max_diff(one, four) == 0.0);
}

TEST_CASE("mismatched grids are rejected") {
  const DualGrid a = build_grids(8, 4.0), b = build_grids(8, 3.0);
  const KernelCache c = KernelCache::build(KernelSpec{}, a);
  CHECK_THROWS_AS(collide(VelocityField(b, 1.0), VelocityField(b, 1.0), c), ValidationError);
  CHECK_THROWS_AS(collide_direct_oracle(VelocityField(build_grids(14, 4.0)), VelocityField(build_grids(14, 4.0)),
                                        KernelSpec{}, build_grids(14, 4.0)),
                  ValidationError);
}
