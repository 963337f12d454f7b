#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "kinetic/grid.hpp"
#include "kinetic/quadrature.hpp"

namespace kinetic {

/// Variable hard potential collision model with isotropic cross section.
struct KernelSpec {
  double lambda = 0.0;  // 0 Maxwell molecules, 1 hard spheres
  double e = 1.0;       // restitution coefficient
  double C = default_constant();
  // Relative-velocity cut-off R = truncation * L. The spectral lattice makes
  // the pair correlation 2L-periodic in u, so a ball reaching past the
  // period cell counts periodic images; 1 keeps the ball inside the cell.
  double truncation = 1.0;

  double beta() const { return 0.5 * (1.0 + e); }
  double radius(double half_width) const { return truncation * half_width; }
  void validate() const;

  // C * 4 pi = 1: the Grad cut-off normalization of the angular cross section.
  static double default_constant();
};

/// G(u, zeta) = C 4 pi |u|^lambda [exp(i beta zeta.u / 2) sinc(beta |u| |zeta| / 2) - 1]
std::complex<double> eval_G(const KernelSpec& spec, const Vec3& u, const Vec3& zeta);

double sinc(double x);

enum class TableMode {
  kAuto,          // lattice when it fits in memory, interpolated otherwise
  kLattice,       // exact per-shell tables indexed by integer |q xi - p zeta|^2
  kInterpolated,  // per-shell tables on a uniform b grid, cubic interpolation
  kDirect,        // radial quadrature for every pair (small grids only)
};

/// Radial integrals of the kernel and their lookup tables for one grid.
///   I(a, b) = int_0^R r^{lambda+2} sinc(a r) sinc(b r) dr
///   J(c)    = int_0^R r^{lambda+2} sinc(c r) dr,      R = truncation L
///   G_hat(xi, zeta) = 16 pi^2 C [I(beta|zeta|/2, |xi - beta zeta/2|) - J(|xi|)]
class KernelCache {
 public:
  struct Tables;

  /// `min_nodes` (>= 64) is the least number of radial quadrature nodes; more
  /// are used when the oscillation of the integrand requires it.
  static KernelCache build(const KernelSpec& spec, const DualGrid& grid, int min_nodes = 256,
                           TableMode mode = TableMode::kAuto);

  const KernelSpec& spec() const;
  const DualGrid& grid() const;
  double radius() const;
  TableMode mode() const;
  const QuadratureRule& radial_rule() const;

  double I(double a, double b) const;
  double J(double c) const;

  /// Direct radial quadrature of G_hat at arbitrary arguments.
  double G_hat_direct(const Vec3& xi, const Vec3& zeta) const;
  /// Table lookup when both arguments are interior lattice points, direct
  /// quadrature otherwise.
  double eval_G_hat(const Vec3& xi, const Vec3& zeta) const;

  const Tables& tables() const { return *tables_; }

 private:
  std::shared_ptr<const Tables> tables_;
};

struct KernelCache::Tables {
  KernelSpec spec;
  DualGrid grid;
  double radius = 0.0;
  TableMode mode = TableMode::kDirect;
  QuadratureRule rule;
  std::vector<double> radial_weight;  // w_r r^{lambda+2}

  int half = 0;  // largest interior index N/2 - 1

  // beta / 2 = p / q (lattice mode only)
  int p = 0, q = 1;
  // shell_table[n][m] = I(a_n, b_m), a_n = p h sqrt(n) / q, b_m = h sqrt(m) / q
  std::vector<std::vector<double>> shell_table;
  // interpolated mode: shell_table[n][i] = I(a_n, i db) with one ghost point
  // at b = -db stored first
  double db = 0.0;
  // j_shell[s] = J(h sqrt(s))
  std::vector<double> j_shell;
};

/// Free-function form of KernelCache::eval_G_hat.
double eval_G_hat(const KernelCache& cache, const Vec3& xi, const Vec3& zeta);

}  // namespace kinetic
