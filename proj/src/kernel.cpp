#include "kinetic/kernel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kinetic/error.hpp"

namespace kinetic {

namespace {

constexpr double kPi = std::numbers::pi;

// Largest table (entries) built in automatic mode before falling back to
// interpolation.
constexpr double kMaxLatticeEntries = 2.5e7;
// Radians of integrand oscillation allowed per 16-node Gauss panel.
constexpr double kPhasePerPanel = 10.0;
constexpr int kPanelNodes = 16;
// R * db for the interpolated tables.
constexpr double kInterpolationStep = 0.025;

double norm(const Vec3& x) { return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]); }

// beta / 2 as p / q with small q, if such a fraction exists.
bool small_fraction(double x, int& p, int& q) {
  for (int den = 1; den <= 16; ++den) {
    const double num = std::round(x * den);
    if (std::abs(num / den - x) < 1e-14) {
      p = int(num);
      q = den;
      return true;
    }
  }
  return false;
}

bool lattice_index(const Vec3& x, double h, int half, std::array<int, 3>& idx) {
  for (int i = 0; i < 3; ++i) {
    const double s = x[i] / h;
    const double r = std::round(s);
    if (std::abs(s - r) > 1e-9 || std::abs(r) > half) return false;
    idx[i] = int(r);
  }
  return true;
}

// out(n, c) = sum_r A(n, r) sinc(b_c r) for a block of b values.
Eigen::MatrixXd sinc_products(const Eigen::MatrixXd& a_rows, const std::vector<double>& nodes,
                              const std::vector<double>& b) {
  Eigen::MatrixXd s(nodes.size(), b.size());
  for (std::size_t c = 0; c < b.size(); ++c)
    for (std::size_t r = 0; r < nodes.size(); ++r) s(Eigen::Index(r), Eigen::Index(c)) = sinc(b[c] * nodes[r]);
  return a_rows * s;
}

}  // namespace

double KernelSpec::default_constant() { return 1.0 / (4.0 * kPi); }

void KernelSpec::validate() const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ValidationError("kernel.lambda must lie in [0, 1]");
  if (!(e >= 0.0 && e <= 1.0)) throw ValidationError("kernel.e must lie in [0, 1]");
  if (!(C > 0.0) || !std::isfinite(C)) throw ValidationError("kernel.C_lambda must be positive");
  if (!(truncation > 0.0 && truncation <= 4.0)) throw ValidationError("kernel.truncation must lie in (0, 4]");
}

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

std::complex<double> eval_G(const KernelSpec& spec, const Vec3& u, const Vec3& zeta) {
  const double beta = spec.beta();
  const double ru = norm(u), rz = norm(zeta);
  const double dot = u[0] * zeta[0] + u[1] * zeta[1] + u[2] * zeta[2];
  const std::complex<double> phase = std::polar(1.0, 0.5 * beta * dot);
  const double amp = spec.C * 4.0 * kPi * std::pow(ru, spec.lambda);
  return amp * (phase * sinc(0.5 * beta * ru * rz) - 1.0);
}

KernelCache KernelCache::build(const KernelSpec& spec, const DualGrid& grid, int min_nodes, TableMode mode) {
  spec.validate();
  if (min_nodes < 64) throw ValidationError("kernel.table_resolution must be at least 64");

  auto t = std::make_shared<Tables>();
  t->spec = spec;
  t->grid = grid;
  t->radius = spec.radius(grid.velocity.half_width);
  t->half = grid.n() / 2 - 1;

  const double beta = spec.beta();
  const double h = grid.spectral.spacing;
  const double R = t->radius;
  const double kmax = std::sqrt(3.0) * t->half * h;
  // a + b <= beta kmax / 2 + kmax (1 + beta / 2)
  const double phase = R * kmax * (1.0 + beta);
  const int panels = std::max({1, int(std::ceil(phase / kPhasePerPanel)),
                               (min_nodes + kPanelNodes - 1) / kPanelNodes});
  t->rule = composite_gauss_legendre(panels, kPanelNodes, 0.0, R);
  t->radial_weight.resize(t->rule.size());
  for (std::size_t r = 0; r < t->rule.size(); ++r)
    t->radial_weight[r] = t->rule.weights[r] * std::pow(t->rule.nodes[r], spec.lambda + 2.0);

  const int max_shell = 3 * t->half * t->half;
  t->j_shell.resize(std::size_t(max_shell) + 1);
  for (int s = 0; s <= max_shell; ++s) {
    const double c = h * std::sqrt(double(s));
    double acc = 0.0;
    for (std::size_t r = 0; r < t->rule.size(); ++r) acc += t->radial_weight[r] * sinc(c * t->rule.nodes[r]);
    t->j_shell[std::size_t(s)] = acc;
  }

  int p = 0, q = 1;
  const bool rational = small_fraction(0.5 * beta, p, q);
  const double bmax_index = double(q + p) * t->half;
  const double lattice_entries = double(max_shell + 1) * (3.0 * bmax_index * bmax_index + 1.0);
  if (mode == TableMode::kAuto) {
    mode = (rational && lattice_entries <= kMaxLatticeEntries) ? TableMode::kLattice : TableMode::kInterpolated;
  }
  if (mode == TableMode::kLattice && !rational) {
    throw ValidationError("lattice kernel tables need beta/2 to be a fraction with denominator <= 16");
  }
  t->mode = mode;
  KernelCache cache;
  if (mode == TableMode::kDirect) {
    cache.tables_ = std::move(t);
    return cache;
  }

  // Row n of A holds w_r r^{lambda+2} sinc(a_n r).
  const std::size_t nodes = t->rule.size();
  Eigen::MatrixXd a_rows(max_shell + 1, Eigen::Index(nodes));
  for (int n = 0; n <= max_shell; ++n) {
    const double a = 0.5 * beta * h * std::sqrt(double(n));
    for (std::size_t r = 0; r < nodes; ++r)
      a_rows(n, Eigen::Index(r)) = t->radial_weight[r] * sinc(a * t->rule.nodes[r]);
  }

  std::vector<double> b_values;
  if (mode == TableMode::kLattice) {
    t->p = p;
    t->q = q;
    const int max_m = int(3.0 * bmax_index * bmax_index + 0.5);
    for (int m = 0; m <= max_m; ++m) b_values.push_back(h * std::sqrt(double(m)) / q);
  } else {
    const double bmax = kmax * (1.0 + 0.5 * beta);
    t->db = kInterpolationStep / R;
    const int count = int(std::ceil(bmax / t->db)) + 3;
    for (int i = -1; i <= count; ++i) b_values.push_back(std::abs(i * t->db));
  }

  t->shell_table.assign(std::size_t(max_shell) + 1, std::vector<double>(b_values.size()));
  constexpr std::size_t kBlock = 1024;
  for (std::size_t start = 0; start < b_values.size(); start += kBlock) {
    const std::size_t stop = std::min(b_values.size(), start + kBlock);
    const std::vector<double> block(b_values.begin() + long(start), b_values.begin() + long(stop));
    const Eigen::MatrixXd prod = sinc_products(a_rows, t->rule.nodes, block);
    for (int n = 0; n <= max_shell; ++n)
      for (std::size_t c = 0; c < block.size(); ++c) t->shell_table[std::size_t(n)][start + c] = prod(n, Eigen::Index(c));
  }
  cache.tables_ = std::move(t);
  return cache;
}

const KernelSpec& KernelCache::spec() const { return tables_->spec; }
const DualGrid& KernelCache::grid() const { return tables_->grid; }
double KernelCache::radius() const { return tables_->radius; }
TableMode KernelCache::mode() const { return tables_->mode; }
const QuadratureRule& KernelCache::radial_rule() const { return tables_->rule; }

double KernelCache::I(double a, double b) const {
  const auto& t = *tables_;
  double acc = 0.0;
  for (std::size_t r = 0; r < t.rule.size(); ++r) {
    const double x = t.rule.nodes[r];
    acc += t.radial_weight[r] * sinc(a * x) * sinc(b * x);
  }
  return acc;
}

double KernelCache::J(double c) const {
  const auto& t = *tables_;
  double acc = 0.0;
  for (std::size_t r = 0; r < t.rule.size(); ++r) acc += t.radial_weight[r] * sinc(c * t.rule.nodes[r]);
  return acc;
}

double KernelCache::G_hat_direct(const Vec3& xi, const Vec3& zeta) const {
  const auto& t = *tables_;
  const double beta = t.spec.beta();
  const Vec3 shifted{xi[0] - 0.5 * beta * zeta[0], xi[1] - 0.5 * beta * zeta[1], xi[2] - 0.5 * beta * zeta[2]};
  const double pref = 16.0 * kPi * kPi * t.spec.C;
  return pref * (I(0.5 * beta * norm(zeta), norm(shifted)) - J(norm(xi)));
}

double KernelCache::eval_G_hat(const Vec3& xi, const Vec3& zeta) const {
  const auto& t = *tables_;
  std::array<int, 3> jx{}, kz{};
  const double h = t.grid.spectral.spacing;
  if (t.mode == TableMode::kDirect || !lattice_index(xi, h, t.half, jx) || !lattice_index(zeta, h, t.half, kz)) {
    return G_hat_direct(xi, zeta);
  }
  const int n = kz[0] * kz[0] + kz[1] * kz[1] + kz[2] * kz[2];
  const int s = jx[0] * jx[0] + jx[1] * jx[1] + jx[2] * jx[2];
  const auto& row = t.shell_table[std::size_t(n)];
  double ival = 0.0;
  if (t.mode == TableMode::kLattice) {
    int m = 0;
    for (int i = 0; i < 3; ++i) {
      const int d = t.q * jx[i] - t.p * kz[i];
      m += d * d;
    }
    ival = row[std::size_t(m)];
  } else {
    const double beta = t.spec.beta();
    double b2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double d = jx[i] - 0.5 * beta * kz[i];
      b2 += d * d;
    }
    const double x = std::sqrt(b2) * h / t.db;
    const int i0 = int(x);
    const double f = x - i0;
    // stored index of b = i db is i + 1
    const double* y = row.data() + i0;
    ival = -f * (f - 1) * (f - 2) / 6 * y[0] + (f + 1) * (f - 1) * (f - 2) / 2 * y[1] -
           (f + 1) * f * (f - 2) / 2 * y[2] + (f + 1) * f * (f - 1) / 6 * y[3];
  }
  return 16.0 * kPi * kPi * t.spec.C * (ival - t.j_shell[std::size_t(s)]);
}

double eval_G_hat(const KernelCache& cache, const Vec3& xi, const Vec3& zeta) { return cache.eval_G_hat(xi, zeta); }

}  // namespace kinetic
