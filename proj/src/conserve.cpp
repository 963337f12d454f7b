#include "kinetic/conserve.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "kinetic/error.hpp"

namespace kinetic {

namespace {

Eigen::Map<const Eigen::VectorXd> view(std::span<const double> x) {
  return {x.data(), Eigen::Index(x.size())};
}

}  // namespace

ConservationMode parse_conservation_mode(const std::string& name) {
  if (name == "elastic") return ConservationMode::kElastic;
  if (name == "inelastic") return ConservationMode::kInelastic;
  if (name == "linear") return ConservationMode::kLinear;
  if (name == "none") return ConservationMode::kNone;
  throw ValidationError("conserve.mode must be one of elastic, inelastic, linear, none; got '" + name + "'");
}

std::string to_string(ConservationMode mode) {
  switch (mode) {
    case ConservationMode::kElastic: return "elastic";
    case ConservationMode::kInelastic: return "inelastic";
    case ConservationMode::kLinear: return "linear";
    case ConservationMode::kNone: return "none";
  }
  return "none";
}

int constraint_count(ConservationMode mode) {
  switch (mode) {
    case ConservationMode::kElastic: return 5;
    case ConservationMode::kInelastic: return 4;
    case ConservationMode::kLinear: return 1;
    case ConservationMode::kNone: return 0;
  }
  return 0;
}

ConstraintSystem::ConstraintSystem(Eigen::MatrixXd c, Eigen::VectorXd targets) : c_(std::move(c)), a_(std::move(targets)) {
  if (a_.size() != c_.rows()) throw ValidationError("constraint targets do not match the number of rows");
  if (c_.rows() == 0) return;
  gram_ = c_ * c_.transpose();
  llt_.compute(gram_);
  if (llt_.info() != Eigen::Success) throw NumericalError("C C^T is not positive definite");
  // A Cholesky factor that succeeds on a numerically singular matrix is no
  // better than a failure.
  const Eigen::VectorXd diag = llt_.matrixL().toDenseMatrix().diagonal();
  if (diag.minCoeff() <= 1e-13 * diag.maxCoeff()) throw NumericalError("C C^T is numerically singular");
}

Eigen::VectorXd ConstraintSystem::apply(std::span<const double> x) const {
  if (x.size() != columns()) throw ValidationError("vector length does not match the constraint system");
  return c_ * view(x);
}

Eigen::VectorXd ConstraintSystem::apply_transpose(const Eigen::VectorXd& y) const { return c_.transpose() * y; }

Eigen::VectorXd ConstraintSystem::solve(const Eigen::VectorXd& rhs) const {
  Eigen::VectorXd y = llt_.solve(rhs);
  y += llt_.solve(rhs - gram_ * y);
  return y;
}

Eigen::VectorXd ConstraintSystem::project(std::span<const double> x) const {
  Eigen::VectorXd f = view(x);
  if (rows() == 0) return f;
  f += apply_transpose(solve(a_ - c_ * f));
  // The correction is computed in floating point; a second pass removes the
  // rounding left by the first.
  f += apply_transpose(solve(a_ - c_ * f));
  return f;
}

Eigen::VectorXd ConstraintSystem::tangent(std::span<const double> x) const {
  Eigen::VectorXd f = view(x);
  if (rows() == 0) return f;
  f -= apply_transpose(solve(c_ * f));
  return f;
}

double ConstraintSystem::residual(std::span<const double> x) const {
  if (rows() == 0) return 0.0;
  return (apply(x) - a_).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd constraint_matrix(const DualGrid& grid, std::span<const double> weights, ConservationMode mode) {
  const int rows = constraint_count(mode);
  if (weights.size() != grid.size()) throw ValidationError("weights do not match the grid");
  Eigen::MatrixXd c(rows, Eigen::Index(grid.size()));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Vec3 v = grid.velocity.point(j);
    const double w = weights[j];
    const Eigen::Index col = Eigen::Index(j);
    if (rows >= 1) c(0, col) = w;
    if (rows >= 4) {
      c(1, col) = v[0] * w;
      c(2, col) = v[1] * w;
      c(3, col) = v[2] * w;
    }
    if (rows == 5) c(4, col) = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) * w;
  }
  return c;
}

ConstraintSystem build_constraints(const DualGrid& grid, std::span<const double> weights, ConservationMode mode,
                                   const Eigen::VectorXd& targets) {
  if (targets.size() != constraint_count(mode)) {
    throw ValidationError("conserve." + to_string(mode) + " needs " + std::to_string(constraint_count(mode)) +
                          " targets");
  }
  return ConstraintSystem(constraint_matrix(grid, weights, mode), targets);
}

ConstraintSystem constraints_from_state(std::span<const double> weights, ConservationMode mode,
                                        const VelocityField& f) {
  Eigen::MatrixXd c = constraint_matrix(f.grid(), weights, mode);
  Eigen::VectorXd a = c * view(f.values());
  return ConstraintSystem(std::move(c), std::move(a));
}

VelocityField project(const ConstraintSystem& sys, const VelocityField& f) {
  const Eigen::VectorXd p = sys.project(f.values());
  return VelocityField(f.grid(), std::vector<double>(p.data(), p.data() + p.size()));
}

VelocityField tangent(const ConstraintSystem& sys, const VelocityField& f) {
  const Eigen::VectorXd p = sys.tangent(f.values());
  return VelocityField(f.grid(), std::vector<double>(p.data(), p.data() + p.size()));
}

ProjectionReport projection_operator_checks(const ConstraintSystem& sys, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const std::size_t m = sys.columns();
  auto random_vector = [&] {
    Eigen::VectorXd x(Eigen::Index(m), 1);
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = normal(rng);
    return x;
  };
  auto span_of = [](const Eigen::VectorXd& x) { return std::span<const double>(x.data(), std::size_t(x.size())); };
  ProjectionReport r;
  const double c_norm = sys.rows() ? sys.matrix().norm() : 1.0;
  for (int s = 0; s < samples; ++s) {
    const Eigen::VectorXd x = random_vector();
    const Eigen::VectorXd y = random_vector();
    const Eigen::VectorXd lx = sys.tangent(span_of(x));
    const Eigen::VectorXd ly = sys.tangent(span_of(y));
    const Eigen::VectorXd llx = sys.tangent(span_of(lx));
    r.idempotence = std::max(r.idempotence, (llx - lx).cwiseAbs().maxCoeff() / x.cwiseAbs().maxCoeff());
    if (sys.rows() > 0) {
      r.annihilation = std::max(r.annihilation, (sys.matrix() * lx).norm() / (c_norm * x.norm()));
    }
    r.symmetry = std::max(r.symmetry, std::abs(lx.dot(y) - x.dot(ly)) / (x.norm() * y.norm()));
  }
  return r;
}

}  // namespace kinetic
