#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <string>

#include "kinetic/grid.hpp"

namespace kinetic {

enum class ConservationMode { kElastic, kInelastic, kLinear, kNone };

ConservationMode parse_conservation_mode(const std::string& name);
std::string to_string(ConservationMode mode);
/// Number of constraint rows: 5, 4, 1 or 0.
int constraint_count(ConservationMode mode);

/// Linear equality constraints C f = a and the orthogonal projection onto
/// them,
///   f = f~ + C^T (C C^T)^{-1} (a - C f~).
class ConstraintSystem {
 public:
  /// Generic form. Throws NumericalError when C C^T is not positive definite.
  ConstraintSystem(Eigen::MatrixXd c, Eigen::VectorXd targets);

  int rows() const { return int(c_.rows()); }
  std::size_t columns() const { return std::size_t(c_.cols()); }
  const Eigen::MatrixXd& matrix() const { return c_; }
  const Eigen::VectorXd& targets() const { return a_; }

  Eigen::VectorXd apply(std::span<const double> x) const;      // C x
  Eigen::VectorXd apply_transpose(const Eigen::VectorXd& y) const;  // C^T y
  /// Solves (C C^T) y = rhs with one step of iterative refinement.
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

  Eigen::VectorXd project(std::span<const double> x) const;
  /// Lambda x = x - C^T (C C^T)^{-1} C x
  Eigen::VectorXd tangent(std::span<const double> x) const;
  /// max |C x - a|
  double residual(std::span<const double> x) const;

 private:
  Eigen::MatrixXd c_;
  Eigen::VectorXd a_;
  Eigen::MatrixXd gram_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

/// Rows w, v_x w, v_y w, v_z w, |v|^2 w as the mode requires.
Eigen::MatrixXd constraint_matrix(const DualGrid& grid, std::span<const double> weights, ConservationMode mode);

/// Builds the constraints with explicit targets (length must match the mode).
ConstraintSystem build_constraints(const DualGrid& grid, std::span<const double> weights, ConservationMode mode,
                                   const Eigen::VectorXd& targets);

/// Targets taken from the discrete moments of `f`.
ConstraintSystem constraints_from_state(std::span<const double> weights, ConservationMode mode,
                                        const VelocityField& f);

VelocityField project(const ConstraintSystem& sys, const VelocityField& f);
VelocityField tangent(const ConstraintSystem& sys, const VelocityField& f);

struct ProjectionReport {
  double idempotence = 0.0;   // max |Lambda(Lambda x) - Lambda x| / |x|
  double annihilation = 0.0;  // max |C Lambda x| / (|C| |x|)
  double symmetry = 0.0;      // |<Lambda x, y> - <x, Lambda y>| / (|x| |y|)
  double tolerance = 1e-12;
  bool passed() const { return idempotence <= tolerance && annihilation <= tolerance && symmetry <= tolerance; }
};

/// Checks the projector identities on random vectors without forming the
/// N^3 x N^3 matrix.
ProjectionReport projection_operator_checks(const ConstraintSystem& sys, int samples = 10, std::uint64_t seed = 1);

}  // namespace kinetic
