#pragma once

#include <optional>
#include <string>

#include "kinetic/collision.hpp"
#include "kinetic/grid.hpp"
#include "kinetic/kernel.hpp"

namespace kinetic {

/// Background temperature T(t) of the linear thermostat: constant, or
/// T0 exp(-alpha t).
struct ThermostatSchedule {
  enum class Kind { kConstant, kDecaying };
  Kind kind = Kind::kConstant;
  double T0 = 1.0;
  double alpha = 0.0;

  double value(double t) const { return kind == Kind::kConstant ? T0 : T0 * std::exp(-alpha * t); }
  void validate() const;
};

struct SourceSpec {
  enum class Kind { kNone, kDiffusion, kThermostat };
  Kind kind = Kind::kNone;
  double mu_diff = 0.0;  // heat bath strength, rhs += mu Laplacian f
  double theta = 0.0;    // thermostat coupling
  ThermostatSchedule schedule;
  double zeta_prefactor = 1.0;  // multiplies Q(f, f)

  void validate() const;
};

std::string to_string(SourceSpec::Kind kind);
SourceSpec::Kind parse_source_kind(const std::string& name);

/// -mu |zeta|^2 f_hat, the transform of mu Laplacian f.
SpectralField apply_diffusion(const SpectralField& f_hat, double mu);

/// Transform of the thermostat Maxwellian M_T on the spectral lattice. For T
/// below h_v^2 the sampled Maxwellian is not resolved and the closed form
/// (2 pi)^{-3/2} exp(-T |zeta|^2 / 2) is used instead.
SpectralField thermostat_transform(const DualGrid& grid, double temperature);

/// Q(f, M_T(t)): the elastic operator with its partner frozen at the
/// thermostat Maxwellian. `cache` must be an elastic Maxwell kernel.
VelocityField thermostat_operator(const VelocityField& f, const ThermostatSchedule& schedule, double t,
                                  const KernelCache& cache);

/// zeta Q(f, f) + source, assembled in Fourier space with one inverse
/// transform.
class RightHandSide {
 public:
  /// `linear` is the thermostat kernel; when omitted, or when it equals the
  /// collision kernel, the thermostat is folded into the partner slot:
  ///   zeta Q(f, f) + theta Q(f, M) = Q(f, zeta f + theta M).
  RightHandSide(KernelCache collision, SourceSpec source, std::optional<KernelCache> linear = std::nullopt);

  VelocityField operator()(const VelocityField& f, double t) const;

  const KernelCache& collision() const { return collision_; }
  const SourceSpec& source() const { return source_; }
  /// Imaginary residue of the most recent inverse transform.
  double last_residue() const { return last_residue_; }

 private:
  KernelCache collision_;
  SourceSpec source_;
  std::optional<KernelCache> linear_;
  bool fused_ = true;
  mutable double last_residue_ = 0.0;
};

}  // namespace kinetic
