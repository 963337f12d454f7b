#include "kinetic/sources.hpp"

#include <cmath>
#include <numbers>

#include "kinetic/error.hpp"

namespace kinetic {

namespace {

bool same_kernel(const KernelSpec& a, const KernelSpec& b) {
  return a.lambda == b.lambda && a.e == b.e && a.C == b.C;
}

void require_thermostat_kernel(const KernelSpec& spec) {
  if (spec.lambda != 0.0 || spec.e != 1.0) {
    throw ValidationError("the thermostat operator needs an elastic Maxwell kernel (lambda = 0, e = 1)");
  }
}

}  // namespace

void ThermostatSchedule::validate() const {
  if (!(T0 >= 0.0) || !std::isfinite(T0)) throw ValidationError("thermostat temperature must be non-negative");
  if (kind == Kind::kDecaying && !(alpha > 0.0)) throw ValidationError("source.thermostat_alpha must be positive");
}

void SourceSpec::validate() const {
  if (kind == Kind::kDiffusion && !(mu_diff > 0.0)) throw ValidationError("source.mu_diff must be positive");
  if (kind == Kind::kThermostat) {
    if (!(theta > 0.0)) throw ValidationError("source.theta must be positive");
    schedule.validate();
  }
  if (!(zeta_prefactor >= 0.0) || !std::isfinite(zeta_prefactor)) {
    throw ValidationError("source.zeta_prefactor must be non-negative");
  }
}

std::string to_string(SourceSpec::Kind kind) {
  switch (kind) {
    case SourceSpec::Kind::kNone: return "none";
    case SourceSpec::Kind::kDiffusion: return "diffusion";
    case SourceSpec::Kind::kThermostat: return "thermostat";
  }
  return "none";
}

SourceSpec::Kind parse_source_kind(const std::string& name) {
  if (name == "none") return SourceSpec::Kind::kNone;
  if (name == "diffusion") return SourceSpec::Kind::kDiffusion;
  if (name == "thermostat") return SourceSpec::Kind::kThermostat;
  throw ValidationError("source.kind must be one of none, diffusion, thermostat; got '" + name + "'");
}

SpectralField apply_diffusion(const SpectralField& f_hat, double mu) {
  SpectralField out(f_hat.grid());
  const auto& sg = f_hat.grid().spectral;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Vec3 z = sg.point(i);
    out[i] = -mu * (z[0] * z[0] + z[1] * z[1] + z[2] * z[2]) * f_hat[i];
  }
  return out;
}

SpectralField thermostat_transform(const DualGrid& grid, double temperature) {
  if (!(temperature >= 0.0)) throw ValidationError("thermostat temperature must be non-negative");
  const double h = grid.velocity.spacing;
  if (temperature >= h * h) {
    const double norm = std::pow(2.0 * std::numbers::pi * temperature, -1.5);
    return to_fourier(sample(grid, [&](const Vec3& v) {
      return norm * std::exp(-(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) / (2.0 * temperature));
    }));
  }
  SpectralField out(grid);
  const double c = std::pow(2.0 * std::numbers::pi, -1.5);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Vec3 z = grid.spectral.point(i);
    out[i] = c * std::exp(-0.5 * temperature * (z[0] * z[0] + z[1] * z[1] + z[2] * z[2]));
  }
  return out;
}

VelocityField thermostat_operator(const VelocityField& f, const ThermostatSchedule& schedule, double t,
                                  const KernelCache& cache) {
  require_thermostat_kernel(cache.spec());
  const double temperature = schedule.value(t);
  if (!(temperature >= 0.0)) throw ValidationError("thermostat temperature is negative");
  const SpectralField m_hat = thermostat_transform(f.grid(), temperature);
  return from_fourier(collide_fourier(to_fourier(f), m_hat, cache));
}

RightHandSide::RightHandSide(KernelCache collision, SourceSpec source, std::optional<KernelCache> linear)
    : collision_(std::move(collision)), source_(source), linear_(std::move(linear)) {
  source_.validate();
  if (source_.kind == SourceSpec::Kind::kThermostat) {
    const KernelSpec& lin = linear_ ? linear_->spec() : collision_.spec();
    require_thermostat_kernel(lin);
    fused_ = !linear_ || same_kernel(lin, collision_.spec());
  }
}

VelocityField RightHandSide::operator()(const VelocityField& f, double t) const {
  const SpectralField f_hat = to_fourier(f);
  SpectralField partner = f_hat;
  partner *= source_.zeta_prefactor;
  SpectralField total(f.grid());
  if (source_.kind == SourceSpec::Kind::kThermostat) {
    const SpectralField m_hat = thermostat_transform(f.grid(), source_.schedule.value(t));
    if (fused_) {
      partner.add_scaled(source_.theta, m_hat);
    } else {
      SpectralField m = m_hat;
      m *= source_.theta;
      total += collide_fourier(f_hat, m, *linear_);
    }
  }
  total += collide_fourier(f_hat, partner, collision_);
  if (source_.kind == SourceSpec::Kind::kDiffusion) total += apply_diffusion(f_hat, source_.mu_diff);
  InverseDiagnostics diag;
  VelocityField out = from_fourier(total, &diag);
  last_residue_ = diag.imag_residue;
  return out;
}

}  // namespace kinetic
