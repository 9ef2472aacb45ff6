#include "qhe/well.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qhe/errors.hpp"

namespace qhe {
namespace {

constexpr double kPi = std::numbers::pi;

bool parity_odd(long m, long n) { return ((m + n) & 1L) != 0; }

}  // namespace

WellGeometry::WellGeometry(double half_width, double mass, PhysicalConstants constants)
    : half_width_(half_width), mass_(mass), constants_(constants) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw DomainError("WellGeometry: half-width must be positive and finite");
  }
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw DomainError("WellGeometry: mass must be positive and finite");
  }
  if (!(constants.hbar > 0.0) || !(constants.k_B > 0.0)) {
    throw DomainError("WellGeometry: hbar and k_B must be positive");
  }
  const double w = 2.0 * half_width_;
  alpha_ = kPi * kPi * constants_.hbar * constants_.hbar / (2.0 * mass_ * w * w);
}

WellGeometry WellGeometry::scaled() const { return WellGeometry(1.0, 1.0, kReducedUnits); }

double WellGeometry::scaled_energy_unit() const {
  return constants_.hbar * constants_.hbar / (mass_ * half_width_ * half_width_);
}

QuantumLevel::QuantumLevel(long n) : n_(n) {
  if (n < 1) throw DomainError("QuantumLevel: n must be >= 1, got " + std::to_string(n));
}

double energy_level(const WellGeometry& geom, QuantumLevel n) {
  const double k = n.as_double();
  return k * k * geom.alpha();
}

double doubled_well_energy(const WellGeometry& geom, QuantumLevel n) {
  return energy_level(geom, QuantumLevel(2 * n.value()));
}

double wavefunction_value(const WellGeometry& geom, QuantumLevel n, double x) {
  const double L = geom.half_width();
  if (!(x >= 0.0 && x <= 2.0 * L)) {
    throw DomainError("wavefunction_value: x outside [0, 2L]");
  }
  // Exact nodes at the walls.
  if (x == 0.0 || x == 2.0 * L) return 0.0;
  return std::sqrt(1.0 / L) * std::sin(n.as_double() * kPi * x / (2.0 * L));
}

EigenMoments eigenstate_moments(const WellGeometry& geom, QuantumLevel n) {
  const double L = geom.half_width();
  const double k = n.as_double();
  const double hbar = geom.hbar();
  EigenMoments m;
  m.mean_x = L;
  m.mean_x2 = 4.0 * L * L * (1.0 / 3.0 - 1.0 / (2.0 * k * k * kPi * kPi));
  m.mean_p = 0.0;
  m.mean_p2 = k * k * kPi * kPi * hbar * hbar / (4.0 * L * L);
  return m;
}

UncertaintyPair eigenstate_uncertainty(const WellGeometry& geom, QuantumLevel n) {
  const double L = geom.half_width();
  const double k = n.as_double();
  // Var x = L^2 (1/3 - 2/(n pi)^2), written so no cancellation against <x>^2.
  const double var_x = L * L * (1.0 / 3.0 - 2.0 / (k * k * kPi * kPi));
  const double delta_p = k * kPi * geom.hbar() / (2.0 * L);
  return UncertaintyPair::from(std::sqrt(var_x), delta_p, UncertaintyMode::eigenstate);
}

double position_matrix_element(const WellGeometry& geom, QuantumLevel m, QuantumLevel n) {
  const double L = geom.half_width();
  if (m.value() == n.value()) return L;
  if (!parity_odd(m.value(), n.value())) return 0.0;
  const double a = m.as_double();
  const double b = n.as_double();
  const double d = a * a - b * b;
  return -16.0 * L * a * b / (kPi * kPi * d * d);
}

double momentum_matrix_element(const WellGeometry& geom, QuantumLevel m, QuantumLevel n) {
  if (m.value() == n.value() || !parity_odd(m.value(), n.value())) return 0.0;
  const double a = m.as_double();
  const double b = n.as_double();
  return -2.0 * geom.hbar() * a * b / (geom.half_width() * (a * a - b * b));
}

double position_square_matrix_element(const WellGeometry& geom, QuantumLevel m,
                                       QuantumLevel n) {
  const double L = geom.half_width();
  if (m.value() == n.value()) return eigenstate_moments(geom, n).mean_x2;
  const double a = m.as_double();
  const double b = n.as_double();
  const double d = a * a - b * b;
  const double sign = parity_odd(m.value(), n.value()) ? -1.0 : 1.0;
  return sign * 32.0 * L * L * a * b / (kPi * kPi * d * d);
}

double momentum_square_matrix_element(const WellGeometry& geom, QuantumLevel m,
                                      QuantumLevel n) {
  if (m.value() != n.value()) return 0.0;
  return eigenstate_moments(geom, n).mean_p2;
}

UncertaintyPair UncertaintyPair::in_convention(const WellGeometry& geom,
                                               SumConvention convention) const {
  if (convention == SumConvention::literal) return *this;
  const double L = geom.half_width();
  return from(delta_x / L, delta_p * L / geom.hbar(), mode);
}

}  // namespace qhe
