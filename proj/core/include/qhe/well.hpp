#pragma once

#include "qhe/constants.hpp"
#include "qhe/uncertainty.hpp"

namespace qhe {

/// A 1-D infinite well occupying x in [0, 2L].
class WellGeometry {
 public:
  /// Throws DomainError unless half_width > 0, mass > 0 and both constants > 0.
  explicit WellGeometry(double half_width, double mass = kElectronMass,
                        PhysicalConstants constants = kCodata2018);

  double half_width() const { return half_width_; }
  double width() const { return 2.0 * half_width_; }
  double mass() const { return mass_; }
  const PhysicalConstants& constants() const { return constants_; }
  double hbar() const { return constants_.hbar; }
  double k_B() const { return constants_.k_B; }

  /// Level spacing scale: E_n = n^2 * alpha = n^2 pi^2 hbar^2 / (2 m (2L)^2).
  double alpha() const { return alpha_; }

  /// The same well in scaled units: L = m = hbar = k_B = 1.
  WellGeometry scaled() const;

  /// Energy unit of the scaled frame, hbar^2 / (m L^2).
  double scaled_energy_unit() const;

 private:
  double half_width_;
  double mass_;
  PhysicalConstants constants_;
  double alpha_;
};

/// Principal quantum number, n >= 1.
class QuantumLevel {
 public:
  explicit QuantumLevel(long n);
  long value() const { return n_; }
  double as_double() const { return static_cast<double>(n_); }

 private:
  long n_;
};

struct EigenMoments {
  double mean_x = 0.0;
  double mean_x2 = 0.0;
  double mean_p = 0.0;
  double mean_p2 = 0.0;
};

double energy_level(const WellGeometry& geom, QuantumLevel n);

/// E_{2n} of the well after a barrier is inserted at its centre; equals
/// energy_level(geom, 2n).
double doubled_well_energy(const WellGeometry& geom, QuantumLevel n);

/// sqrt(1/L) sin(n pi x / 2L). Throws DomainError for x outside [0, 2L].
double wavefunction_value(const WellGeometry& geom, QuantumLevel n, double x);

EigenMoments eigenstate_moments(const WellGeometry& geom, QuantumLevel n);

/// Delta x Delta p = (hbar/2) sqrt((n pi)^2/3 - 2).
UncertaintyPair eigenstate_uncertainty(const WellGeometry& geom, QuantumLevel n);

/// <m|x|n>: L on the diagonal, zero when m + n is even and
/// -16 L m n / (pi^2 (m^2 - n^2)^2) otherwise.
double position_matrix_element(const WellGeometry& geom, QuantumLevel m, QuantumLevel n);

/// Real coefficient c of the purely imaginary <m|p|n> = i c;
/// c = -2 hbar m n / (L (m^2 - n^2)) when m + n is odd, zero otherwise.
double momentum_matrix_element(const WellGeometry& geom, QuantumLevel m, QuantumLevel n);

/// <m|x^2|n>.
double position_square_matrix_element(const WellGeometry& geom, QuantumLevel m,
                                       QuantumLevel n);

/// <m|p^2|n>, diagonal in the energy basis.
double momentum_square_matrix_element(const WellGeometry& geom, QuantumLevel m,
                                      QuantumLevel n);

}  // namespace qhe
