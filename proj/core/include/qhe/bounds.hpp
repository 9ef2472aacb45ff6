#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "qhe/thermal.hpp"
#include "qhe/uncertainty.hpp"
#include "qhe/well.hpp"

namespace qhe {

/// Hermitian operator restricted to a finite basis.
///
/// `square` holds the matrix of A^2 in the same basis. It defaults to the
/// truncated product elements * elements; physical operators supply the
/// exact matrix so that variances do not inherit truncation error.
class TruncatedOperator {
 public:
  explicit TruncatedOperator(Eigen::MatrixXcd elements, std::string label = {},
                             std::optional<Eigen::MatrixXcd> square = std::nullopt);

  Eigen::Index dimension() const { return elements_.rows(); }
  const Eigen::MatrixXcd& elements() const { return elements_; }
  const Eigen::MatrixXcd& square() const { return square_; }
  const std::string& label() const { return label_; }

  /// A + c * identity.
  TruncatedOperator shifted(double c) const;

 private:
  Eigen::MatrixXcd elements_;
  Eigen::MatrixXcd square_;
  std::string label_;
};

/// Pure state with unit norm (checked to 1e-12).
class StateVector {
 public:
  explicit StateVector(Eigen::VectorXcd amplitudes);

  static StateVector basis(Eigen::Index dimension, Eigen::Index index);
  static StateVector normalized(Eigen::VectorXcd amplitudes);

  Eigen::Index dimension() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

 private:
  Eigen::VectorXcd amplitudes_;
};

enum class BoundsMode { eigenstate, thermal };

/// Bounds on Delta X^2 + Delta P^2.
struct BoundsReport {
  double lower = 0.0;
  std::optional<double> central;
  double upper = 0.0;
  BoundsMode mode = BoundsMode::eigenstate;
  /// Closed-form "upper" expression printed for eigenstates; algebraically it
  /// equals the variance sum itself.
  std::optional<double> closed_form_upper;
};

double expectation(const StateVector& state, const TruncatedOperator& op);
double variance(const StateVector& state, const TruncatedOperator& op);

/// (1/2) <{A, B}> - <A><B>.
double covariance(const StateVector& state, const TruncatedOperator& a,
                  const TruncatedOperator& b);

/// Orthonormal vectors spanning the complement of the state, built by
/// modified Gram-Schmidt over the standard basis in order. The lower bound
/// depends on this choice; for a basis state it returns the other basis
/// vectors.
std::vector<Eigen::VectorXcd> orthonormal_complement(const StateVector& state);

/// (1/2) sum_k (|<k|A - <A>|psi>| + |<k|B - <B>|psi>|)^2 over the complement.
/// Never exceeds variance(A) + variance(B).
double mp_lower_bound(const StateVector& state, const TruncatedOperator& a,
                      const TruncatedOperator& b);

/// 2 Var(A - B) / (1 - Cov(A,B)/(dA dB)) - 2 dA dB, which is never below
/// variance(A) + variance(B). Throws DegenerateStateError when a standard
/// deviation vanishes or the correlation reaches one.
double dw_upper_bound(const StateVector& state, const TruncatedOperator& a,
                      const TruncatedOperator& b);

/// Position in the first `dimension` box eigenstates (with exact x^2).
TruncatedOperator position_operator(const WellGeometry& geom, Eigen::Index dimension,
                                    SumConvention convention = SumConvention::literal);

/// Momentum in the first `dimension` box eigenstates (with exact p^2).
TruncatedOperator momentum_operator(const WellGeometry& geom, Eigen::Index dimension,
                                    SumConvention convention = SumConvention::literal);

/// Lower bound for eigenstate n in the complete (untruncated) energy basis:
/// (1/2)(Delta X^2 + Delta P^2) + sum_k |<k|x|n>| |<k|p|n>|.
double eigenstate_mp_lower_bound(const WellGeometry& geom, QuantumLevel n,
                                 SumConvention convention = SumConvention::literal);

/// Requires dimension > 2n, otherwise TruncationError.
BoundsReport eigenstate_sum_variance_bounds(
    const WellGeometry& geom, QuantumLevel n, Eigen::Index dimension,
    SumConvention convention = SumConvention::literal);

struct ThermalBoundsOptions {
  SumConvention convention = SumConvention::literal;
  std::optional<double> pinned_mean_quantum_number;
  VarianceMode central_variance = VarianceMode::erfc_exact;
};

/// Smallest level count D with exp(-alpha beta D^2) < 1e-15.
Eigen::Index minimum_thermal_dimension(const ThermalEnvironment& env);

/// Thermal upper closed form
/// 4L^2/3 - (8 L^2 sqrt(ab)/pi^{5/2})(exp(-ab) - sqrt(pi ab)) + hbar^2 nbar^2 pi^3 / (4 L^2).
double thermal_upper_closed_form(const WellGeometry& geom, const ThermalEnvironment& env,
                                 double mean_quantum_number,
                                 SumConvention convention = SumConvention::literal);

/// lower: Boltzmann average of eigenstate_mp_lower_bound over the first
/// `dimension` levels; central: thermal (Delta X)^2_T + (Delta P)^2_T;
/// upper: thermal_upper_closed_form.
BoundsReport thermal_sum_variance_bounds(const WellGeometry& geom, const ThermalEnvironment& env,
                                         Eigen::Index dimension,
                                         const ThermalBoundsOptions& options = {});

}  // namespace qhe
