#include "qhe/bounds.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qhe/errors.hpp"
#include "qhe/numerics.hpp"

namespace qhe {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kHermitianTol = 1e-12;
constexpr double kNormTol = 1e-12;
constexpr double kDegenerateTol = 1e-12;

void require_same_dimension(const StateVector& s, const TruncatedOperator& a,
                            const TruncatedOperator& b) {
  if (a.dimension() != s.dimension() || b.dimension() != s.dimension()) {
    throw DimensionError("operator and state dimensions differ (" +
                         std::to_string(a.dimension()) + ", " + std::to_string(b.dimension()) +
                         " vs " + std::to_string(s.dimension()) + ")");
  }
}

// Typical size of A^2, used to judge whether a variance is zero.
double operator_scale(const TruncatedOperator& op) {
  const double e = op.elements().cwiseAbs().maxCoeff();
  return std::max(e * e, op.square().cwiseAbs().maxCoeff());
}

const WellGeometry frame(const WellGeometry& geom, SumConvention convention) {
  return convention == SumConvention::scaled ? geom.scaled() : geom;
}

}  // namespace

TruncatedOperator::TruncatedOperator(Eigen::MatrixXcd elements, std::string label,
                                     std::optional<Eigen::MatrixXcd> square)
    : elements_(std::move(elements)), label_(std::move(label)) {
  if (elements_.rows() != elements_.cols()) {
    throw DimensionError("TruncatedOperator: matrix must be square");
  }
  if (elements_.rows() < 2) throw DimensionError("TruncatedOperator: dimension must be >= 2");
  const double scale = std::max(1.0, elements_.cwiseAbs().maxCoeff());
  if ((elements_ - elements_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol * scale) {
    throw DimensionError("TruncatedOperator '" + label_ + "': matrix is not Hermitian");
  }
  if (square) {
    if (square->rows() != elements_.rows() || square->cols() != elements_.cols()) {
      throw DimensionError("TruncatedOperator: square matrix has the wrong shape");
    }
    square_ = std::move(*square);
  } else {
    square_ = elements_ * elements_;
  }
}

TruncatedOperator TruncatedOperator::shifted(double c) const {
  const auto id = Eigen::MatrixXcd::Identity(dimension(), dimension());
  Eigen::MatrixXcd sq = square_ + 2.0 * c * elements_ + c * c * id;
  return TruncatedOperator(elements_ + c * id, label_, std::move(sq));
}

StateVector::StateVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) throw DimensionError("StateVector: empty");
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTol) {
    throw DomainError("StateVector: amplitudes must have unit norm");
  }
}

StateVector StateVector::basis(Eigen::Index dimension, Eigen::Index index) {
  if (index < 0 || index >= dimension) throw DimensionError("StateVector::basis: bad index");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dimension);
  v(index) = 1.0;
  return StateVector(std::move(v));
}

StateVector StateVector::normalized(Eigen::VectorXcd amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0)) throw DomainError("StateVector::normalized: zero vector");
  return StateVector(amplitudes / n);
}

double expectation(const StateVector& state, const TruncatedOperator& op) {
  const auto& psi = state.amplitudes();
  return psi.dot(op.elements() * psi).real();
}

double variance(const StateVector& state, const TruncatedOperator& op) {
  const auto& psi = state.amplitudes();
  const double mean = expectation(state, op);
  const double second = psi.dot(op.square() * psi).real();
  return std::max(0.0, second - mean * mean);
}

double covariance(const StateVector& state, const TruncatedOperator& a,
                  const TruncatedOperator& b) {
  require_same_dimension(state, a, b);
  const auto& psi = state.amplitudes();
  const Eigen::VectorXcd a_psi = a.elements() * psi;
  const Eigen::VectorXcd b_psi = b.elements() * psi;
  // (1/2)<psi|AB + BA|psi> = Re <A psi | B psi> for Hermitian A.
  return a_psi.dot(b_psi).real() - expectation(state, a) * expectation(state, b);
}

std::vector<Eigen::VectorXcd> orthonormal_complement(const StateVector& state) {
  const Eigen::Index dim = state.dimension();
  std::vector<Eigen::VectorXcd> basis;
  basis.reserve(static_cast<std::size_t>(dim));
  basis.push_back(state.amplitudes());
  for (Eigen::Index k = 0; k < dim && static_cast<Eigen::Index>(basis.size()) < dim; ++k) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Unit(dim, k);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : basis) v -= u.dot(v) * u;
    }
    const double norm = v.norm();
    if (norm > 1e-8) basis.push_back(v / norm);
  }
  basis.erase(basis.begin());
  return basis;
}

double mp_lower_bound(const StateVector& state, const TruncatedOperator& a,
                      const TruncatedOperator& b) {
  require_same_dimension(state, a, b);
  const auto& psi = state.amplitudes();
  const Eigen::VectorXcd a_bar = a.elements() * psi - expectation(state, a) * psi;
  const Eigen::VectorXcd b_bar = b.elements() * psi - expectation(state, b) * psi;
  double total = 0.0;
  for (const auto& u : orthonormal_complement(state)) {
    const double s = std::abs(u.dot(a_bar)) + std::abs(u.dot(b_bar));
    total += s * s;
  }
  return 0.5 * total;
}

double dw_upper_bound(const StateVector& state, const TruncatedOperator& a,
                      const TruncatedOperator& b) {
  require_same_dimension(state, a, b);
  const double var_a = variance(state, a);
  const double var_b = variance(state, b);
  const double da = std::sqrt(var_a);
  const double db = std::sqrt(var_b);
  if (var_a <= kDegenerateTol * operator_scale(a) || var_b <= kDegenerateTol * operator_scale(b)) {
    throw DegenerateStateError("dw_upper_bound: zero variance, the reverse bound is undefined");
  }
  const double cov = covariance(state, a, b);
  const double denom = 1.0 - cov / (da * db);
  if (denom <= kDegenerateTol) {
    throw DegenerateStateError("dw_upper_bound: Cov(A,B) = dA dB, the reverse bound is undefined");
  }
  const double var_diff = var_a + var_b - 2.0 * cov;
  return 2.0 * var_diff / denom - 2.0 * da * db;
}

TruncatedOperator position_operator(const WellGeometry& geom, Eigen::Index dimension,
                                    SumConvention convention) {
  const WellGeometry g = frame(geom, convention);
  Eigen::MatrixXcd x(dimension, dimension);
  Eigen::MatrixXcd x2(dimension, dimension);
  for (Eigen::Index i = 0; i < dimension; ++i) {
    for (Eigen::Index j = 0; j < dimension; ++j) {
      const QuantumLevel m(i + 1), n(j + 1);
      x(i, j) = position_matrix_element(g, m, n);
      x2(i, j) = position_square_matrix_element(g, m, n);
    }
  }
  return TruncatedOperator(std::move(x), "X", std::move(x2));
}

TruncatedOperator momentum_operator(const WellGeometry& geom, Eigen::Index dimension,
                                    SumConvention convention) {
  const WellGeometry g = frame(geom, convention);
  Eigen::MatrixXcd p(dimension, dimension);
  Eigen::MatrixXcd p2(dimension, dimension);
  for (Eigen::Index i = 0; i < dimension; ++i) {
    for (Eigen::Index j = 0; j < dimension; ++j) {
      const QuantumLevel m(i + 1), n(j + 1);
      p(i, j) = cd(0.0, momentum_matrix_element(g, m, n));
      p2(i, j) = momentum_square_matrix_element(g, m, n);
    }
  }
  return TruncatedOperator(std::move(p), "P", std::move(p2));
}

double eigenstate_mp_lower_bound(const WellGeometry& geom, QuantumLevel n,
                                 SumConvention convention) {
  const WellGeometry g = frame(geom, convention);
  const auto u = eigenstate_uncertainty(g, n);
  const long nv = n.value();
  auto cross = [&](long k) {
    const QuantumLevel level(k);
    return std::abs(position_matrix_element(g, level, n)) *
           std::abs(momentum_matrix_element(g, level, n));
  };
  double below = 0.0;
  for (long k = (nv % 2 == 0) ? 1 : 2; k < nv; k += 2) below += cross(k);
  const auto above =
      numerics::sum_series([&](long j) { return cross(nv + 2 * j - 1); }, 1e-16);
  if (!above.converged) throw ConvergenceError("eigenstate_mp_lower_bound: series");
  return 0.5 * (u.delta_x * u.delta_x + u.delta_p * u.delta_p) + below + above.value;
}

BoundsReport eigenstate_sum_variance_bounds(const WellGeometry& geom, QuantumLevel n,
                                            Eigen::Index dimension, SumConvention convention) {
  if (dimension <= 2 * n.value()) {
    throw TruncationError("eigenstate_sum_variance_bounds: dimension must exceed 2n");
  }
  const WellGeometry g = frame(geom, convention);
  const auto x = position_operator(g, dimension);
  const auto p = momentum_operator(g, dimension);
  const auto psi = StateVector::basis(dimension, n.value() - 1);

  const double L = g.half_width();
  const double k = n.as_double();
  const double hbar = g.hbar();
  const double closed = L * L / 3.0 - 2.0 * L * L / (k * kPi * k * kPi) +
                        kPi * kPi * hbar * hbar * k * k / (4.0 * L * L);
  const auto u = eigenstate_uncertainty(g, n);

  BoundsReport r;
  r.mode = BoundsMode::eigenstate;
  r.lower = mp_lower_bound(psi, x, p);
  r.central = u.delta_x * u.delta_x + u.delta_p * u.delta_p;
  r.upper = dw_upper_bound(psi, x, p);
  r.closed_form_upper = closed;
  return r;
}

Eigen::Index minimum_thermal_dimension(const ThermalEnvironment& env) {
  const double needed = std::log(1e15) / env.alpha_beta();
  return static_cast<Eigen::Index>(std::floor(std::sqrt(needed))) + 1;
}

double thermal_upper_closed_form(const WellGeometry& geom, const ThermalEnvironment& env,
                                 double n_bar, SumConvention convention) {
  const WellGeometry g = frame(geom, convention);
  const double L = g.half_width();
  const double hbar = g.hbar();
  const double ab = env.alpha_beta();
  return 4.0 * L * L / 3.0 -
         8.0 * L * L * std::sqrt(ab) / std::pow(kPi, 2.5) * (std::exp(-ab) - std::sqrt(kPi * ab)) +
         hbar * hbar * n_bar * n_bar * kPi * kPi * kPi / (4.0 * L * L);
}

BoundsReport thermal_sum_variance_bounds(const WellGeometry& geom, const ThermalEnvironment& env,
                                         Eigen::Index dimension,
                                         const ThermalBoundsOptions& options) {
  const double ab = env.alpha_beta();
  const double d = static_cast<double>(dimension);
  if (dimension < 1 || !(std::exp(-ab * d * d) < 1e-15)) {
    throw TruncationError("thermal_sum_variance_bounds: need exp(-alpha beta dim^2) < 1e-15, "
                          "use dim >= " + std::to_string(minimum_thermal_dimension(env)));
  }
  const WellGeometry g = frame(geom, options.convention);
  const double n_bar = options.pinned_mean_quantum_number.value_or(mean_quantum_number(env));

  double z = 0.0;
  double weighted = 0.0;
  for (Eigen::Index k = 1; k <= dimension; ++k) {
    const double kk = static_cast<double>(k);
    const double w = std::exp(-ab * (kk - 1.0) * (kk + 1.0));
    if (w == 0.0) break;
    z += w;
    weighted += w * eigenstate_mp_lower_bound(g, QuantumLevel(k));
  }

  BoundsReport r;
  r.mode = BoundsMode::thermal;
  r.lower = weighted / z;
  r.central = thermal_variance_x(g, env, options.central_variance) + thermal_variance_p(g, n_bar);
  r.upper = thermal_upper_closed_form(g, env, n_bar);
  return r;
}

}  // namespace qhe
