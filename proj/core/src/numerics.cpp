#include "qhe/numerics.hpp"

#include <limits>
#include <numbers>

namespace qhe::numerics {
namespace {

constexpr double kSeriesSwitch = 2.0;

// exp(-x^2) without the rounding error of x*x: the high part has few enough
// bits that its square is exact.
double exp_neg_square(double x) {
  const double hi = std::trunc(x * 16.0) / 16.0;
  return std::exp(-hi * hi) * std::exp(-(x - hi) * (x + hi));
}

// erf(x) = 2/sqrt(pi) * exp(-x^2) * sum_k (2x^2)^k x / (2k+1)!!
// Every term is positive, so there is no cancellation.
double erf_series(double x) {
  const double two_x2 = 2.0 * x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k < 200; ++k) {
    term *= two_x2 / (2.0 * k + 1.0);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return 2.0 / std::sqrt(std::numbers::pi) * std::exp(-x * x) * sum;
}

// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
// evaluated with the modified Lentz algorithm.
double erfc_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int k = 1; k < 5000; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return exp_neg_square(x) / std::sqrt(std::numbers::pi) / f;
}

}  // namespace

double erfc(double x) {
  if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x < 0.0) return 2.0 - erfc(-x);
  if (x < kSeriesSwitch) return 1.0 - erf_series(x);
  if (x > 27.3) return 0.0;  // below the smallest subnormal
  return erfc_continued_fraction(x);
}

double erf(double x) {
  if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x < 0.0) return -erf(-x);
  if (x < kSeriesSwitch) return erf_series(x);
  return 1.0 - erfc(x);
}

}  // namespace qhe::numerics
