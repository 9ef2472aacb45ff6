#pragma once

#include <cmath>
#include <concepts>
#include <queue>
#include <string>
#include <vector>

#include "qhe/errors.hpp"

namespace qhe::numerics {

inline constexpr double kDefaultSeriesTol = 1e-15;
inline constexpr long kDefaultSeriesMaxTerms = 1'000'000;
inline constexpr double kDefaultQuadratureTol = 1e-11;
inline constexpr int kDefaultQuadraturePanels = 20'000;

struct SeriesResult {
  double value = 0.0;
  long terms_used = 0;
  bool converged = false;
};

/// Sums term(n) for n = 1, 2, ... and stops after the first term whose
/// magnitude falls below rel_tol * |partial sum|. The terms must be
/// eventually monotone decreasing in magnitude. Reaching n_max returns the
/// partial sum with converged = false.
template <std::invocable<long> Term>
SeriesResult sum_series(Term&& term, double rel_tol = kDefaultSeriesTol,
                        long n_max = kDefaultSeriesMaxTerms) {
  if (!(rel_tol > 0.0) || n_max < 1) {
    throw DomainError("sum_series: rel_tol must be > 0 and n_max >= 1");
  }
  SeriesResult result;
  double sum = 0.0;
  double compensation = 0.0;  // Kahan
  for (long n = 1; n <= n_max; ++n) {
    const double t = static_cast<double>(term(n));
    if (!std::isfinite(t)) {
      throw NumericError("sum_series: non-finite term at n = " + std::to_string(n));
    }
    const double y = t - compensation;
    const double s = sum + y;
    compensation = (s - sum) - y;
    sum = s;
    result.terms_used = n;
    if (std::abs(t) < rel_tol * std::abs(sum) || (t == 0.0 && sum == 0.0)) {
      result.converged = true;
      break;
    }
  }
  result.value = sum;
  return result;
}

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename F>
Panel gauss_kronrod_panel(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_centre = static_cast<double>(f(centre));
  if (!std::isfinite(f_centre)) throw NumericError("integrate: non-finite integrand");
  double kronrod = kKronrodWeights[7] * f_centre;
  double gauss = kGaussWeights[3] * f_centre;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = static_cast<double>(f(centre - dx)) + static_cast<double>(f(centre + dx));
    if (!std::isfinite(pair)) throw NumericError("integrate: non-finite integrand");
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (G7/K15) quadrature. The panel with the
/// largest error estimate is bisected until the summed estimate is at most
/// abs_tol.
template <typename F>
double integrate(F&& f, double a, double b, double abs_tol = kDefaultQuadratureTol,
                 int max_panels = kDefaultQuadraturePanels) {
  if (!(a < b)) throw DomainError("integrate: requires a < b");
  if (!(abs_tol > 0.0)) throw DomainError("integrate: abs_tol must be > 0");

  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gauss_kronrod_panel(f, a, b));
  double total = panels.top().value;
  double error = panels.top().error;
  int count = 1;
  while (error > abs_tol) {
    if (count >= max_panels) {
      throw ConvergenceError("integrate: tolerance not met within the panel budget");
    }
    const detail::Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const detail::Panel left = detail::gauss_kronrod_panel(f, worst.a, mid);
    const detail::Panel right = detail::gauss_kronrod_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
    // Re-accumulate occasionally so that cancellation in the running sums
    // cannot stall the loop.
    if (count % 256 == 0) {
      auto copy = panels;
      total = 0.0;
      error = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
    }
  }
  return total;
}

/// Complementary error function; series below x = 2, continued fraction above.
double erfc(double x);

/// Error function, consistent with erfc to rounding.
double erf(double x);

/// Symmetric difference quotient (f(x + h) - f(x - h)) / (2h).
template <std::invocable<double> F>
double central_difference(F&& f, double x, double h) {
  if (!(h > 0.0)) throw DomainError("central_difference: h must be > 0");
  return (static_cast<double>(f(x + h)) - static_cast<double>(f(x - h))) / (2.0 * h);
}

}  // namespace qhe::numerics
