#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace liprime {

struct QuadratureConfig {
  double abs_tol = 1e-14;
  double rel_tol = 1e-14;
  std::size_t max_subdivisions = 2000;

  /// Throws DomainError unless tolerances are positive and subdivisions >= 1.
  void validate() const;
};

template <typename T>
struct QuadratureResult {
  T value{};
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

/// Adaptive 15-point Gauss-Kronrod on [a, b]. The panel with the largest
/// error estimate is bisected until the total estimate is within tolerance.
/// Throws ConvergenceError when max_subdivisions is exhausted.
QuadratureResult<double> integrate(const std::function<double(double)>& f, double a,
                                   double b, const QuadratureConfig& cfg = {});
QuadratureResult<std::complex<double>> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureConfig& cfg = {});

/// Integral over [a, inf) through the map t = a + u / (1 - u).
QuadratureResult<double> integrate_to_infinity(const std::function<double(double)>& f,
                                               double a, const QuadratureConfig& cfg = {});

}  // namespace liprime
