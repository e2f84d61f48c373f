#pragma once

#include <complex>
#include <cstddef>

#include "liprime/quadrature.hpp"
#include "liprime/types.hpp"

namespace liprime {

// ---------------------------------------------------------------------------
// Offset logarithmic integral li(x) = \int_2^x dt / ln t, so li(2) = 0.
// ---------------------------------------------------------------------------

/// li(x) by adaptive Gauss-Kronrod in u = ln t (integrand e^u / u).
/// Throws DomainError for x < 2 and ConvergenceError if cfg is exhausted.
double li(double x, const QuadratureConfig& cfg = {});

struct LiInverseOptions {
  double tol = 1e-10;           // target |li(t) - y|
  int max_iterations = 200;
  QuadratureConfig quadrature{};
};

/// Solves li(t) = y for t >= 2 with Newton steps t <- t - (li(t) - y) ln t,
/// kept inside a bracket [lo, hi] and falling back to bisection when a Newton
/// step leaves it. Iterates to full double precision; the residual check uses
/// max(tol, rounding level of y).
double li_inverse(double y, const LiInverseOptions& opts = {});

// ---------------------------------------------------------------------------
// Riemann zeta on Re(s) > 0 via the accelerated alternating (eta) series.
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultZetaTerms = 64;
inline constexpr std::size_t kMaxZetaTerms = 350;

struct ZetaEvaluation {
  ComplexPoint value{};
  ComplexPoint derivative{};
  // Bound on |computed - exact| for `value` from the acceleration weights.
  double error_bound = 0.0;
  // |1 - 2^{1-s}| < 1e-12: eta prefactor vanishes, value is unreliable.
  bool near_singular = false;
};

/// zeta and zeta' together. Throws PoleError at s = 1 and DomainError for
/// Re(s) <= 0 or terms outside [1, kMaxZetaTerms].
ZetaEvaluation zeta_evaluate(ComplexPoint s, std::size_t terms = kDefaultZetaTerms);

ComplexPoint zeta(ComplexPoint s, std::size_t terms = kDefaultZetaTerms);

/// zeta'(s) / zeta(s). zeta' is the term-wise derivative of the eta series
/// plus the derivative of the 1 / (1 - 2^{1-s}) prefactor.
/// Throws DomainError when |zeta(s)| < kZetaZeroThreshold.
ComplexPoint zeta_log_deriv(ComplexPoint s, std::size_t terms = kDefaultZetaTerms);

inline constexpr double kZetaZeroThreshold = 1e-10;

// ---------------------------------------------------------------------------
// Exponential integral E1(x) = \int_x^inf e^{-v} / v dv.
// ---------------------------------------------------------------------------

/// Power series for x <= 1, Lentz continued fraction above. x > 0.
double exp_integral_e1(double x);

/// Complex E1 on the principal branch; requires Re(z) > 0 or Im(z) != 0.
std::complex<double> exp_integral_e1(std::complex<double> z);

}  // namespace liprime
