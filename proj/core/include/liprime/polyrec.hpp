#pragma once

#include <cstddef>
#include <vector>

#include "liprime/int_polynomial.hpp"

namespace liprime {

// With f = li^{-1} and g = ln f, the derivatives of g are
//   g^{(n)} = e^{-n g} P_n(g),   P_0(x) = x,   P_{n+1}(x) = x (-n P_n(x) + P_n'(x)).
// Everything below is built on that recurrence.

/// [P_0, ..., P_{n_max}] in exact integer arithmetic.
std::vector<IntPolynomial> pn_polynomials(std::size_t n_max);

/// Horner evaluation of an exact polynomial in double.
double eval_poly(const IntPolynomial& p, double x);

struct GenFunctionValue {
  double value = 0.0;       // sum_{n < n_terms} P_n(x) y^n / n!
  double first_term = 0.0;  // |P_0(x)|
  double last_term = 0.0;   // |P_{n_terms-1}(x) y^{n_terms-1} / (n_terms-1)!|
  bool diverging = false;   // last_term > first_term
};

/// Partial sum of the generating function l(x, y) = sum_n P_n(x) y^n / n!.
GenFunctionValue gen_function_l(double x, double y, std::size_t n_terms);

/// Pieces of the first-order PDE satisfied by h(x, y) = \int_0^y l(x, t) dt
/// = sum_n P_n(x) y^{n+1} / (n+1)!. Derivatives are taken term-wise.
struct PdeTerms {
  double lhs = 0.0;        // (1 + x y) d_y h
  double source = 0.0;     // P_0(x)
  double transport = 0.0;  // x d_x h
  double coupling = 0.0;   // x h
  double tail = 0.0;       // magnitude of the last retained term of l
};

PdeTerms pde_terms(double x, double y, std::size_t n_terms);

struct PdeResidual {
  // |(1 + x y) d_y h - P_0(x) - x d_x h - x h| with term-wise derivatives.
  double analytic = 0.0;
  // Same expression with d_x h and d_y h from central differences of step h_step.
  double finite_difference = 0.0;
  // |(1 + x y) d_y h - P_0(x) - x d_x h|, i.e. without the x h term. Equals x h.
  double without_coupling = 0.0;
};

/// Residual of (1 + x y) d_y h = P_0(x) + x d_x h + x h. Throws DomainError if
/// the truncated series tail exceeds 1e-12 at (x, y).
PdeResidual pde_residual(double x, double y, std::size_t n_terms, double h_step);

/// A point where li^{-1} is known: f0 = li^{-1}(x0), g0 = ln f0.
struct TaylorAnchor {
  double x0 = 0.0;
  double f0 = 0.0;
  double g0 = 0.0;

  /// Anchor at x0 with f0 from the Newton inverse.
  static TaylorAnchor at(double x0);
  /// Anchor at f0 (x0 = li(f0)).
  static TaylorAnchor from_value(double f0);
};

inline constexpr std::size_t kDefaultTaylorTerms = 30;
inline constexpr double kTaylorAcceptRatio = 1e-14;

struct TaylorStep {
  double g = 0.0;  // g(x0 + y)
  double f = 0.0;  // exp(g)
  // max of the last two term magnitudes over |P_0(g0)|; the step is accepted
  // below kTaylorAcceptRatio.
  double last_term_ratio = 0.0;
};

/// Evaluates g(x0 + y) = sum_n P_n(g0) (e^{-g0} y)^n / n! without acceptance checks.
TaylorStep evaluate_taylor(const TaylorAnchor& anchor, double y,
                           std::size_t n_terms = kDefaultTaylorTerms);

/// li^{-1}(x0 + y) from the anchor. Throws StepTooLargeError when the series
/// has not converged to kTaylorAcceptRatio within n_terms.
double taylor_step(const TaylorAnchor& anchor, double y,
                   std::size_t n_terms = kDefaultTaylorTerms);

enum class NthPrimeMethod { Newton, TaylorChain };

/// li^{-1}(n) as an approximation of the n-th prime. TaylorChain walks from
/// the anchor (li(10), 10) with halving until each step is accepted.
double nth_prime_approx(std::size_t n, NthPrimeMethod method);

/// Taylor chain from an explicit anchor to target x; steps smaller than
/// min_step raise StepTooLargeError.
double taylor_chain(TaylorAnchor anchor, double target, double min_step = 1e-9,
                    std::size_t n_terms = kDefaultTaylorTerms);

}  // namespace liprime
