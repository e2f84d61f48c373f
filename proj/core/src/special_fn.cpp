#include "liprime/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "liprime/errors.hpp"

namespace liprime {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

double li(double x, const QuadratureConfig& cfg) {
  if (std::isnan(x) || x < 2.0) {
    throw DomainError("li: requires x >= 2 (got " + std::to_string(x) + ")");
  }
  if (std::isinf(x)) throw DomainError("li: argument must be finite");
  if (x == 2.0) return 0.0;
  const auto integrand = [](double u) { return std::exp(u) / u; };
  return integrate(integrand, std::numbers::ln2, std::log(x), cfg).value;
}

double li_inverse(double y, const LiInverseOptions& opts) {
  if (std::isnan(y) || y < 0.0) {
    throw DomainError("li_inverse: requires y >= 0 (got " + std::to_string(y) + ")");
  }
  if (std::isinf(y)) throw DomainError("li_inverse: argument must be finite");
  if (!(opts.tol > 0.0) || opts.max_iterations < 1) {
    throw DomainError("li_inverse: tol must be positive and max_iterations at least 1");
  }
  opts.quadrature.validate();
  if (y == 0.0) return 2.0;

  const auto& q = opts.quadrature;
  double lo = 2.0;
  double hi = std::max(4.0, 2.0 * y * std::log(y + 2.0));
  while (li(hi, q) <= y) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw ConvergenceError("li_inverse: bracket overflow");
  }

  double t = y >= 2.0 ? std::max(3.0, y * std::log(y + 2.0)) : 3.0;
  t = std::clamp(t, lo, hi);

  // li itself carries rounding of a few tens of ulps relative to its value,
  // so no t can bring the residual below that; the floor keeps t accurate to
  // about 64 eps relative.
  const double floor_tol = std::max(opts.tol, 64.0 * kEps * std::max(1.0, y));
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    const double residual = li(t, q) - y;
    if (residual > 0.0) {
      hi = t;
    } else if (residual < 0.0) {
      lo = t;
    } else {
      return t;
    }
    const double step = residual * std::log(t);
    double next = t - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const bool settled = std::abs(next - t) <= 2.0 * kEps * t || hi - lo <= 2.0 * kEps * hi;
    t = next;
    if (settled) {
      const double final_residual = std::abs(li(t, q) - y);
      if (final_residual <= floor_tol) return t;
      char msg[128];
      std::snprintf(msg, sizeof msg, "li_inverse: stalled with residual %.3g at y = %.17g",
                    final_residual, y);
      throw ConvergenceError(msg);
    }
  }
  throw ConvergenceError("li_inverse: no convergence after " +
                         std::to_string(opts.max_iterations) + " iterations");
}

ZetaEvaluation zeta_evaluate(ComplexPoint s, std::size_t terms) {
  require_finite(s, "zeta");
  if (s == ComplexPoint(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  if (s.real() <= 0.0) throw DomainError("zeta: requires Re(s) > 0");
  if (terms < 1 || terms > kMaxZetaTerms) {
    throw DomainError("zeta: terms must be in [1, " + std::to_string(kMaxZetaTerms) + "]");
  }

  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), accumulated as ratios.
  const std::size_t n = terms;
  std::vector<long double> d(n + 1);
  long double term = 1.0L;
  long double acc = 1.0L;
  d[0] = acc;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto li_ = static_cast<long double>(i);
    const auto ln_ = static_cast<long double>(n);
    term *= 4.0L * (ln_ + li_ - 1.0L) * (ln_ - li_ + 1.0L) / ((2.0L * li_) * (2.0L * li_ - 1.0L));
    acc += term;
    d[i] = acc;
  }
  const long double dn = d[n];

  ComplexPoint eta{};
  ComplexPoint eta_prime{};
  for (std::size_t k = 0; k < n; ++k) {
    const double weight = static_cast<double>((dn - d[k]) / dn);
    const double log_base = std::log(static_cast<double>(k + 1));
    const ComplexPoint power = std::exp(-s * log_base);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    eta += sign * weight * power;
    eta_prime -= sign * weight * log_base * power;
  }

  const ComplexPoint two_pow = std::exp((1.0 - s) * std::numbers::ln2);
  const ComplexPoint denom = 1.0 - two_pow;
  ZetaEvaluation out;
  out.near_singular = std::abs(denom) < 1e-12;
  out.value = eta / denom;
  out.derivative = eta_prime / denom - eta * two_pow * std::numbers::ln2 / (denom * denom);
  if (s.imag() == 0.0) {
    // Real on the real axis. A stray -0.0 would send std::log of a negative
    // zeta value to -i pi instead of the principal +i pi.
    out.value = {out.value.real(), 0.0};
    out.derivative = {out.derivative.real(), 0.0};
  }
  const double t = std::abs(s.imag());
  const double growth = 3.0 * (1.0 + 2.0 * t) * std::exp(0.5 * std::numbers::pi * t);
  out.error_bound =
      growth * std::pow(3.0 + std::sqrt(8.0), -static_cast<double>(n)) / std::abs(denom);
  return out;
}

ComplexPoint zeta(ComplexPoint s, std::size_t terms) { return zeta_evaluate(s, terms).value; }

ComplexPoint zeta_log_deriv(ComplexPoint s, std::size_t terms) {
  const auto z = zeta_evaluate(s, terms);
  if (std::abs(z.value) < kZetaZeroThreshold) {
    throw DomainError("zeta_log_deriv: |zeta(s)| below threshold, s is numerically a zero");
  }
  return z.derivative / z.value;
}

namespace {

constexpr double kEulerGamma = std::numbers::egamma;

template <typename T>
T e1_series(T z) {
  // E1(z) = -gamma - ln z - sum_{k>=1} (-z)^k / (k k!)
  T sum{};
  T power = 1.0;
  for (int k = 1; k < 200; ++k) {
    power *= -z / static_cast<double>(k);
    const T term = power / static_cast<double>(k);
    sum += term;
    if (std::abs(term) <= kEps * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(z) - sum;
}

template <typename T>
T e1_continued_fraction(T z) {
  // Modified Lentz on E1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...))).
  constexpr double tiny = 1e-300;
  T b = z + 1.0;
  T c = 1.0 / tiny;
  T d = 1.0 / b;
  T h = d;
  for (int i = 1; i < 10000; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    const T delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) <= kEps) return h * std::exp(-z);
  }
  throw ConvergenceError("exp_integral_e1: continued fraction did not converge");
}

}  // namespace

double exp_integral_e1(double x) {
  if (std::isnan(x) || x <= 0.0) {
    throw DomainError("exp_integral_e1: requires x > 0 (got " + std::to_string(x) + ")");
  }
  if (std::isinf(x)) return 0.0;
  return x <= 1.0 ? e1_series(x) : e1_continued_fraction(x);
}

std::complex<double> exp_integral_e1(std::complex<double> z) {
  require_finite(z, "exp_integral_e1");
  if (!(z.real() > 0.0) && z.imag() == 0.0) {
    throw DomainError("exp_integral_e1: z on the branch cut (non-positive real)");
  }
  return std::abs(z) <= 2.0 ? e1_series(z) : e1_continued_fraction(z);
}

}  // namespace liprime
