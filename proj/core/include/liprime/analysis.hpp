#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "liprime/primes.hpp"
#include "liprime/quadrature.hpp"
#include "liprime/types.hpp"

namespace liprime {

/// Exponent used for ErrorRow::scaled_err.
inline constexpr double kScaledErrorExponent = 0.52;

struct ErrorRow {
  std::uint64_t n = 0;
  std::uint64_t p_n = 0;
  double li_inv_n = 0.0;
  double abs_err = 0.0;     // |li_inv_n - p_n|
  double scaled_err = 0.0;  // abs_err / n^0.52
};

/// One row per n in [1, n_max], in order. Rows are computed in parallel
/// (threads = 0 picks hardware concurrency); output is identical either way.
/// Throws CapacityError if n_max > pi(table.limit()).
std::vector<ErrorRow> approx_error_table(std::uint64_t n_max, const PrimeTable& table,
                                         unsigned threads = 0);

/// Largest scaled_err over the rows: the empirical constant C in
/// |li^{-1}(n) - p_n| <= C n^{0.52}.
double max_scaled_error(std::span<const ErrorRow> rows);

/// Least-squares slope of log(err) against log(n); pairs with err == 0 are
/// skipped. Throws DomainError with fewer than 10 usable pairs.
double fit_loglog_slope(std::span<const double> n, std::span<const double> err);

/// Slope alpha of log|li^{-1}(n) - p_n| against log n over n in [n_min, n_max].
/// Requires n_max > n_min >= 10.
double exponent_fit(std::uint64_t n_min, std::uint64_t n_max, const PrimeTable& table);

/// lhs = sum_{n <= n_max} p_n^{-s}, rhs = sum_{n <= n_max} li^{-1}(n)^{-s};
/// `bound` holds the majorant
///   sum |s| |1 - p_n/f_n| / p_n^sigma + sum |s| |1 - f_n/p_n| / f_n^sigma.
/// Requires Re(s) > 1.
IdentityReport comparison_series(ComplexPoint s, std::span<const ErrorRow> rows);
IdentityReport comparison_series(ComplexPoint s, std::uint64_t n_max, const PrimeTable& table);

struct ErrorSeriesOptions {
  double epsilon = 0.05;
  // converged additionally requires the comparison tail to be at most this.
  double tail_tol = std::numeric_limits<double>::infinity();
};

/// The two error series
///   first  = sum_{n <= n_max} |f_n - p_n| / f_n^{sigma + 1}
///   second = sum_{n <= n_max} |f_n - p_n| / p_n^{sigma + 1}
/// Each tail is bounded by C sum_{n > n_max} n^{-(sigma + 1/2 - epsilon)} with
/// C = max |f_n - p_n| / n^{1/2 + epsilon} over the table; the series are
/// flagged converged only when that exponent exceeds 1.
std::pair<SeriesResult, SeriesResult> error_series_partial(double sigma,
                                                           std::span<const ErrorRow> rows,
                                                           const ErrorSeriesOptions& opts = {});
std::pair<SeriesResult, SeriesResult> error_series_partial(double sigma, double epsilon,
                                                           std::uint64_t n_max,
                                                           const PrimeTable& table);

/// Gap between f(n)^{-s} and \int_n^{n+1} f(t)^{-s} dt, with the mean-value
/// bound |s| ln f(n+1) f(n)^{-(sigma+1)} / 2 that holds on each interval.
struct IntervalGap {
  double gap = 0.0;
  double bound = 0.0;
};
IntervalGap interval_gap(std::uint64_t n, ComplexPoint s, const QuadratureConfig& cfg = {});

/// lhs = sum_{n=1}^{n_max} f(n)^{-s}; rhs = \int_1^{n_max+1} f(t)^{-s} dt
/// evaluated as \int_{f(1)}^{f(n_max+1)} u^{-s} / ln u du; `bound` is the sum
/// of the per-interval bounds of interval_gap. The integral starts at t = 1
/// rather than 0; the omitted piece over [0, 1] is a constant in s that the
/// interval-wise comparison never sees. Requires Re(s) > 1.
IdentityReport integral_vs_sum(ComplexPoint s, std::uint64_t n_max,
                               const QuadratureConfig& cfg = {});

struct IntegralIdentityReport {
  // lhs: \int_2^inf u^{-s} / ln u du by quadrature; rhs: E1((s - 1) ln 2).
  IdentityReport value;
  double derivative_numeric = 0.0;      // central difference of lhs in s
  double derivative_closed_form = 0.0;  // -2^{1-s} / (s - 1)
  double derivative_residual = 0.0;
};

/// Requires s > 1. The derivative uses central differences with step h.
IntegralIdentityReport integral_identity_check(double s, const QuadratureConfig& cfg = {},
                                               double h = 1e-4);

/// \int_2^inf u^{-s} / ln u du by quadrature after u = 2 e^v.
double log_power_integral(double s, const QuadratureConfig& cfg = {});

}  // namespace liprime
