#include "liprime/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "liprime/errors.hpp"
#include "liprime/parallel.hpp"
#include "liprime/special_fn.hpp"

namespace liprime {

std::vector<ErrorRow> approx_error_table(std::uint64_t n_max, const PrimeTable& table,
                                         unsigned threads) {
  if (n_max < 1) throw DomainError("approx_error_table: n_max must be >= 1");
  if (n_max > table.prime_count()) {
    throw CapacityError("approx_error_table: n_max = " + std::to_string(n_max) +
                        " exceeds pi(" + std::to_string(table.limit()) + ") = " +
                        std::to_string(table.prime_count()) + "; raise the sieve limit");
  }
  const auto primes = table.primes_up_to(table.nth_prime(n_max));
  return parallel_map(
      static_cast<std::size_t>(n_max),
      [&](std::size_t i) {
        ErrorRow row;
        row.n = i + 1;
        row.p_n = primes[i];
        row.li_inv_n = li_inverse(static_cast<double>(row.n));
        row.abs_err = std::abs(row.li_inv_n - static_cast<double>(row.p_n));
        row.scaled_err = row.abs_err / std::pow(static_cast<double>(row.n), kScaledErrorExponent);
        return row;
      },
      threads);
}

double max_scaled_error(std::span<const ErrorRow> rows) {
  double best = 0.0;
  for (const auto& r : rows) best = std::max(best, r.scaled_err);
  return best;
}

double fit_loglog_slope(std::span<const double> n, std::span<const double> err) {
  if (n.size() != err.size()) throw DomainError("fit_loglog_slope: length mismatch");
  double sx = 0.0, sy = 0.0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (err[i] == 0.0) continue;
    if (!(n[i] > 0.0) || !(err[i] > 0.0)) {
      throw DomainError("fit_loglog_slope: values must be positive");
    }
    sx += std::log(n[i]);
    sy += std::log(err[i]);
    ++m;
  }
  if (m < 10) {
    throw DomainError("fit_loglog_slope: degenerate fit, only " + std::to_string(m) +
                      " usable rows (need 10)");
  }
  // Centered sums keep the slope exact for exactly log-linear data.
  const double mx = sx / static_cast<double>(m);
  const double my = sy / static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (err[i] == 0.0) continue;
    const double dx = std::log(n[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(err[i]) - my);
  }
  if (sxx == 0.0) throw DomainError("fit_loglog_slope: all n identical");
  return sxy / sxx;
}

double exponent_fit(std::uint64_t n_min, std::uint64_t n_max, const PrimeTable& table) {
  if (n_min < 10 || n_max <= n_min) {
    throw DomainError("exponent_fit: requires n_max > n_min >= 10");
  }
  const auto rows = approx_error_table(n_max, table);
  std::vector<double> ns, errs;
  for (std::uint64_t n = n_min; n <= n_max; ++n) {
    ns.push_back(static_cast<double>(n));
    errs.push_back(rows[n - 1].abs_err);
  }
  return fit_loglog_slope(ns, errs);
}

namespace {

ComplexPoint power_neg(double base, ComplexPoint s) { return std::exp(-s * std::log(base)); }

void require_right_of_one(ComplexPoint s, const char* what) {
  require_finite(s, what);
  if (!(s.real() > 1.0)) throw DomainError(std::string(what) + ": requires Re(s) > 1");
}

}  // namespace

IdentityReport comparison_series(ComplexPoint s, std::span<const ErrorRow> rows) {
  require_right_of_one(s, "comparison_series");
  ComplexPoint lhs{}, rhs{};
  double majorant = 0.0;
  const double mod_s = std::abs(s);
  const double sigma = s.real();
  for (const auto& r : rows) {
    const auto p = static_cast<double>(r.p_n);
    const double f = r.li_inv_n;
    lhs += power_neg(p, s);
    rhs += power_neg(f, s);
    majorant += mod_s * std::abs(1.0 - p / f) / std::pow(p, sigma);
    majorant += mod_s * std::abs(1.0 - f / p) / std::pow(f, sigma);
  }
  auto report = make_report(s, lhs, rhs, rows.size(), rows.size(), 0.0);
  report.bound = majorant;
  return report;
}

IdentityReport comparison_series(ComplexPoint s, std::uint64_t n_max, const PrimeTable& table) {
  require_right_of_one(s, "comparison_series");
  const auto rows = approx_error_table(n_max, table);
  return comparison_series(s, rows);
}

std::pair<SeriesResult, SeriesResult> error_series_partial(double sigma,
                                                           std::span<const ErrorRow> rows,
                                                           const ErrorSeriesOptions& opts) {
  if (!(sigma > 0.0)) throw DomainError("error_series_partial: requires sigma > 0");
  if (rows.empty()) throw DomainError("error_series_partial: empty table");
  double first = 0.0, second = 0.0, constant = 0.0;
  for (const auto& r : rows) {
    const auto p = static_cast<double>(r.p_n);
    first += r.abs_err / std::pow(r.li_inv_n, sigma + 1.0);
    second += r.abs_err / std::pow(p, sigma + 1.0);
    constant = std::max(constant, r.abs_err / std::pow(static_cast<double>(r.n), 0.5 + opts.epsilon));
  }
  const double exponent = sigma + 0.5 - opts.epsilon;
  const auto n_max = static_cast<double>(rows.back().n);
  const double tail = exponent > 1.0
                          ? constant * std::pow(n_max, 1.0 - exponent) / (exponent - 1.0)
                          : std::numeric_limits<double>::infinity();
  const bool converged = exponent > 1.0 && tail <= opts.tail_tol;
  SeriesResult a, b;
  a.value = first;
  b.value = second;
  a.terms_used = b.terms_used = rows.size();
  a.tail_estimate = b.tail_estimate = tail;
  a.converged = b.converged = converged;
  return {a, b};
}

std::pair<SeriesResult, SeriesResult> error_series_partial(double sigma, double epsilon,
                                                           std::uint64_t n_max,
                                                           const PrimeTable& table) {
  const auto rows = approx_error_table(n_max, table);
  ErrorSeriesOptions opts;
  opts.epsilon = epsilon;
  return error_series_partial(sigma, rows, opts);
}

namespace {

// \int_{a}^{b} u^{-s} / ln u du, i.e. \int f(t)^{-s} dt after u = f(t).
ComplexPoint substituted_integral(double a, double b, ComplexPoint s,
                                  const QuadratureConfig& cfg) {
  const auto integrand = [s](double u) { return power_neg(u, s) / std::log(u); };
  return integrate_complex(integrand, a, b, cfg).value;
}

double interval_bound(double f_n, double f_next, ComplexPoint s) {
  return std::abs(s) * std::log(f_next) * std::pow(f_n, -(s.real() + 1.0)) / 2.0;
}

}  // namespace

IntervalGap interval_gap(std::uint64_t n, ComplexPoint s, const QuadratureConfig& cfg) {
  if (n < 1) throw DomainError("interval_gap: n must be >= 1");
  require_finite(s, "interval_gap");
  if (!(s.real() > 0.0)) throw DomainError("interval_gap: requires Re(s) > 0");
  const double f_n = li_inverse(static_cast<double>(n));
  const double f_next = li_inverse(static_cast<double>(n + 1));
  const ComplexPoint integral = substituted_integral(f_n, f_next, s, cfg);
  return {std::abs(power_neg(f_n, s) - integral), interval_bound(f_n, f_next, s)};
}

IdentityReport integral_vs_sum(ComplexPoint s, std::uint64_t n_max,
                               const QuadratureConfig& cfg) {
  require_right_of_one(s, "integral_vs_sum");
  if (n_max < 1) throw DomainError("integral_vs_sum: n_max must be >= 1");
  std::vector<double> f(n_max + 1);
  for (std::uint64_t n = 1; n <= n_max + 1; ++n) {
    f[n - 1] = li_inverse(static_cast<double>(n));
  }
  ComplexPoint sum{};
  double bound = 0.0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    sum += power_neg(f[n - 1], s);
    bound += interval_bound(f[n - 1], f[n], s);
  }
  const ComplexPoint integral = substituted_integral(f.front(), f.back(), s, cfg);
  auto report = make_report(s, sum, integral, n_max, n_max, 0.0);
  report.bound = bound;
  report.note = "integral over t in [1, n_max + 1]";
  return report;
}

double log_power_integral(double s, const QuadratureConfig& cfg) {
  if (!(s > 1.0)) throw DomainError("log_power_integral: requires s > 1");
  const double scale = std::exp2(1.0 - s);
  const auto integrand = [s](double v) {
    return std::exp((1.0 - s) * v) / (std::numbers::ln2 + v);
  };
  return scale * integrate_to_infinity(integrand, 0.0, cfg).value;
}

IntegralIdentityReport integral_identity_check(double s, const QuadratureConfig& cfg, double h) {
  if (!(s > 1.0)) throw DomainError("integral_identity_check: requires s > 1");
  if (!(h > 0.0) || !(s - h > 1.0)) {
    throw DomainError("integral_identity_check: step must be positive and keep s - h > 1");
  }
  IntegralIdentityReport out;
  const double lhs = log_power_integral(s, cfg);
  const double rhs = exp_integral_e1((s - 1.0) * std::numbers::ln2);
  out.value = make_report(s, lhs, rhs, 1, 1, 0.0);
  out.derivative_numeric =
      (log_power_integral(s + h, cfg) - log_power_integral(s - h, cfg)) / (2.0 * h);
  out.derivative_closed_form = -std::exp2(1.0 - s) / (s - 1.0);
  out.derivative_residual = std::abs(out.derivative_numeric - out.derivative_closed_form);
  return out;
}

}  // namespace liprime
