#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "liprime/analysis.hpp"
#include "liprime/errors.hpp"
#include "liprime/parallel.hpp"
#include "liprime/special_fn.hpp"
#include "oracles.hpp"

using namespace liprime;
using cplx = std::complex<double>;

namespace {

const PrimeTable& table() {
  static const PrimeTable t = sieve(2'000'000);
  return t;
}

const std::vector<ErrorRow>& rows() {
  static const auto r = approx_error_table(10'000, table());
  return r;
}

std::vector<ErrorRow> first(std::size_t n) {
  return {rows().begin(), rows().begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace

TEST_CASE("error table rows") {
  const auto& r = rows();
  REQUIRE(r.size() == 10'000);
  CHECK(r[0].n == 1);
  CHECK(r[0].p_n == 2);
  CHECK(r[0].li_inv_n > 2.0);
  CHECK(r[0].abs_err > 0.0);
  CHECK(r[24].p_n == 97);
  CHECK(r[24].li_inv_n == doctest::Approx(oracle::li_inverse_bisect(25.0)).epsilon(1e-10));
  CHECK(r[24].abs_err == std::abs(r[24].li_inv_n - 97.0));
  for (std::size_t i = 0; i < r.size(); i += 7) {
    const auto& row = r[i];
    REQUIRE(row.n == i + 1);
    REQUIRE(pi(static_cast<double>(row.p_n), table()) == row.n);
    REQUIRE(row.abs_err >= 0.0);
    REQUIRE(row.abs_err == std::abs(row.li_inv_n - static_cast<double>(row.p_n)));
    REQUIRE(row.scaled_err == row.abs_err / std::pow(static_cast<double>(row.n), 0.52));
    REQUIRE(std::abs(li(row.li_inv_n) - static_cast<double>(row.n)) <= 1e-9 * std::max(1.0, double(row.n)));
  }
}

TEST_CASE("error table is independent of thread count") {
  const auto one = approx_error_table(2000, table(), 1);
  const auto many = approx_error_table(2000, table(), 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    REQUIRE(one[i].n == many[i].n);
    REQUIRE(one[i].li_inv_n == many[i].li_inv_n);
  }
}

TEST_CASE("error table capacity") {
  CHECK_THROWS_AS(approx_error_table(table().prime_count() + 1, table()), CapacityError);
  CHECK_THROWS_AS(approx_error_table(0, table()), DomainError);
}

TEST_CASE("empirical constant C") {
  const double c = max_scaled_error(rows());
  MESSAGE("max scaled error over n <= 1e4: " << c);
  CHECK(std::isfinite(c));
  CHECK(c == doctest::Approx(5.8084005632439695).epsilon(1e-9));
}

TEST_CASE("log-log slope on synthetic data") {
  std::vector<double> n, err, flat, scaled;
  for (int i = 10; i <= 1000; i += 3) {
    n.push_back(i);
    err.push_back(std::sqrt(static_cast<double>(i)));
    flat.push_back(7.0);
  }
  CHECK(std::abs(fit_loglog_slope(n, err) - 0.5) <= 1e-12);
  CHECK(std::abs(fit_loglog_slope(n, flat)) <= 1e-12);

  // zeros are skipped
  auto with_zeros = err;
  with_zeros[3] = 0.0;
  with_zeros[10] = 0.0;
  CHECK(std::abs(fit_loglog_slope(n, with_zeros) - 0.5) <= 1e-12);

  std::vector<double> few_n(n.begin(), n.begin() + 9), few_e(err.begin(), err.begin() + 9);
  CHECK_THROWS_AS(fit_loglog_slope(few_n, few_e), DomainError);
  CHECK_THROWS_AS(fit_loglog_slope(n, few_e), DomainError);
}

TEST_CASE("slope is invariant under scaling of the errors") {
  std::vector<double> n, err;
  for (const auto& r : rows())
    if (r.n >= 100) {
      n.push_back(static_cast<double>(r.n));
      err.push_back(r.abs_err);
    }
  const double base = fit_loglog_slope(n, err);
  for (double c : {1e-6, 0.3, 17.0, 1e8}) {
    auto scaled = err;
    for (auto& e : scaled) e *= c;
    CHECK(std::abs(fit_loglog_slope(n, scaled) - base) <= 1e-12);
  }
}

TEST_CASE("exponent fit over [1e2, 1e4]") {
  const double a = exponent_fit(100, 10'000, table());
  MESSAGE("alpha = " << a);
  CHECK(a > 0.3);
  CHECK(a < 0.7);
  CHECK(a == doctest::Approx(0.5176806740530584).epsilon(1e-9));
  CHECK_THROWS_AS(exponent_fit(5, 100, table()), DomainError);
  CHECK_THROWS_AS(exponent_fit(100, 100, table()), DomainError);
  CHECK_THROWS_AS(exponent_fit(100, table().prime_count() + 1, table()), CapacityError);
}

TEST_CASE("comparison series is dominated by its majorant") {
  for (double re : {1.2, 1.5, 2.0, 3.0})
    for (double im : {0.0, 5.0})
      for (std::size_t n : {100u, 1000u, 10'000u}) {
        const auto r = comparison_series(cplx(re, im), first(n));
        REQUIRE(r.bound.has_value());
        CAPTURE(re);
        CAPTURE(im);
        CAPTURE(n);
        CHECK(r.residual <= *r.bound);
      }
  // rows and table entry points agree
  const auto a = comparison_series(2.0, first(1000));
  const auto b = comparison_series(2.0, 1000, table());
  CHECK(a.lhs == b.lhs);
  CHECK(a.rhs == b.rhs);
  CHECK_THROWS_AS(comparison_series(1.0, first(10)), DomainError);
}

TEST_CASE("comparison series at s = 2 settles as n_max grows") {
  double prev = INFINITY;
  for (std::size_t n : {100u, 1000u, 10'000u}) {
    const double d = comparison_series(2.0, first(n)).residual;
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("majorant at s = 1.2 stays under C sum n^-1.6") {
  // With f_n, p_n >= n each majorant term is at most |s| err_n / n^{sigma+1}
  // <= |s| C n^{-(sigma + 1/2 - eps)} for C = max err_n / n^{1/2 + eps}.
  const double eps = 0.1, sigma = 1.2;
  double c = 0.0;
  for (const auto& r : rows()) c = std::max(c, r.abs_err / std::pow(double(r.n), 0.5 + eps));
  double prev = 0.0;
  for (std::size_t n : {100u, 1000u, 10'000u}) {
    const double maj = *comparison_series(sigma, first(n)).bound;
    double ref = 0.0;
    for (std::size_t k = 1; k <= n; ++k) ref += std::pow(double(k), -(sigma + 0.5 - eps));
    CHECK(maj > prev);
    CHECK(maj <= 2.0 * sigma * c * ref);
    prev = maj;
  }
}

TEST_CASE("error series convergence flags") {
  for (double sigma : {1.0, 0.6}) {
    const auto [a, b] = error_series_partial(sigma, 0.05, 10'000, table());
    CAPTURE(sigma);
    CHECK(a.converged);
    CHECK(b.converged);
    CHECK(std::isfinite(a.tail_estimate));
    CHECK(a.terms_used == 10'000);
  }
  const auto [a, b] = error_series_partial(0.4, 0.05, 10'000, table());
  CHECK_FALSE(a.converged);
  CHECK_FALSE(b.converged);

  ErrorSeriesOptions strict;
  strict.tail_tol = 1e-3;
  CHECK_FALSE(error_series_partial(1.0, first(10'000), strict).first.converged);
  CHECK_THROWS_AS(error_series_partial(0.0, 0.05, 100, table()), DomainError);
}

TEST_CASE("error series decrease with sigma") {
  double prev_a = INFINITY, prev_b = INFINITY;
  for (double sigma : {0.4, 0.6, 1.0, 1.5, 2.0}) {
    const auto [a, b] = error_series_partial(sigma, first(5000));
    CHECK(a.value.real() < prev_a);
    CHECK(b.value.real() < prev_b);
    prev_a = a.value.real();
    prev_b = b.value.real();
  }
}

TEST_CASE("single interval gap obeys its mean-value bound") {
  for (std::uint64_t n : {1u, 2u, 5u, 40u, 1000u})
    for (cplx s : {cplx(1.5, 0.0), cplx(2.0, 0.0), cplx(2.0, 6.0), cplx(3.0, 0.0)}) {
      const auto g = interval_gap(n, s);
      CAPTURE(n);
      CAPTURE(s);
      CHECK(g.gap <= g.bound);
    }
}

TEST_CASE("sum against integral") {
  const auto r2 = integral_vs_sum(2.0, 1000);
  const auto r3 = integral_vs_sum(3.0, 1000);
  REQUIRE(r2.bound.has_value());
  CHECK(r2.residual <= *r2.bound);
  CHECK(r3.residual <= *r3.bound);
  CHECK(r3.residual < r2.residual);
  CHECK_FALSE(r2.note.empty());
  // integral side against an independent rule in the t variable
  const double ref = oracle::gauss5([](double t) { return std::pow(li_inverse(t), -2.0); }, 1.0, 1001.0, 2000);
  CHECK(r2.rhs.real() == doctest::Approx(ref).epsilon(1e-9));
  CHECK_THROWS_AS(integral_vs_sum(1.0, 100), DomainError);
}

TEST_CASE("integral identity against E1 and its s-derivative") {
  for (double s : {1.5, 2.0, 3.0}) {
    const auto r = integral_identity_check(s);
    CAPTURE(s);
    CHECK(r.value.residual < 1e-8);
    CHECK(r.derivative_residual < 1e-6);
    CHECK(r.derivative_closed_form == doctest::Approx(-std::pow(2.0, 1 - s) / (s - 1)).epsilon(1e-15));
    CHECK(std::abs(r.value.lhs.real() - oracle::e1_quadrature((s - 1) * std::numbers::ln2)) < 1e-10);
  }
  CHECK(integral_identity_check(2.0).value.lhs.real() == doctest::Approx(0.3786710).epsilon(1e-6));
  CHECK_THROWS_AS(integral_identity_check(1.0), DomainError);
}

TEST_CASE("integral decays monotonically for large s") {
  double prev = INFINITY;
  for (double s : {5.0, 10.0, 20.0}) {
    const double v = log_power_integral(s);
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("parallel_map keeps order and forwards exceptions") {
  const auto out = parallel_map(1000, [](std::size_t i) { return i * i; }, 4);
  for (std::size_t i = 0; i < out.size(); ++i) REQUIRE(out[i] == i * i);
  CHECK_THROWS_AS(parallel_map(
                      1000,
                      [](std::size_t i) -> int {
                        if (i == 700) throw DomainError("boom");
                        return 0;
                      },
                      4),
                  DomainError);
  CHECK(parallel_map(0, [](std::size_t) { return 1; }).empty());
}
