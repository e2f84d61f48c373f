#include "liprime/polyrec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "liprime/errors.hpp"
#include "liprime/special_fn.hpp"

namespace liprime {

std::vector<IntPolynomial> pn_polynomials(std::size_t n_max) {
  std::vector<IntPolynomial> out;
  out.reserve(n_max + 1);
  out.push_back(IntPolynomial{0, 1});
  for (std::size_t n = 0; n < n_max; ++n) {
    const IntPolynomial& p = out.back();
    const mpz_class minus_n = -static_cast<long>(n);
    out.push_back((minus_n * p + p.derivative()).shifted());
  }
  return out;
}

double eval_poly(const IntPolynomial& p, double x) { return p.evaluate(x); }

namespace {

constexpr std::size_t kCachedPolynomials = 64;

struct SplitTable {
  std::vector<SplitCoefficients> values;
  std::vector<SplitCoefficients> derivatives;
};

SplitTable make_split_table(std::size_t n_max) {
  SplitTable t;
  for (const auto& p : pn_polynomials(n_max)) {
    t.values.push_back(p.split());
    t.derivatives.push_back(p.derivative().split());
  }
  return t;
}

// Immutable after first use; shared across threads.
const SplitTable& cached_table() {
  static const SplitTable table = make_split_table(kCachedPolynomials);
  return table;
}

std::vector<double> evaluate_all(const std::vector<SplitCoefficients>& table, double x,
                                 std::size_t count) {
  std::vector<double> v(count);
  for (std::size_t n = 0; n < count; ++n) v[n] = table[n].evaluate(x);
  return v;
}

// P_0 .. P_{count-1} evaluated at x.
std::vector<double> pn_values(double x, std::size_t count) {
  if (count <= kCachedPolynomials + 1) return evaluate_all(cached_table().values, x, count);
  return evaluate_all(make_split_table(count - 1).values, x, count);
}

// Pn'(x) values; needed for the x-derivative of the series.
std::vector<double> pn_derivative_values(double x, std::size_t count) {
  if (count <= kCachedPolynomials + 1) return evaluate_all(cached_table().derivatives, x, count);
  return evaluate_all(make_split_table(count - 1).derivatives, x, count);
}

}  // namespace

GenFunctionValue gen_function_l(double x, double y, std::size_t n_terms) {
  if (n_terms < 1) throw DomainError("gen_function_l: n_terms must be >= 1");
  require_finite(x, "gen_function_l");
  require_finite(y, "gen_function_l");
  const auto p = pn_values(x, n_terms);
  GenFunctionValue out;
  double scale = 1.0;  // y^n / n!
  double last = 0.0;
  for (std::size_t n = 0; n < n_terms; ++n) {
    if (n > 0) scale *= y / static_cast<double>(n);
    last = p[n] * scale;
    out.value += last;
  }
  out.first_term = std::abs(p[0]);
  out.last_term = std::abs(last);
  out.diverging = out.last_term > out.first_term;
  return out;
}

namespace {

struct SeriesH {
  double h = 0.0;
  double dh_dx = 0.0;
  double dh_dy = 0.0;
  double tail = 0.0;
};

SeriesH h_series(double x, double y, std::size_t n_terms) {
  const auto p = pn_values(x, n_terms);
  const auto dp = pn_derivative_values(x, n_terms);
  SeriesH out;
  double scale = 1.0;  // y^n / n!
  for (std::size_t n = 0; n < n_terms; ++n) {
    if (n > 0) scale *= y / static_cast<double>(n);
    const double next = scale * y / static_cast<double>(n + 1);  // y^{n+1}/(n+1)!
    out.dh_dy += p[n] * scale;
    out.h += p[n] * next;
    out.dh_dx += dp[n] * next;
    out.tail = std::abs(p[n] * scale);
  }
  return out;
}

}  // namespace

PdeTerms pde_terms(double x, double y, std::size_t n_terms) {
  if (n_terms < 1) throw DomainError("pde_terms: n_terms must be >= 1");
  require_finite(x, "pde_terms");
  require_finite(y, "pde_terms");
  const auto s = h_series(x, y, n_terms);
  PdeTerms t;
  t.lhs = (1.0 + x * y) * s.dh_dy;
  t.source = x;  // P_0(x)
  t.transport = x * s.dh_dx;
  t.coupling = x * s.h;
  t.tail = s.tail;
  return t;
}

PdeResidual pde_residual(double x, double y, std::size_t n_terms, double h_step) {
  if (!(h_step > 0.0)) throw DomainError("pde_residual: h_step must be positive");
  const auto t = pde_terms(x, y, n_terms);
  if (n_terms > 1 && t.tail > 1e-12) {
    throw DomainError("pde_residual: truncated series tail " + std::to_string(t.tail) +
                      " exceeds 1e-12; increase n_terms or reduce |y|");
  }
  PdeResidual r;
  r.analytic = std::abs(t.lhs - t.source - t.transport - t.coupling);
  r.without_coupling = std::abs(t.lhs - t.source - t.transport);

  const auto h_at = [&](double xx, double yy) { return h_series(xx, yy, n_terms).h; };
  const double dhdx = (h_at(x + h_step, y) - h_at(x - h_step, y)) / (2.0 * h_step);
  const double dhdy = (h_at(x, y + h_step) - h_at(x, y - h_step)) / (2.0 * h_step);
  const double h = h_at(x, y);
  r.finite_difference = std::abs((1.0 + x * y) * dhdy - x - x * dhdx - x * h);
  return r;
}

TaylorAnchor TaylorAnchor::at(double x0) {
  const double f0 = li_inverse(x0);
  return {x0, f0, std::log(f0)};
}

TaylorAnchor TaylorAnchor::from_value(double f0) {
  if (!(f0 >= 2.0)) throw DomainError("TaylorAnchor: f0 must be >= 2");
  return {li(f0), f0, std::log(f0)};
}

TaylorStep evaluate_taylor(const TaylorAnchor& anchor, double y, std::size_t n_terms) {
  if (n_terms < 2) throw DomainError("taylor_step: n_terms must be >= 2");
  require_finite(y, "taylor_step");
  const auto p = pn_values(anchor.g0, n_terms);
  const double z = std::exp(-anchor.g0) * y;
  double g = 0.0;
  double scale = 1.0;  // z^n / n!
  double prev = 0.0;
  double last = 0.0;
  for (std::size_t n = 0; n < n_terms; ++n) {
    if (n > 0) scale *= z / static_cast<double>(n);
    prev = last;
    last = p[n] * scale;
    g += last;
  }
  TaylorStep out;
  out.g = g;
  out.f = std::exp(g);
  out.last_term_ratio = std::max(std::abs(prev), std::abs(last)) / std::abs(p[0]);
  return out;
}

double taylor_step(const TaylorAnchor& anchor, double y, std::size_t n_terms) {
  const auto step = evaluate_taylor(anchor, y, n_terms);
  if (!(step.last_term_ratio < kTaylorAcceptRatio)) {
    throw StepTooLargeError("taylor_step: step " + std::to_string(y) +
                            " refused (last-term ratio " +
                            std::to_string(step.last_term_ratio) + ")");
  }
  return step.f;
}

double taylor_chain(TaylorAnchor anchor, double target, double min_step, std::size_t n_terms) {
  require_finite(target, "taylor_chain");
  while (anchor.x0 != target) {
    double y = target - anchor.x0;
    TaylorStep step = evaluate_taylor(anchor, y, n_terms);
    while (!(step.last_term_ratio < kTaylorAcceptRatio)) {
      y *= 0.5;
      if (std::abs(y) < min_step) {
        throw StepTooLargeError("taylor_chain: step fell below minimum " +
                                std::to_string(min_step));
      }
      step = evaluate_taylor(anchor, y, n_terms);
    }
    // Carry g rather than ln(f) forward to avoid an extra rounding per step.
    const double next_x = (y == target - anchor.x0) ? target : anchor.x0 + y;
    anchor = {next_x, step.f, step.g};
  }
  return anchor.f0;
}

double nth_prime_approx(std::size_t n, NthPrimeMethod method) {
  if (n < 1) throw DomainError("nth_prime_approx: n must be >= 1");
  const double target = static_cast<double>(n);
  switch (method) {
    case NthPrimeMethod::Newton:
      return li_inverse(target);
    case NthPrimeMethod::TaylorChain: {
      static const TaylorAnchor bootstrap = TaylorAnchor::from_value(10.0);
      return taylor_chain(bootstrap, target);
    }
  }
  throw DomainError("nth_prime_approx: unknown method");
}

}  // namespace liprime
