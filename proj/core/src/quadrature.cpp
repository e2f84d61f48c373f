#include "liprime/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "liprime/errors.hpp"
#include "liprime/types.hpp"

namespace liprime {

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be strictly positive");
  }
  if (max_subdivisions < 1) {
    throw DomainError("quadrature max_subdivisions must be >= 1");
  }
}

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double magnitude(double v) { return std::abs(v); }
double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <typename T>
struct Panel {
  double a;
  double b;
  T value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename T, typename F>
Panel<T> kronrod15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T kronrod = fc * kKronrodWeights[7];
  T gauss = fc * kGaussWeights[3];
  std::array<T, 15> values{};
  values[7] = fc;
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    values[i] = f(center - dx);
    values[14 - i] = f(center + dx);
    kronrod += (values[i] + values[14 - i]) * kKronrodWeights[i];
    if (i % 2 == 1) gauss += (values[i] + values[14 - i]) * kGaussWeights[i / 2];
  }
  // QUADPACK error heuristic: scale |K - G| against the spread of f on the panel.
  const T mean = kronrod * 0.5;
  double abs_sum = magnitude(fc) * kKronrodWeights[7];
  double spread = magnitude(fc - mean) * kKronrodWeights[7];
  for (std::size_t i = 0; i < 7; ++i) {
    abs_sum += (magnitude(values[i]) + magnitude(values[14 - i])) * kKronrodWeights[i];
    spread += (magnitude(values[i] - mean) + magnitude(values[14 - i] - mean)) *
              kKronrodWeights[i];
  }
  kronrod *= half;
  gauss *= half;
  abs_sum *= std::abs(half);
  spread *= std::abs(half);
  double error = magnitude(kronrod - gauss);
  if (spread != 0.0 && error != 0.0) {
    error = spread * std::min(1.0, std::pow(200.0 * error / spread, 1.5));
  }
  // Never claim better than a few ulps of the panel.
  error = std::max(error, 2.0 * std::numeric_limits<double>::epsilon() * abs_sum);
  if (!std::isfinite(magnitude(kronrod))) {
    throw ConvergenceError("quadrature: integrand is not finite on [" + std::to_string(a) +
                           ", " + std::to_string(b) + "]");
  }
  return {a, b, kronrod, error};
}

template <typename T, typename F>
QuadratureResult<T> adaptive(const F& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("quadrature: interval endpoints must be finite");
  }
  if (a == b) return {T{}, 0.0, 0};

  std::priority_queue<Panel<T>> panels;
  auto first = kronrod15<T>(f, a, b);
  T total = first.value;
  double total_error = first.error;
  panels.push(first);

  std::size_t count = 1;
  while (total_error > std::max(cfg.abs_tol, cfg.rel_tol * magnitude(total))) {
    if (count >= cfg.max_subdivisions) {
      throw ConvergenceError("quadrature: subdivision limit " +
                             std::to_string(cfg.max_subdivisions) +
                             " reached with error estimate " + std::to_string(total_error));
    }
    Panel<T> worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = kronrod15<T>(f, worst.a, mid);
    auto right = kronrod15<T>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }

  // Re-sum from the panels so incremental updates do not leave rounding drift.
  std::vector<Panel<T>> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  T sum{};
  double err = 0.0;
  for (const auto& p : all) {
    sum += p.value;
    err += p.error;
  }
  return {sum, err, all.size()};
}

}  // namespace

QuadratureResult<double> integrate(const std::function<double(double)>& f, double a,
                                   double b, const QuadratureConfig& cfg) {
  return adaptive<double>(f, a, b, cfg);
}

QuadratureResult<std::complex<double>> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureConfig& cfg) {
  return adaptive<std::complex<double>>(f, a, b, cfg);
}

QuadratureResult<double> integrate_to_infinity(const std::function<double(double)>& f,
                                               double a, const QuadratureConfig& cfg) {
  auto mapped = [&](double u) {
    if (u >= 1.0) return 0.0;
    const double one_minus = 1.0 - u;
    const double t = a + u / one_minus;
    const double v = f(t) / (one_minus * one_minus);
    return std::isfinite(v) ? v : 0.0;
  };
  return adaptive<double>(mapped, 0.0, 1.0, cfg);
}

}  // namespace liprime
