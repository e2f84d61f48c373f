// Independent reference computations used only by tests. Nothing here calls
// into the library's numerical routines.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Euler-Maclaurin: sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + Bernoulli corrections.
inline cplx zeta_euler_maclaurin(cplx s, int N = 30, int K = 12) {
  // B_{2k} for k = 1..12
  static const double bern[] = {1.0 / 6,          -1.0 / 30,         1.0 / 42,
                                -1.0 / 30,        5.0 / 66,          -691.0 / 2730,
                                7.0 / 6,          -3617.0 / 510,     43867.0 / 798,
                                -174611.0 / 330,  854513.0 / 138,    -236364091.0 / 2730};
  cplx sum = 0.0;
  for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(double(n)));
  const double lnN = std::log(double(N));
  const cplx Ns = std::exp(-s * lnN);
  sum += std::exp((1.0 - s) * lnN) / (s - 1.0) + 0.5 * Ns;
  // term_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) N^{-s-2k+1}
  cplx rising = s;  // s (s+1) ... (s + 2k - 2)
  double fact = 2.0;  // (2k)!
  cplx npow = Ns / double(N);
  for (int k = 1; k <= K; ++k) {
    sum += bern[k - 1] / fact * rising * npow;
    rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
    fact *= double(2 * k + 1) * double(2 * k + 2);
    npow /= double(N) * double(N);
  }
  return sum;
}

inline cplx zeta_log_deriv_fd(cplx s, double h = 1e-5) {
  const cplx d = (zeta_euler_maclaurin(s + h) - zeta_euler_maclaurin(s - h)) / (2.0 * h);
  return d / zeta_euler_maclaurin(s);
}

/// Composite Simpson with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

/// Composite 5-point Gauss-Legendre with n panels.
inline double gauss5(const std::function<double(double)>& f, double a, double b, int n) {
  static const double x[] = {0.0, 0.5384693101056831, 0.9061798459386640};
  static const double w[] = {0.5688888888888889, 0.4786286704993665, 0.2369268850561891};
  const double h = (b - a) / n;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double c = a + (i + 0.5) * h, r = 0.5 * h;
    s += w[0] * f(c);
    for (int j = 1; j < 3; ++j) s += w[j] * (f(c - r * x[j]) + f(c + r * x[j]));
  }
  return s * 0.5 * h;
}

/// li(x) = \int_2^x dt/ln t by Simpson in u = ln t.
inline double li_simpson(double x, int n = 20000) {
  return simpson([](double u) { return std::exp(u) / u; }, std::numbers::ln2, std::log(x), n);
}
inline double li_gauss(double x, int n = 400) {
  return gauss5([](double u) { return std::exp(u) / u; }, std::numbers::ln2, std::log(x), n);
}

/// Solve li(t) = y by bisection on the Gauss oracle.
inline double li_inverse_bisect(double y) {
  double lo = 2.0, hi = 4.0;
  while (li_gauss(hi) < y) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (li_gauss(mid) < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// E1(x) = \int_x^inf e^{-t}/t dt = \int_{ln x}^inf exp(-e^v) dv, cut at v = 5.
inline double e1_quadrature(double x) {
  return gauss5([](double v) { return std::exp(-std::exp(v)); }, std::log(x), 5.0, 4000);
}

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<bool> plain_sieve(std::uint64_t limit) {
  std::vector<bool> v(limit + 1, true);
  v[0] = false;
  if (limit >= 1) v[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (v[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) v[j] = false;
  return v;
}

inline int mobius_factor(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

/// Taylor coefficients a_k = g^{(k)}(x0)/k! of the solution of g' = g e^{-g},
/// g(x0) = g0, by power-series arithmetic (Cauchy products), k = 0..n.
inline std::vector<double> ode_taylor_coefficients(double g0, int n) {
  std::vector<double> a(n + 1, 0.0), e(n + 1, 0.0);
  a[0] = g0;
  e[0] = std::exp(-g0);
  for (int k = 0; k < n; ++k) {
    // coefficient k of g * e^{-g}
    double prod = 0.0;
    for (int j = 0; j <= k; ++j) prod += a[j] * e[k - j];
    a[k + 1] = prod / (k + 1);
    // E = e^{-G}: E' = -G' E, so (k+1) e_{k+1} = -sum_{j} (j+1) a_{j+1} e_{k-j}
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += (j + 1) * a[j + 1] * e[k - j];
    e[k + 1] = -acc / (k + 1);
  }
  return a;
}

}  // namespace oracle
