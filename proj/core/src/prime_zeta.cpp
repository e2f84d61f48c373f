#include "liprime/prime_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "liprime/errors.hpp"
#include "liprime/special_fn.hpp"

namespace liprime {

void TruncationPolicy::validate() const {
  if (prime_limit < 2) throw DomainError("TruncationPolicy: prime_limit must be >= 2");
  if (k_max < 1) throw DomainError("TruncationPolicy: k_max must be >= 1");
  if (!(tail_tol > 0.0) || !(tail_tol < 1.0)) {
    throw DomainError("TruncationPolicy: tail_tol must lie in (0, 1)");
  }
}

namespace {

constexpr std::uint64_t kMinCutoff = 1000;

// Neumaier-compensated complex accumulator; prime sums run to 10^8 terms.
class CompensatedSum {
 public:
  void add(ComplexPoint v) {
    re_ = add_one(re_, comp_re_, v.real());
    im_ = add_one(im_, comp_im_, v.imag());
  }
  [[nodiscard]] ComplexPoint value() const { return {re_ + comp_re_, im_ + comp_im_}; }

 private:
  static double add_one(double sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    return t;
  }
  double re_ = 0.0, im_ = 0.0, comp_re_ = 0.0, comp_im_ = 0.0;
};

void require_table(const TruncationPolicy& policy, const PrimeTable& table) {
  policy.validate();
  if (policy.prime_limit > table.limit()) {
    throw CapacityError("prime_limit " + std::to_string(policy.prime_limit) +
                        " exceeds sieve limit " + std::to_string(table.limit()) +
                        "; raise the sieve limit");
  }
}

// Smallest cutoff P with P^{-exponent} <= tol, clamped to [kMinCutoff, prime_limit].
std::uint64_t effective_cutoff(double exponent, const TruncationPolicy& policy) {
  if (!(exponent > 0.0)) return policy.prime_limit;
  const double needed = std::exp(-std::log(policy.tail_tol) / exponent);
  if (!(needed < static_cast<double>(policy.prime_limit))) return policy.prime_limit;
  return std::min(policy.prime_limit,
                  std::max(kMinCutoff, static_cast<std::uint64_t>(std::ceil(needed))));
}

// p^{-s} with the real-axis shortcut.
inline ComplexPoint inverse_power(double log_p, ComplexPoint s) {
  if (s.imag() == 0.0) return {std::exp(-s.real() * log_p), 0.0};
  return std::exp(-s * log_p);
}

// sum_{p>P} p^{-a}, smooth density.
ComplexPoint density_tail_plain(ComplexPoint a, double log_cutoff) {
  if (a.imag() == 0.0) return exp_integral_e1((a.real() - 1.0) * log_cutoff);
  return exp_integral_e1((a - 1.0) * log_cutoff);
}

// sum_{p>P} ln p p^{-a}, smooth density.
ComplexPoint density_tail_log(ComplexPoint a, double log_cutoff) {
  return std::exp((1.0 - a) * log_cutoff) / (a - 1.0);
}

enum class Weight { Plain, Log };

// sum_{p <= cutoff} w(p) p^{-s} with a density tail correction.
SeriesResult power_sum(ComplexPoint s, Weight weight, const TruncationPolicy& policy,
                       const PrimeTable& table) {
  const double sigma = s.real();
  const std::uint64_t cutoff = effective_cutoff(sigma - 0.5, policy);
  CompensatedSum acc;
  std::size_t count = 0;
  table.for_each_prime(cutoff, [&](std::uint64_t p) {
    const double lp = std::log(static_cast<double>(p));
    const ComplexPoint q = inverse_power(lp, s);
    acc.add(weight == Weight::Log ? lp * q : q);
    ++count;
    return true;
  });
  const double log_cutoff = std::log(static_cast<double>(cutoff));
  SeriesResult r;
  r.tail_correction = weight == Weight::Log ? density_tail_log(s, log_cutoff)
                                            : density_tail_plain(s, log_cutoff);
  r.value = acc.value() + r.tail_correction;
  r.terms_used = count;
  r.tail_estimate = std::exp((0.5 - sigma) * log_cutoff);
  if (weight == Weight::Plain) r.tail_estimate /= log_cutoff;
  r.converged = r.tail_estimate <= policy.tail_tol;
  return r;
}

void require_right_of_one(ComplexPoint s, const char* what) {
  require_finite(s, what);
  if (!(s.real() > 1.0)) {
    throw DomainError(std::string(what) + ": requires Re(s) > 1 (got Re(s) = " +
                      std::to_string(s.real()) + ")");
  }
}

void require_half_plane(ComplexPoint s, const char* what) {
  require_finite(s, what);
  if (!(s.real() > 0.5)) {
    throw DomainError(std::string(what) + ": requires Re(s) > 1/2 (got Re(s) = " +
                      std::to_string(s.real()) + ")");
  }
}

void require_off_pole(ComplexPoint z, const char* what) {
  if (std::abs(z - 1.0) < 1e-8) {
    throw PoleError(std::string(what) + ": argument within 1e-8 of the pole of zeta at 1");
  }
}

// Upper bound on sum_{n>=2} n^{-x}, for real x > 1.
double zeta_minus_one_bound(double x) {
  return std::exp2(-x) + std::exp2(1.0 - x) / (x - 1.0);
}

// Upper bound on sum_{n>=2} ln n n^{-x}, for real x > 1; bounds |zeta'/zeta(x + it)|
// and |zeta_p'(x + it)|.
double log_deriv_bound(double x) {
  const double tail = std::exp2(1.0 - x) * (std::numbers::ln2 / (x - 1.0) +
                                            1.0 / ((x - 1.0) * (x - 1.0)));
  return std::numbers::ln2 * std::exp2(-x) + tail;
}

// Bound on sum_{m > k} f((m) sigma) for f decaying at least like 2^{-x}.
template <typename F>
double dilation_tail(F bound, std::size_t k, double sigma) {
  const double x = static_cast<double>(k + 1) * sigma;
  if (!(x > 1.0)) return std::numeric_limits<double>::infinity();
  return bound(x) / (1.0 - std::exp2(-sigma));
}

struct DilationSum {
  ComplexPoint value{};
  std::size_t terms = 0;
  double tail = 0.0;
};

// sum_{k <= k_max} c(k) zeta_p'(k s) with direct prime sums; c(k) in {-1, 0, 1}.
template <typename Coefficient>
DilationSum dilated_prime_sums(ComplexPoint s, const TruncationPolicy& policy,
                               const PrimeTable& table, Coefficient coeff) {
  DilationSum out;
  std::size_t k = 1;
  for (; k <= policy.k_max; ++k) {
    const int c = coeff(k);
    if (c != 0) {
      const auto term = prime_zeta_deriv_direct(static_cast<double>(k) * s, policy, table);
      out.value += static_cast<double>(c) * term.value;
      out.terms += term.terms_used;
      out.tail += term.tail_estimate;
    }
    if (dilation_tail(log_deriv_bound, k, s.real()) < policy.tail_tol) break;
  }
  out.tail += dilation_tail(log_deriv_bound, std::min(k, policy.k_max), s.real());
  return out;
}

}  // namespace

SeriesResult prime_zeta_direct(ComplexPoint s, const TruncationPolicy& policy,
                               const PrimeTable& table) {
  require_right_of_one(s, "prime_zeta_direct");
  require_table(policy, table);
  return power_sum(s, Weight::Plain, policy, table);
}

SeriesResult prime_zeta_deriv_direct(ComplexPoint s, const TruncationPolicy& policy,
                                     const PrimeTable& table) {
  require_right_of_one(s, "prime_zeta_deriv_direct");
  require_table(policy, table);
  auto r = power_sum(s, Weight::Log, policy, table);
  r.value = -r.value;
  r.tail_correction = -r.tail_correction;
  return r;
}

SeriesResult prime_zeta_mobius(ComplexPoint s, const TruncationPolicy& policy,
                               const MobiusTable& mobius) {
  require_half_plane(s, "prime_zeta_mobius");
  policy.validate();
  if (mobius.limit < policy.k_max) {
    throw CapacityError("prime_zeta_mobius: Moebius table shorter than k_max");
  }
  const double sigma = s.real();
  const auto bound = [](double x) {
    const double u = zeta_minus_one_bound(x);
    return u < 1.0 ? u / (1.0 - u) : std::numeric_limits<double>::infinity();
  };
  CompensatedSum acc;
  SeriesResult r;
  std::size_t n = 1;
  for (; n <= policy.k_max; ++n) {
    const int mu = mobius(n);
    if (mu != 0) {
      const ComplexPoint ns = static_cast<double>(n) * s;
      require_off_pole(ns, "prime_zeta_mobius");
      const ComplexPoint z = zeta(ns);
      if (std::abs(z) < kZetaZeroThreshold) {
        throw DomainError("prime_zeta_mobius: zeta(n s) numerically zero");
      }
      acc.add(static_cast<double>(mu) / static_cast<double>(n) * std::log(z));
      ++r.terms_used;
    }
    // sum_{m>n} |ln zeta(m s)| / m <= bound((n+1) sigma) / ((n+1)(1 - 2^{-sigma}))
    const double tail = dilation_tail(bound, n, sigma) / static_cast<double>(n + 1);
    if (tail < policy.tail_tol) {
      r.tail_estimate = tail;
      break;
    }
    r.tail_estimate = tail;
  }
  r.value = acc.value();
  r.converged = r.tail_estimate <= policy.tail_tol;
  return r;
}

SeriesResult prime_zeta_deriv_mobius(ComplexPoint s, const TruncationPolicy& policy) {
  require_half_plane(s, "prime_zeta_deriv_mobius");
  policy.validate();
  const auto mobius = mobius_table(std::max<std::size_t>(policy.k_max, 1));
  CompensatedSum acc;
  SeriesResult r;
  for (std::size_t k = 1; k <= policy.k_max; ++k) {
    const int mu = mobius(k);
    if (mu != 0) {
      const ComplexPoint ks = static_cast<double>(k) * s;
      require_off_pole(ks, "prime_zeta_deriv_mobius");
      acc.add(static_cast<double>(mu) * zeta_log_deriv(ks));
      ++r.terms_used;
    }
    r.tail_estimate = dilation_tail(log_deriv_bound, k, s.real());
    if (r.tail_estimate < policy.tail_tol) break;
  }
  r.value = acc.value();
  r.converged = r.tail_estimate <= policy.tail_tol;
  return r;
}

SeriesResult half_plane_difference(ComplexPoint s, const TruncationPolicy& policy,
                                   const PrimeTable& table) {
  require_half_plane(s, "half_plane_difference");
  require_table(policy, table);
  const double sigma = s.real();
  const std::uint64_t cutoff = effective_cutoff(2.0 * sigma - 0.5, policy);
  CompensatedSum acc;
  std::size_t count = 0;
  table.for_each_prime(cutoff, [&](std::uint64_t p) {
    const double lp = std::log(static_cast<double>(p));
    const ComplexPoint q = inverse_power(lp, s);
    acc.add(-lp * q * q / (1.0 - q));
    ++count;
    return true;
  });
  const double log_cutoff = std::log(static_cast<double>(cutoff));
  // -sum_{p>P} ln p sum_{m>=2} p^{-m s}
  ComplexPoint correction{};
  for (int m = 2; m < 64; ++m) {
    const ComplexPoint piece = density_tail_log(static_cast<double>(m) * s, log_cutoff);
    correction -= piece;
    if (std::abs(piece) < 1e-18 * std::max(1.0, std::abs(correction))) break;
  }
  SeriesResult r;
  r.tail_correction = correction;
  r.value = acc.value() + correction;
  r.terms_used = count;
  r.tail_estimate = std::exp((0.5 - 2.0 * sigma) * log_cutoff);
  r.converged = r.tail_estimate <= policy.tail_tol;
  return r;
}

SeriesResult tilde_zeta_euler_product(ComplexPoint s, const TruncationPolicy& policy,
                                      const PrimeTable& table) {
  require_right_of_one(s, "tilde_zeta(euler-product)");
  require_table(policy, table);
  const double sigma = s.real();
  const std::uint64_t cutoff = effective_cutoff(sigma - 0.5, policy);
  // ln prod = -sum_p ln(1 + p^{-s})
  CompensatedSum acc;
  std::size_t count = 0;
  table.for_each_prime(cutoff, [&](std::uint64_t p) {
    const double lp = std::log(static_cast<double>(p));
    const ComplexPoint q = inverse_power(lp, s);
    ComplexPoint log1p;
    if (std::abs(q) < 1e-4) {
      log1p = q * (1.0 - q * (0.5 - q * (1.0 / 3.0 - q * 0.25)));
    } else {
      log1p = std::log(1.0 + q);
    }
    acc.add(-log1p);
    ++count;
    return true;
  });
  const double log_cutoff = std::log(static_cast<double>(cutoff));
  // -sum_{p>P} ln(1 + p^{-s}) = sum_m (-1)^m / m sum_{p>P} p^{-m s}
  ComplexPoint log_tail{};
  for (int m = 1; m < 64; ++m) {
    const ComplexPoint piece = density_tail_plain(static_cast<double>(m) * s, log_cutoff) /
                               static_cast<double>(m);
    log_tail += (m % 2 == 0 ? 1.0 : -1.0) * piece;
    if (std::abs(piece) < 1e-18) break;
  }
  const ComplexPoint partial = std::exp(acc.value());
  SeriesResult r;
  r.value = std::exp(acc.value() + log_tail);
  r.tail_correction = r.value - partial;
  r.terms_used = count;
  r.tail_estimate = std::abs(r.value) * std::exp((0.5 - sigma) * log_cutoff) / log_cutoff;
  r.converged = r.tail_estimate <= policy.tail_tol;
  return r;
}

ComplexPoint tilde_zeta_ratio(ComplexPoint s) {
  require_half_plane(s, "tilde_zeta(ratio)");
  require_off_pole(s, "tilde_zeta(ratio)");
  const ComplexPoint z = zeta(s);
  if (std::abs(z) < kZetaZeroThreshold) {
    throw DomainError("tilde_zeta(ratio): |zeta(s)| below 1e-10, s is near a zero");
  }
  return zeta(2.0 * s) / z;
}

ComplexPoint tilde_zeta(ComplexPoint s, TildeMethod method, const TruncationPolicy& policy,
                        const PrimeTable& table) {
  switch (method) {
    case TildeMethod::EulerProduct:
      return tilde_zeta_euler_product(s, policy, table).value;
    case TildeMethod::Ratio:
      return tilde_zeta_ratio(s);
  }
  throw DomainError("tilde_zeta: unknown method");
}

IdentityReport euler_log_deriv_sum(ComplexPoint s, const TruncationPolicy& policy,
                                   const PrimeTable& table) {
  require_right_of_one(s, "euler_log_deriv_sum");
  const ComplexPoint lhs = zeta_log_deriv(s);
  const auto rhs = dilated_prime_sums(s, policy, table, [](std::size_t) { return 1; });
  return make_report(s, lhs, rhs.value, 1, rhs.terms, rhs.tail);
}

IdentityReport tilde_log_deriv_series(ComplexPoint s, const TruncationPolicy& policy,
                                      const PrimeTable& table) {
  require_right_of_one(s, "tilde_log_deriv_series");
  const ComplexPoint lhs = 2.0 * zeta_log_deriv(2.0 * s) - zeta_log_deriv(s);
  const auto rhs = dilated_prime_sums(s, policy, table,
                                      [](std::size_t k) { return k % 2 == 0 ? 1 : -1; });
  return make_report(s, lhs, rhs.value, 2, rhs.terms, rhs.tail);
}

IdentityReport odd_k_identity(ComplexPoint s, const TruncationPolicy& policy,
                              const PrimeTable& table) {
  require_right_of_one(s, "odd_k_identity");
  const ComplexPoint lhs = zeta_log_deriv(s) - zeta_log_deriv(2.0 * s);
  const auto rhs =
      dilated_prime_sums(s, policy, table, [](std::size_t k) { return k % 2 == 1 ? 1 : 0; });
  return make_report(s, lhs, rhs.value, 2, rhs.terms, rhs.tail);
}

IdentityReport tilde_product_identity(ComplexPoint s, TildeMethod method,
                                      const TruncationPolicy& policy, const PrimeTable& table) {
  require_finite(s, "tilde_product_identity");
  require_off_pole(2.0 * s, "tilde_product_identity");
  if (method == TildeMethod::EulerProduct) {
    const auto t = tilde_zeta_euler_product(s, policy, table);
    return make_report(s, t.value * zeta(s), zeta(2.0 * s), t.terms_used, 1,
                       t.tail_estimate * std::abs(zeta(s)));
  }
  const ComplexPoint t = tilde_zeta_ratio(s);
  return make_report(s, t * zeta(s), zeta(2.0 * s), 2, 1, 0.0);
}

IdentityReport mobius_deriv_identity(ComplexPoint s, const TruncationPolicy& policy,
                                     const PrimeTable& table) {
  const auto direct = prime_zeta_deriv_direct(s, policy, table);
  const auto mobius = prime_zeta_deriv_mobius(s, policy);
  return make_report(s, direct.value, mobius.value, direct.terms_used, mobius.terms_used,
                     direct.tail_estimate + mobius.tail_estimate);
}

IdentityReport prime_zeta_identity(ComplexPoint s, const TruncationPolicy& policy,
                                   const PrimeTable& table, const MobiusTable& mobius) {
  const auto direct = prime_zeta_direct(s, policy, table);
  const auto mob = prime_zeta_mobius(s, policy, mobius);
  return make_report(s, direct.value, mob.value, direct.terms_used, mob.terms_used,
                     direct.tail_estimate + mob.tail_estimate);
}

IdentityReport continuation_identity(ComplexPoint s, const TruncationPolicy& policy,
                                     const PrimeTable& table) {
  require_half_plane(s, "continuation_identity");
  require_off_pole(s, "continuation_identity");
  const ComplexPoint lhs = zeta_log_deriv(s);
  const auto deriv = prime_zeta_deriv_mobius(s, policy);
  const auto diff = half_plane_difference(s, policy, table);
  return make_report(s, lhs, deriv.value + diff.value, 1, deriv.terms_used + diff.terms_used,
                     deriv.tail_estimate + diff.tail_estimate);
}

}  // namespace liprime
