#pragma once

#include <cstdint>
#include <vector>

#include "liprime/primes.hpp"
#include "liprime/types.hpp"

namespace liprime {

/// Truncation controls shared by every prime-sum and dilation-sum operation.
///
/// Prime sums run over p <= prime_limit, but stop earlier once the modelled
/// post-correction error (see below) drops under tail_tol. Dilation sums
/// over k (zeta_p(k s), zeta'/zeta(k s), ...) stop at k_max or as soon as the
/// bound on the remaining terms drops under tail_tol.
struct TruncationPolicy {
  std::uint64_t prime_limit = 10'000'000;
  std::size_t k_max = 64;
  double tail_tol = 1e-12;

  /// Throws DomainError unless all fields are positive and tail_tol < 1.
  void validate() const;
};

// Truncated prime sums add a smooth-density estimate of the omitted primes,
// obtained by replacing sum_{p > P} w(p) with \int_P^inf w(t) dt / ln t:
//   sum_{p>P} p^{-a}        ~ E1((a - 1) ln P)
//   sum_{p>P} ln p p^{-a}   ~ P^{1-a} / (a - 1)
// What remains is driven by the fluctuation of the prime count around that
// density, modelled as P^{1/2 - Re a} (divided by ln P for unweighted sums).
// That model is what tail_estimate reports.

/// zeta_p(s) = sum_p p^{-s}. Requires Re(s) > 1.
SeriesResult prime_zeta_direct(ComplexPoint s, const TruncationPolicy& policy,
                               const PrimeTable& table);

/// zeta_p(s) = sum_n mu(n)/n ln zeta(n s), principal branch of ln.
/// Requires Re(s) > 1/2 and n s away from the pole; for 1/2 < Re(s) <= 1 the
/// n = 1 term is the principal logarithm of zeta(s), which continues the
/// direct sum off the real axis but carries i*pi where zeta(s) < 0.
SeriesResult prime_zeta_mobius(ComplexPoint s, const TruncationPolicy& policy,
                               const MobiusTable& mobius);

/// zeta_p'(s) = -sum_p ln p p^{-s}. Requires Re(s) > 1.
SeriesResult prime_zeta_deriv_direct(ComplexPoint s, const TruncationPolicy& policy,
                                     const PrimeTable& table);

/// zeta_p'(s) = sum_k mu(k) (zeta'/zeta)(k s), the Moebius inversion of
/// zeta'/zeta(s) = sum_k zeta_p'(k s). Requires Re(s) > 1/2.
SeriesResult prime_zeta_deriv_mobius(ComplexPoint s, const TruncationPolicy& policy);

/// zeta'/zeta(s) - zeta_p'(s) = -sum_p ln p / (p^s (p^s - 1)), convergent on
/// Re(s) > 1/2.
SeriesResult half_plane_difference(ComplexPoint s, const TruncationPolicy& policy,
                                   const PrimeTable& table);

enum class TildeMethod { EulerProduct, Ratio };

/// prod_p 1/(1 + p^{-s}) truncated at the policy cutoff. Requires Re(s) > 1.
/// partial_sum() is the bare truncated product.
SeriesResult tilde_zeta_euler_product(ComplexPoint s, const TruncationPolicy& policy,
                                      const PrimeTable& table);

/// zeta(2s) / zeta(s). Requires Re(s) > 1/2, s != 1 and |zeta(s)| > 1e-10.
ComplexPoint tilde_zeta_ratio(ComplexPoint s);

/// Dispatches on method; table is only read by EulerProduct.
ComplexPoint tilde_zeta(ComplexPoint s, TildeMethod method, const TruncationPolicy& policy,
                        const PrimeTable& table);

// ---------------------------------------------------------------------------
// Identity reports. Each side is computed by an independent route.
// ---------------------------------------------------------------------------

/// zeta'/zeta(s) against sum_{k >= 1} zeta_p'(k s) (direct prime sums). Re(s) > 1.
IdentityReport euler_log_deriv_sum(ComplexPoint s, const TruncationPolicy& policy,
                                   const PrimeTable& table);

/// 2 zeta'/zeta(2s) - zeta'/zeta(s) against sum_k (-1)^k zeta_p'(k s). Re(s) > 1.
IdentityReport tilde_log_deriv_series(ComplexPoint s, const TruncationPolicy& policy,
                                      const PrimeTable& table);

/// zeta'/zeta(s) - zeta'/zeta(2s) against sum_{k odd} zeta_p'(k s). Re(s) > 1.
IdentityReport odd_k_identity(ComplexPoint s, const TruncationPolicy& policy,
                              const PrimeTable& table);

/// tilde_zeta(s) zeta(s) against zeta(2s).
IdentityReport tilde_product_identity(ComplexPoint s, TildeMethod method,
                                      const TruncationPolicy& policy, const PrimeTable& table);

/// prime_zeta_deriv_direct against prime_zeta_deriv_mobius. Re(s) > 1.
IdentityReport mobius_deriv_identity(ComplexPoint s, const TruncationPolicy& policy,
                                     const PrimeTable& table);

/// prime_zeta_direct against prime_zeta_mobius. Re(s) > 1.
IdentityReport prime_zeta_identity(ComplexPoint s, const TruncationPolicy& policy,
                                   const PrimeTable& table, const MobiusTable& mobius);

/// zeta'/zeta(s) against prime_zeta_deriv_mobius(s) + half_plane_difference(s),
/// the continuation of zeta_p' into 1/2 < Re(s). Requires Re(s) > 1/2.
IdentityReport continuation_identity(ComplexPoint s, const TruncationPolicy& policy,
                                     const PrimeTable& table);

}  // namespace liprime
