#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>

namespace liprime {

/// A point s = sigma + i t of the complex plane.
using ComplexPoint = std::complex<double>;

/// Throws DomainError if either component is NaN or infinite.
void require_finite(ComplexPoint s, const char* what);
void require_finite(double x, const char* what);

/// Partial sum of a series together with what is known about the omitted part.
///
/// `value` is the best available estimate of the full series: the explicit
/// partial sum plus `tail_correction`, a smooth-density approximation of the
/// omitted terms (zero when no correction is applied). `tail_estimate` is the
/// uncertainty that remains in `value`.
struct SeriesResult {
  ComplexPoint value{};
  ComplexPoint tail_correction{};
  std::size_t terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = false;

  [[nodiscard]] ComplexPoint partial_sum() const { return value - tail_correction; }
};

/// Two independently computed sides of an identity.
struct IdentityReport {
  ComplexPoint s{};
  ComplexPoint lhs{};
  ComplexPoint rhs{};
  double residual = 0.0;  // |lhs - rhs|
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  double tail_estimate = 0.0;
  // Extra bound carried by some reports (majorant, mean-value bound).
  std::optional<double> bound;
  std::string note;
};

/// Builds a report with residual = |lhs - rhs|.
IdentityReport make_report(ComplexPoint s, ComplexPoint lhs, ComplexPoint rhs,
                           std::size_t lhs_terms, std::size_t rhs_terms,
                           double tail_estimate);

}  // namespace liprime
