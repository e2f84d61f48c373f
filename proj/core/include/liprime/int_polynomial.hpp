#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace liprime {

/// Coefficients rounded to double pairs hi + lo, ready for repeated
/// evaluation without touching GMP.
struct SplitCoefficients {
  std::vector<double> hi;
  std::vector<double> lo;

  /// Compensated Horner evaluation. Throws OverflowError on a non-finite result.
  [[nodiscard]] double evaluate(double x) const;
};

/// Univariate polynomial with exact GMP integer coefficients; coeffs()[i] is
/// the coefficient of x^i. Always normalized: no trailing zero coefficients,
/// so the zero polynomial has an empty coefficient vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  /// The monomial c x^k.
  static IntPolynomial monomial(const mpz_class& c, std::size_t k);

  [[nodiscard]] const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i (zero beyond the degree).
  [[nodiscard]] mpz_class coeff(std::size_t i) const;
  [[nodiscard]] mpz_class leading() const;

  [[nodiscard]] IntPolynomial derivative() const;
  /// Multiplication by x.
  [[nodiscard]] IntPolynomial shifted() const;

  /// Horner evaluation in double. Throws OverflowError if a coefficient does
  /// not fit in a double.
  [[nodiscard]] double evaluate(double x) const;
  /// Throws OverflowError if a coefficient does not fit in a double.
  [[nodiscard]] SplitCoefficients split() const;

  [[nodiscard]] std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

}  // namespace liprime
