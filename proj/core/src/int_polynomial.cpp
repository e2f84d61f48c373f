#include "liprime/int_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "liprime/errors.hpp"

namespace liprime {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t k) {
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

mpz_class IntPolynomial::leading() const {
  return coeffs_.empty() ? mpz_class(0) : coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::shifted() const {
  if (is_zero()) return {};
  std::vector<mpz_class> v;
  v.reserve(coeffs_.size() + 1);
  v.emplace_back(0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

SplitCoefficients IntPolynomial::split() const {
  SplitCoefficients out;
  out.hi.reserve(coeffs_.size());
  out.lo.reserve(coeffs_.size());
  mpz_class rest;
  for (const auto& c : coeffs_) {
    // mpz_get_d truncates silently; anything wider than the double exponent
    // range would come back as inf.
    if (mpz_sizeinbase(c.get_mpz_t(), 2) > 1023) {
      throw OverflowError("IntPolynomial::evaluate: coefficient exceeds double range");
    }
    const double hi = c.get_d();
    rest = c - mpz_class(hi);
    out.hi.push_back(hi);
    out.lo.push_back(rest.get_d());
  }
  return out;
}

double SplitCoefficients::evaluate(double x) const {
  // Compensated Horner: each coefficient enters as hi + lo, and the rounding
  // errors of every multiply-add are carried in a second accumulator. P_n
  // alternates in sign, so plain Horner loses digits to cancellation.
  double acc = 0.0;
  double err = 0.0;
  for (std::size_t k = hi.size(); k-- > 0;) {
    const double prod = acc * x;
    const double prod_err = std::fma(acc, x, -prod);
    const double sum = prod + hi[k];
    const double bb = sum - prod;
    const double sum_err = (prod - (sum - bb)) + (hi[k] - bb);
    acc = sum;
    err = err * x + (prod_err + sum_err + lo[k]);
  }
  const double result = acc + err;
  if (!std::isfinite(result)) throw OverflowError("IntPolynomial::evaluate: result overflowed");
  return result;
}

double IntPolynomial::evaluate(double x) const { return split().evaluate(x); }

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const mpz_class& c, const IntPolynomial& p) {
  std::vector<mpz_class> v(p.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
  return IntPolynomial(std::move(v));
}

}  // namespace liprime
