#include "liprime/types.hpp"

#include <cmath>
#include <string>

#include "liprime/errors.hpp"

namespace liprime {

void require_finite(ComplexPoint s, const char* what) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError(std::string(what) + ": argument must be finite");
  }
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument must be finite");
}

IdentityReport make_report(ComplexPoint s, ComplexPoint lhs, ComplexPoint rhs,
                           std::size_t lhs_terms, std::size_t rhs_terms,
                           double tail_estimate) {
  IdentityReport r;
  r.s = s;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = std::abs(lhs - rhs);
  r.lhs_terms = lhs_terms;
  r.rhs_terms = rhs_terms;
  r.tail_estimate = tail_estimate;
  return r;
}

}  // namespace liprime
