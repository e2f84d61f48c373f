#include "liprime/csv.hpp"

#include <charconv>
#include <cmath>

namespace liprime::csv {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> header_cells(std::string_view header) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = header.find(',', start);
    out.emplace_back(header.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> error_row_cells(const ErrorRow& r) {
  return {std::to_string(r.n), std::to_string(r.p_n), format_real(r.li_inv_n),
          format_real(r.abs_err), format_real(r.scaled_err)};
}

std::vector<std::string> identity_row_cells(const IdentityReport& r, bool tail_from_bound) {
  const double tail = (tail_from_bound && r.bound) ? *r.bound : r.tail_estimate;
  return {format_real(r.s.real()),   format_real(r.s.imag()),   format_real(r.lhs.real()),
          format_real(r.lhs.imag()), format_real(r.rhs.real()), format_real(r.rhs.imag()),
          format_real(r.residual),   format_real(tail)};
}

void write_row(std::ostream& os, std::span<const std::string> cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

void write_error_table(std::ostream& os, std::span<const ErrorRow> rows) {
  os << kErrorTableHeader << '\n';
  for (const auto& r : rows) write_row(os, error_row_cells(r));
}

void write_identity_header(std::ostream& os) { os << kIdentityHeader << '\n'; }

void write_identity_row(std::ostream& os, const IdentityReport& r) {
  write_row(os, identity_row_cells(r));
}

}  // namespace liprime::csv
