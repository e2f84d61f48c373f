#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liprime/analysis.hpp"
#include "liprime/types.hpp"

namespace liprime::csv {

inline constexpr std::string_view kErrorTableHeader = "n,p_n,li_inv,abs_err,scaled_err";
inline constexpr std::string_view kIdentityHeader =
    "s_re,s_im,lhs_re,lhs_im,rhs_re,rhs_im,residual,tail";

/// Shortest round-trip decimal for a double ("%.17g" trimmed).
std::string format_real(double v);

/// Splits a header string on commas.
std::vector<std::string> header_cells(std::string_view header);

std::vector<std::string> error_row_cells(const ErrorRow& r);
/// The last cell is tail_estimate, or `bound` when tail_from_bound is set and
/// the report carries one.
std::vector<std::string> identity_row_cells(const IdentityReport& r, bool tail_from_bound = false);

/// Writes cells joined by commas plus a newline.
void write_row(std::ostream& os, std::span<const std::string> cells);

void write_error_table(std::ostream& os, std::span<const ErrorRow> rows);
void write_identity_header(std::ostream& os);
void write_identity_row(std::ostream& os, const IdentityReport& r);

}  // namespace liprime::csv
