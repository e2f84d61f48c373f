#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liprime/types.hpp"

namespace liprime::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitThreshold = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Auto, Csv, Plain };

/// Settings shared by all subcommands. Values come from flags, optionally
/// preloaded from a `key = value` config file.
struct RunConfig {
  std::uint64_t sieve_limit = 10'000'000;
  // 0 means "same as sieve_limit".
  std::uint64_t prime_limit = 0;
  std::size_t k_max = 64;
  double tail_tol = 1e-12;
  unsigned threads = 0;
  Format format = Format::Auto;
  std::optional<std::string> output_path;
};

/// Parses "3", "3+1i", "0.75-2.5i", "2i".
ComplexPoint parse_complex(std::string_view text);

/// Parses "a:b:step" (inclusive, step > 0) or a single number.
std::vector<double> parse_range(std::string_view text);

/// Runs the command line (args excludes the program name). Everything that
/// would go to stdout goes to `out`, diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liprime::cli
