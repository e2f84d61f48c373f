#include "liprime_cli/app.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "liprime/analysis.hpp"
#include "liprime/csv.hpp"
#include "liprime/errors.hpp"
#include "liprime/parallel.hpp"
#include "liprime/polyrec.hpp"
#include "liprime/prime_zeta.hpp"
#include "liprime/primes.hpp"
#include "liprime/special_fn.hpp"

namespace liprime::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != end) {
    throw UsageError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t to_count(double v, const char* name, std::uint64_t min_value = 1) {
  if (!std::isfinite(v) || v != std::floor(v) || v < static_cast<double>(min_value) || v > 1e18) {
    throw UsageError(std::string(name) + " must be an integer >= " + std::to_string(min_value));
  }
  return static_cast<std::uint64_t>(v);
}

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Rows of cells, emitted as CSV or as space-aligned columns.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os, Format format) const {
    if (format != Format::Plain) {
      csv::write_row(os, header);
      for (const auto& r : rows) csv::write_row(os, r);
      return;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) os << "  ";
        os << std::string(width[c] - cells[c].size(), ' ') << cells[c];
      }
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

// ---------------------------------------------------------------------------
// Sieve construction with the optional on-disk cache.
// ---------------------------------------------------------------------------

PrimeTable obtain_table(std::uint64_t limit, std::ostream& err) {
  const char* dir = std::getenv("LIPRIME_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return sieve(limit);
  namespace fs = std::filesystem;
  const fs::path path = fs::path(dir) / ("primes-" + std::to_string(limit) + ".lipr");
  std::error_code ec;
  if (fs::exists(path, ec)) {
    try {
      auto t = load_prime_table(path);
      if (t.limit() == limit) return t;
      err << "warning: cache " << path.string() << " has limit " << t.limit() << ", rebuilding\n";
    } catch (const Error& e) {
      err << "warning: ignoring unreadable cache (" << e.what() << ")\n";
    }
  }
  auto t = sieve(limit);
  try {
    fs::create_directories(path.parent_path(), ec);
    const fs::path tmp = path.string() + ".tmp";
    save_prime_table(tmp, t);
    fs::rename(tmp, path);
  } catch (const std::exception& e) {
    err << "warning: could not write sieve cache: " << e.what() << '\n';
  }
  return t;
}

TruncationPolicy make_policy(const RunConfig& cfg) {
  TruncationPolicy p;
  p.prime_limit = cfg.prime_limit == 0 ? cfg.sieve_limit : cfg.prime_limit;
  p.k_max = cfg.k_max;
  p.tail_tol = cfg.tail_tol;
  p.validate();
  if (p.prime_limit > cfg.sieve_limit) {
    throw CapacityError("prime limit " + std::to_string(p.prime_limit) +
                        " exceeds the sieve limit " + std::to_string(cfg.sieve_limit));
  }
  return p;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct IdentitySpec {
  double threshold;
  std::vector<double> default_re;
  std::vector<double> default_im;
  std::vector<ComplexPoint> default_points;  // used instead of the re x im grid when set
};

const std::map<std::string, IdentitySpec>& identities() {
  static const std::map<std::string, IdentitySpec> specs = [] {
    const std::vector<double> sum_re{1.2, 1.5, 2.0, 3.0};
    const std::vector<double> sum_im{0.0, 5.0, 10.0};
    std::map<std::string, IdentitySpec> m;
    m["eq12"] = {1e-6, sum_re, sum_im, {}};
    m["eq26"] = {1e-6, sum_re, sum_im, {}};
    m["eq27"] = {1e-6, sum_re, sum_im, {}};
    m["eq28"] = {1e-6, sum_re, sum_im, {}};
    m["eq24"] = {1e-7, parse_range("0.6:3:0.2"), parse_range("0:10:2"), {}};
    m["eq29"] = {1e-9, {}, {}, {1.5, 2.0, 3.0, 5.0}};
    m["eq21"] = {1e-8, {}, {}, {1.5, 2.0, 3.0}};
    return m;
  }();
  return specs;
}

inline constexpr double kEq21DerivativeThreshold = 1e-6;
inline constexpr double kPoleSkipRadius = 1e-3;

struct VerifyArgs {
  std::string identity;
  std::vector<std::string> points;
  std::string re;
  std::string im;
  std::string method = "ratio";
  double threshold = 0.0;  // 0 keeps the per-identity default
};

std::string show(ComplexPoint s) {
  std::ostringstream os;
  os << fmt15(s.real());
  if (s.imag() != 0.0) os << (s.imag() < 0 ? "-" : "+") << fmt15(std::abs(s.imag())) << 'i';
  return os.str();
}

void check_domain(const std::string& id, ComplexPoint s, bool euler_product) {
  const auto fail = [&](const char* need) {
    throw DomainError(id + " requires " + need + " (got s = " + show(s) + ")");
  };
  if (id == "eq21") {
    if (s.imag() != 0.0 || !(s.real() > 1.0)) fail("real s > 1");
  } else if (id == "eq24") {
    if (euler_product ? !(s.real() > 1.0) : !(s.real() > 0.5)) {
      fail(euler_product ? "Re(s) > 1 for the Euler product" : "Re(s) > 1/2");
    }
  } else if (!(s.real() > 1.0)) {
    fail("Re(s) > 1");
  }
}

int cmd_verify(const VerifyArgs& args, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& spec = identities().at(args.identity);
  const bool euler_product = args.method == "euler-product";

  std::vector<ComplexPoint> grid;
  if (!args.points.empty()) {
    if (!args.re.empty() || !args.im.empty()) throw UsageError("--s cannot be combined with --re/--im");
    for (const auto& p : args.points) grid.push_back(parse_complex(p));
  } else if (!args.re.empty() || !args.im.empty()) {
    std::vector<double> re = args.re.empty() ? spec.default_re : parse_range(args.re);
    std::vector<double> im = args.im.empty() ? std::vector<double>{0.0} : parse_range(args.im);
    if (re.empty()) throw UsageError(args.identity + " takes --s points rather than a --re grid");
    for (double r : re)
      for (double i : im) grid.emplace_back(r, i);
  } else if (!spec.default_points.empty()) {
    grid = spec.default_points;
  } else {
    for (double r : spec.default_re)
      for (double i : spec.default_im) grid.emplace_back(r, i);
  }

  std::size_t skipped = 0;
  std::vector<ComplexPoint> points;
  for (auto s : grid) {
    if (args.identity == "eq24" && !euler_product && std::abs(s - 1.0) < kPoleSkipRadius) {
      ++skipped;
      continue;
    }
    check_domain(args.identity, s, euler_product);
    points.push_back(s);
  }

  const bool needs_table = args.identity != "eq21" && !(args.identity == "eq24" && !euler_product);
  std::optional<TruncationPolicy> policy;
  std::optional<PrimeTable> table;
  std::optional<MobiusTable> mobius;
  if (args.identity != "eq21") policy = make_policy(cfg);
  if (needs_table) table = obtain_table(cfg.sieve_limit, err);
  if (args.identity == "eq29") mobius = mobius_table(std::max<std::size_t>(cfg.k_max, 1));
  const PrimeTable empty;
  const PrimeTable& tab = table ? *table : empty;

  const auto evaluate = [&](std::size_t i) -> std::vector<IdentityReport> {
    const ComplexPoint s = points[i];
    const auto& id = args.identity;
    if (id == "eq12") return {euler_log_deriv_sum(s, *policy, tab)};
    if (id == "eq24") {
      return {tilde_product_identity(s, euler_product ? TildeMethod::EulerProduct : TildeMethod::Ratio,
                                     *policy, tab)};
    }
    if (id == "eq26") return {tilde_log_deriv_series(s, *policy, tab)};
    if (id == "eq27") return {odd_k_identity(s, *policy, tab)};
    if (id == "eq28") return {mobius_deriv_identity(s, *policy, tab)};
    if (id == "eq29") return {prime_zeta_identity(s, *policy, tab, *mobius)};
    const auto r = integral_identity_check(s.real());
    // The second row compares d/ds of the integral with -2^{1-s}/(s-1).
    IdentityReport d = make_report(s, r.derivative_numeric, r.derivative_closed_form, 0, 0, 0.0);
    d.note = "s-derivative";
    return {r.value, d};
  };
  const auto results = parallel_map(points.size(), evaluate, cfg.threads);

  const double threshold = args.threshold > 0.0 ? args.threshold : spec.threshold;
  Table t{csv::header_cells(csv::kIdentityHeader), {}};
  std::size_t failures = 0;
  double worst = 0.0;
  double worst_derivative = 0.0;
  for (const auto& reports : results) {
    for (std::size_t k = 0; k < reports.size(); ++k) {
      const auto& r = reports[k];
      t.rows.push_back(csv::identity_row_cells(r));
      const bool derivative_row = (k == 1);
      const double limit = derivative_row ? kEq21DerivativeThreshold : threshold;
      (derivative_row ? worst_derivative : worst) =
          std::max(derivative_row ? worst_derivative : worst, r.residual);
      if (!(r.residual < limit)) ++failures;
    }
  }
  t.write(out, cfg.format);

  err << "verify " << args.identity << ": " << points.size() << " points, max residual "
      << fmt_short(worst) << " (threshold " << fmt_short(threshold) << ")";
  if (args.identity == "eq21") {
    err << ", max derivative residual " << fmt_short(worst_derivative) << " (threshold "
        << fmt_short(kEq21DerivativeThreshold) << ")";
  }
  if (skipped) err << ", skipped " << skipped << " point(s) at the pole s = 1";
  err << ": " << (failures ? "FAIL" : "PASS") << '\n';
  return failures ? kExitThreshold : kExitOk;
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

std::vector<ErrorRow> error_rows(std::uint64_t n_max, const RunConfig& cfg, std::ostream& err) {
  const auto table = obtain_table(cfg.sieve_limit, err);
  return approx_error_table(n_max, table, cfg.threads);
}

int cmd_error_table(double n_max_arg, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto n_max = to_count(n_max_arg, "--n-max");
  const auto rows = error_rows(n_max, cfg, err);
  Table t{csv::header_cells(csv::kErrorTableHeader), {}};
  t.rows.reserve(rows.size());
  for (const auto& r : rows) t.rows.push_back(csv::error_row_cells(r));
  t.write(out, cfg.format);
  err << "scan error-table: " << rows.size() << " rows, max scaled error "
      << fmt15(max_scaled_error(rows)) << '\n';
  return kExitOk;
}

int cmd_exponent_fit(const std::string& range, const RunConfig& cfg, std::ostream& out,
                     std::ostream& err) {
  const auto colon = range.find(':');
  if (colon == std::string::npos || range.find(':', colon + 1) != std::string::npos) {
    throw UsageError("--range must look like n_min:n_max");
  }
  const auto n_min = to_count(parse_double(std::string_view(range).substr(0, colon), "n_min"), "n_min");
  const auto n_max = to_count(parse_double(std::string_view(range).substr(colon + 1), "n_max"), "n_max");
  if (n_min < 10 || n_max <= n_min) throw UsageError("--range needs 10 <= n_min < n_max");
  const auto rows = error_rows(n_max, cfg, err);
  std::vector<double> n, e;
  for (const auto& r : rows) {
    if (r.n < n_min) continue;
    n.push_back(static_cast<double>(r.n));
    e.push_back(r.abs_err);
  }
  const double alpha = fit_loglog_slope(n, e);
  if (cfg.format == Format::Csv) {
    out << "n_min,n_max,alpha\n" << n_min << ',' << n_max << ',' << csv::format_real(alpha) << '\n';
  } else {
    out << fmt15(alpha) << '\n';
  }
  return kExitOk;
}

int cmd_error_series(const std::string& sigmas, double epsilon, double n_max_arg,
                     const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto n_max = to_count(n_max_arg, "--n-max");
  const auto sigma_values = parse_range(sigmas);
  for (double s : sigma_values)
    if (!(s > 0.0)) throw DomainError("error-series requires sigma > 0");
  if (!(epsilon > 0.0) || !(epsilon < 0.5)) throw DomainError("error-series requires 0 < epsilon < 1/2");
  const auto rows = error_rows(n_max, cfg, err);
  ErrorSeriesOptions opts;
  opts.epsilon = epsilon;
  Table t{{"sigma", "epsilon", "n_max", "sum_li_inv", "sum_p", "tail", "converged"}, {}};
  for (double sigma : sigma_values) {
    const auto [a, b] = error_series_partial(sigma, rows, opts);
    t.rows.push_back({csv::format_real(sigma), csv::format_real(epsilon), std::to_string(n_max),
                      csv::format_real(a.value.real()), csv::format_real(b.value.real()),
                      csv::format_real(a.tail_estimate), a.converged ? "true" : "false"});
  }
  t.write(out, cfg.format);
  return kExitOk;
}

int cmd_sum_vs_integral(const std::vector<std::string>& s_args, double n_max_arg,
                        const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto n_max = to_count(n_max_arg, "--n-max");
  std::vector<ComplexPoint> points;
  for (const auto& a : s_args) {
    const auto s = parse_complex(a);
    if (!(s.real() > 1.0)) throw DomainError("sum-vs-integral requires Re(s) > 1 (got s = " + show(s) + ")");
    points.push_back(s);
  }
  const auto reports = parallel_map(
      points.size(), [&](std::size_t i) { return integral_vs_sum(points[i], n_max); }, cfg.threads);
  Table t{csv::header_cells(csv::kIdentityHeader), {}};
  for (const auto& r : reports) t.rows.push_back(csv::identity_row_cells(r, true));
  t.write(out, cfg.format);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// single values
// ---------------------------------------------------------------------------

void emit_value(std::ostream& out, Format format, const char* name, const std::string& input,
                const std::string& plain, const std::string& exact) {
  if (format == Format::Csv) {
    out << "input," << name << '\n' << input << ',' << exact << '\n';
  } else {
    out << plain << '\n';
  }
}

}  // namespace

ComplexPoint parse_complex(std::string_view text) {
  std::string_view t = text;
  if (t.empty()) throw UsageError("empty complex number");
  if (t.back() != 'i') return {parse_double(t, "a real number"), 0.0};
  t.remove_suffix(1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const auto imag_of = [&](std::string_view part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    if (part.front() == '+') part.remove_prefix(1);
    return parse_double(part, "an imaginary part");
  };
  if (split == std::string_view::npos) return {0.0, imag_of(t)};
  return {parse_double(t.substr(0, split), "a real part"), imag_of(t.substr(split))};
}

std::vector<double> parse_range(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() == 1) return {parse_double(parts[0], "a number")};
  if (parts.size() != 3) throw UsageError("range must be a:b:step, got '" + std::string(text) + "'");
  const double a = parse_double(parts[0], "range start");
  const double b = parse_double(parts[1], "range end");
  const double step = parse_double(parts[2], "range step");
  if (!(step > 0.0) || !(b >= a)) throw UsageError("range needs a <= b and step > 0");
  const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
  if (count > 1'000'000) throw UsageError("range has too many points");
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    // Snap to the decimal grid so 0.6 + 2 * 0.2 prints as 1 rather than 1.0000000000000002.
    const double v = a + static_cast<double>(k) * step;
    out[k] = std::stod(fmt15(v));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic integral, prime counting and prime zeta toolkit", "liprime"};
  app.option_defaults()->always_capture_default();
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a file of key = value lines (flags override)");
  app.allow_config_extras(CLI::config_extras_mode::error);

  double sieve_limit = 1e7;
  double prime_limit = 0;
  double k_max = 64;
  double tail_tol = 1e-12;
  unsigned threads = 0;
  std::string format = "auto";
  std::string output;
  app.add_option("--sieve-limit", sieve_limit, "Sieve primes up to this bound (at most 1e9)");
  app.add_option("--prime-limit", prime_limit, "Cutoff for prime sums; 0 means the sieve limit");
  app.add_option("--k-max", k_max, "Cutoff for sums over dilations k s");
  app.add_option("--tail-tol", tail_tol, "Early-stop tolerance for truncated series");
  app.add_option("--threads", threads, "Worker threads; 0 uses all cores");
  app.add_option("--format", format, "Output format; auto is csv for tables and plain for single values")
      ->check(CLI::IsMember({"auto", "csv", "plain"}));
  app.add_option("--output,-o", output, "Write results to this file instead of stdout");

  // single values
  std::string li_x, li_inv_y, pi_x, nth_n, approx;
  auto* li_cmd = app.add_subcommand("li", "Offset logarithmic integral, integral of dt/ln t from 2 to x");
  li_cmd->add_option("x", li_x, "Argument, x >= 2")->required();
  auto* li_inv_cmd = app.add_subcommand("li-inv", "Inverse of li by safeguarded Newton iteration");
  li_inv_cmd->add_option("y", li_inv_y, "Argument, y >= 0")->required();
  auto* pi_cmd = app.add_subcommand("pi", "Number of primes <= x");
  pi_cmd->add_option("x", pi_x, "Argument, 0 <= x <= sieve limit")->required();
  auto* nth_cmd = app.add_subcommand("nth-prime", "The n-th prime, or li^{-1}(n) with --approx");
  nth_cmd->add_option("n", nth_n, "Index, n >= 1")->required();
  nth_cmd->add_option("--approx", approx, "Print li^{-1}(n) computed by this method instead")
      ->check(CLI::IsMember({"newton", "taylor-chain"}));

  // verify
  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Check an identity on a grid of s values; CSV report");
  std::vector<std::string> identity_names;
  for (const auto& [name, spec] : identities()) identity_names.push_back(name);
  verify->add_option("identity", vargs.identity, "Identity to check")
      ->required()
      ->check(CLI::IsMember(identity_names));
  verify->add_option("--s", vargs.points, "Explicit points such as 2 or 3+1i (repeatable)");
  verify->add_option("--re", vargs.re, "Real parts as a:b:step; default depends on the identity");
  verify->add_option("--im", vargs.im, "Imaginary parts as a:b:step (default 0 with --re)");
  verify->add_option("--method", vargs.method, "eq24 only: which side computes tilde zeta")
      ->check(CLI::IsMember({"ratio", "euler-product"}));
  verify->add_option("--threshold", vargs.threshold,
                     "Override the residual threshold; 0 keeps the identity's own");

  // scan
  auto* scan = app.add_subcommand("scan", "Error tables and convergence scans");
  scan->require_subcommand(1);
  double et_n_max = 1000;
  auto* error_table = scan->add_subcommand("error-table", "Rows n, p_n, li^{-1}(n) and errors");
  error_table->add_option("--n-max", et_n_max, "Last n");
  std::string fit_range = "100:10000";
  auto* fit = scan->add_subcommand("exponent-fit", "Slope of log|li^{-1}(n) - p_n| against log n");
  fit->add_option("--range", fit_range, "n_min:n_max");
  std::string es_sigma = "0.4:1.2:0.2";
  double es_eps = 0.05;
  double es_n_max = 10000;
  auto* series = scan->add_subcommand("error-series", "Partial sums of the two error series");
  series->add_option("--sigma", es_sigma, "Values of sigma as a:b:step");
  series->add_option("--epsilon", es_eps, "Slack in the comparison exponent sigma + 1/2 - epsilon");
  series->add_option("--n-max", es_n_max, "Last n");
  std::vector<std::string> svi_s{"1.5", "2", "3"};
  double svi_n_max = 1000;
  auto* svi = scan->add_subcommand("sum-vs-integral",
                                   "Sum of li^{-1}(n)^{-s} against the integral; tail column holds the bound");
  svi->add_option("--s", svi_s, "Points s with Re(s) > 1");
  svi->add_option("--n-max", svi_n_max, "Last n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  RunConfig cfg;
  std::ostringstream buffer;
  std::ostream& sink = output.empty() ? out : static_cast<std::ostream&>(buffer);
  try {
    cfg.sieve_limit = to_count(sieve_limit, "--sieve-limit", 2);
    cfg.prime_limit = prime_limit == 0 ? 0 : to_count(prime_limit, "--prime-limit");
    cfg.k_max = to_count(k_max, "--k-max");
    cfg.tail_tol = tail_tol;
    cfg.threads = threads;
    cfg.format = format == "csv" ? Format::Csv : format == "plain" ? Format::Plain : Format::Auto;
    if (!output.empty()) cfg.output_path = output;
    if (cfg.sieve_limit > kDefaultSieveCapacity) {
      throw CapacityError("--sieve-limit above the supported maximum 1e9");
    }

    int code = kExitOk;
    if (li_cmd->parsed()) {
      const double x = parse_double(li_x, "x");
      const double v = li(x);
      emit_value(sink, cfg.format, "li", li_x, fmt15(v), csv::format_real(v));
    } else if (li_inv_cmd->parsed()) {
      const double y = parse_double(li_inv_y, "y");
      const double v = li_inverse(y);
      emit_value(sink, cfg.format, "li_inv", li_inv_y, fmt15(v), csv::format_real(v));
    } else if (pi_cmd->parsed()) {
      const double x = parse_double(pi_x, "x");
      if (!(x >= 0.0)) throw DomainError("pi requires x >= 0");
      const auto table = obtain_table(cfg.sieve_limit, err);
      const auto v = std::to_string(pi(x, table));
      emit_value(sink, cfg.format, "pi", pi_x, v, v);
    } else if (nth_cmd->parsed()) {
      const auto n = to_count(parse_double(nth_n, "n"), "n");
      if (!approx.empty()) {
        const double v = nth_prime_approx(
            n, approx == "newton" ? NthPrimeMethod::Newton : NthPrimeMethod::TaylorChain);
        emit_value(sink, cfg.format, "li_inv", nth_n, fmt15(v), csv::format_real(v));
      } else {
        const auto table = obtain_table(cfg.sieve_limit, err);
        const auto v = std::to_string(nth_prime(n, table));
        emit_value(sink, cfg.format, "p_n", nth_n, v, v);
      }
    } else if (verify->parsed()) {
      code = cmd_verify(vargs, cfg, sink, err);
    } else if (error_table->parsed()) {
      code = cmd_error_table(et_n_max, cfg, sink, err);
    } else if (fit->parsed()) {
      code = cmd_exponent_fit(fit_range, cfg, sink, err);
    } else if (series->parsed()) {
      code = cmd_error_series(es_sigma, es_eps, es_n_max, cfg, sink, err);
    } else if (svi->parsed()) {
      code = cmd_sum_vs_integral(svi_s, svi_n_max, cfg, sink, err);
    }

    if (cfg.output_path) {
      std::ofstream file(*cfg.output_path, std::ios::binary | std::ios::trunc);
      if (!file) throw Error("cannot open " + *cfg.output_path + " for writing");
      file << buffer.str();
      if (!file) throw Error("write failed for " + *cfg.output_path);
    }
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n'
        << "hint: raise --sieve-limit (currently " << cfg.sieve_limit
        << ", at most 1e9) or lower the requested size\n";
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace liprime::cli
