// sg3: analyze, verify and bulk-scan three-generated numerical semigroups.
//
// Exit codes: 0 clean, 1 findings, 2 invalid input or refused configuration,
// 3 numerator shape error, 64 usage error, 74 I/O error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>

#include "sg3/report.hpp"
#include "sg3/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitShape = 3;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(const sg3::Error& e) {
  return e.kind() == sg3::ErrorKind::kNumeratorShape ? kExitShape
                                                     : kExitInvalid;
}

struct TripleArgs {
  std::int64_t d1 = 0, d2 = 0, d3 = 0;
  int r_max = sg3::kDefaultRMax;
};

void add_triple(CLI::App& cmd, TripleArgs& args) {
  cmd.add_option("d1", args.d1, "smallest generator")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd.add_option("d2", args.d2, "middle generator")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd.add_option("d3", args.d3, "largest generator")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--r-max", args.r_max, "highest syzygy order used")
      ->check(CLI::Range(3, sg3::kMaxRMax));
}

// Writes to --out when given, otherwise to stdout.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing " + path);
}

sg3::Json failing_entries(const sg3::BoundReport& report) {
  sg3::Json out = sg3::Json::array();
  for (const auto& e : report.entries()) {
    if (e.is_finding()) out.push_back(sg3::bound_entry_json(e));
  }
  return out;
}

bool has_violation(const sg3::BoundReport& report) {
  for (const auto& e : report.entries()) {
    if (e.is_violation()) return true;
  }
  return false;
}

int cmd_analyze(const TripleArgs& args, const std::string& format,
                std::int64_t sieve_cap) {
  const auto triple = sg3::validate_triple(args.d1, args.d2, args.d3);
  const auto analysis = sg3::analyze(triple, {args.r_max, sieve_cap});
  if (format == "json") {
    sg3::Json config{{"triple", {args.d1, args.d2, args.d3}},
                     {"r_max", args.r_max}};
    std::cout << sg3::envelope("analyze", std::move(config),
                               sg3::Json::array({sg3::analysis_json(analysis)}),
                               failing_entries(analysis.report), std::nullopt)
                     .dump(2)
              << '\n';
  } else if (format == "csv") {
    const int h_count = args.r_max - 2;
    std::cout << sg3::csv_header(h_count) << '\n'
              << sg3::csv_row(sg3::make_record(triple, analysis), h_count)
              << '\n';
  } else {
    std::cout << sg3::analysis_text(analysis);
  }
  return has_violation(analysis.report) ? kExitFindings : kExitOk;
}

// Checks that reduce to exact equalities; windows and inequalities are
// left to analyze.
bool is_identity_check(std::string_view id) {
  static const std::unordered_set<std::string_view> kIds = {
      "h1_identity",   "h2_identity",     "h3_quartic",
      "h3_relation",   "delta1_factorization", "delta2_relation",
      "k_agree_r0",    "k_agree_r1",      "k_agree_r2",
      "k_positive",    "numerator_at_one", "g3_relation",
      "power_sum_y2",  "power_sum_y3",    "sym_u",
      "sym_h0",        "sym_h1",          "sym_h2",
      "sym_h3",        "sym_h4",          "sym_h5",
      "sym_h6"};
  return kIds.contains(id) || id.starts_with("identity_r");
}

int cmd_verify(const TripleArgs& args, std::int64_t sieve_cap) {
  const auto triple = sg3::validate_triple(args.d1, args.d2, args.d3);
  const auto analysis = sg3::analyze(triple, {args.r_max, sieve_cap});
  bool ok = true;
  int checked = 0;
  for (const auto& iv : analysis.identities) {
    ++checked;
    if (!iv.ok()) {
      ok = false;
      std::cout << "FAIL identity r=" << iv.r
                << " residuals=" << sg3::fraction_string(iv.first_residual)
                << "," << sg3::fraction_string(iv.second_residual) << ","
                << sg3::fraction_string(iv.order_residual) << '\n';
    }
  }
  for (const auto& e : analysis.report.entries()) {
    if (!is_identity_check(e.id)) continue;
    ++checked;
    if (!e.pass) {
      ok = false;
      std::cout << "FAIL " << e.id;
      if (e.margin) std::cout << " residual=" << sg3::fraction_string(*e.margin);
      std::cout << '\n';
    }
  }
  std::cout << (ok ? "PASS " : "FAIL ") << triple.to_string() << ": "
            << checked << " exact checks, r_max=" << args.r_max
            << (analysis.profile.is_symmetric
                    ? ", symmetric closed forms included"
                    : "")
            << '\n';
  return ok ? kExitOk : kExitFindings;
}

struct ScanArgs {
  std::string d1_range = "3..3";
  std::int64_t d2_max = 10;
  std::int64_t product_max = 0;
  std::string d3_rule = "max-allowed";
  bool no_symmetric = false;
  std::string predicate = "all";
  int jobs = 1;
  int r_max = sg3::kDefaultRMax;
  std::string out;
  std::string format = "csv";
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoll(text);
      return {v, v};
    }
    std::size_t used = 0;
    const auto lo = std::stoll(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const auto hi = std::stoll(text.substr(dots + 2), &used);
    if (used != text.size() - dots - 2) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--d1", "expected A..B, got '" + text + "'");
  }
}

int cmd_scan(const ScanArgs& args, std::int64_t sieve_cap) {
  sg3::ScanConfig config;
  std::tie(config.d1_lo, config.d1_hi) = parse_range(args.d1_range);
  config.d2_max = args.d2_max;
  config.product_max = args.product_max;
  config.d3_rule = args.d3_rule == "strict" ? sg3::D3Rule::kStrict
                                            : sg3::D3Rule::kMaxAllowed;
  config.include_symmetric = !args.no_symmetric;
  config.predicate = *sg3::parse_predicate(args.predicate);
  config.jobs = args.jobs;
  config.r_max = args.r_max;
  config.sieve_cap = sieve_cap;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("scan", e.what());
  }

  const auto start = std::chrono::steady_clock::now();
  const auto result = sg3::run_scan(config);
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();

  const int h_count = config.r_max - 2;
  std::ostringstream body;
  if (args.format == "json") {
    sg3::Json records = sg3::Json::array();
    for (const auto& rec : result.records) {
      records.push_back(sg3::record_json(rec));
    }
    body << sg3::envelope("scan", sg3::scan_config_json(config),
                          std::move(records), sg3::summary_json(result.summary),
                          std::nullopt)
                .dump(2)
         << '\n';
  } else {
    body << sg3::csv_header(h_count) << '\n';
    for (const auto& rec : result.records) {
      body << sg3::csv_row(rec, h_count) << '\n';
    }
  }
  emit(args.out, body.str());

  const auto& s = result.summary;
  std::ostream& log = args.out.empty() ? std::cerr : std::cout;
  log << "scan: triples=" << s.triples << " emitted=" << s.emitted
      << " symmetric=" << s.symmetric << " errors=" << s.errors
      << " with_findings=" << s.records_with_findings
      << " violations=" << s.violations
      << " rho_exceptions=" << s.rho_exceptions << " elapsed_ms="
      << static_cast<std::int64_t>(elapsed_ms) << '\n';
  return s.clean() ? kExitOk : kExitFindings;
}

int cmd_table1(const std::string& format) {
  const auto report = sg3::table1_reproduce();
  if (format == "json") {
    std::cout << sg3::table1_json(report).dump(2) << '\n';
  } else {
    std::cout << sg3::table1_text(report);
  }
  return report.ok() ? kExitOk : kExitFindings;
}

int cmd_figure(int which, const std::string& out_path, std::int64_t sieve_cap) {
  std::ostringstream body;
  bool ok = true;
  if (which == 1) {
    const auto data = sg3::figure1_data(sg3::figure1_semigroups(),
                                        {sg3::kDefaultRMax, sieve_cap});
    for (const auto& p : data.points) ok = ok && p.above_phi;
    sg3::write_figure1_csv(body, data);
  } else {
    sg3::ScanConfig config;
    config.d1_lo = 4;
    config.d1_hi = 8;
    config.d2_max = 40;
    config.sieve_cap = sieve_cap;
    sg3::write_figure2_csv(body, sg3::figure2_data(config, 20));
  }
  emit(out_path, body.str());
  return ok ? kExitOk : kExitFindings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of three-generated numerical semigroups", "sg3"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sg3::kToolVersion));

  std::int64_t sieve_cap = sg3::kDefaultSieveCap;
  app.add_option("--sieve-cap", sieve_cap,
                 "largest membership table allowed (entries)")
      ->envname("SG3_SIEVE_CAP")
      ->check(CLI::PositiveNumber);

  TripleArgs analyze_args;
  std::string analyze_format = "text";
  auto* analyze = app.add_subcommand("analyze", "full report for one triple");
  add_triple(*analyze, analyze_args);
  analyze->add_option("--format", analyze_format)
      ->check(CLI::IsMember({"json", "csv", "text"}));

  TripleArgs verify_args;
  auto* verify = app.add_subcommand("verify", "exact identity checks");
  add_triple(*verify, verify_args);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "bulk scan over a triple range");
  scan->add_option("--d1", scan_args.d1_range, "range A..B")->required();
  scan->add_option("--d2-max", scan_args.d2_max)
      ->required()
      ->check(CLI::PositiveNumber);
  scan->add_option("--product-max", scan_args.product_max,
                   "also require d1*d2 <= P (0: no limit)")
      ->check(CLI::NonNegativeNumber);
  scan->add_option("--d3-rule", scan_args.d3_rule)
      ->check(CLI::IsMember({"max-allowed", "strict"}));
  scan->add_flag("--no-symmetric", scan_args.no_symmetric);
  scan->add_option("--predicate", scan_args.predicate)
      ->check(CLI::IsMember({"all", "rho-exception", "wilf", "bounds"}));
  scan->add_option("--jobs", scan_args.jobs)->check(CLI::Range(1, 1024));
  scan->add_option("--r-max", scan_args.r_max)
      ->check(CLI::Range(3, sg3::kMaxRMax));
  scan->add_option("--out", scan_args.out, "output file (default stdout)");
  scan->add_option("--format", scan_args.format)
      ->check(CLI::IsMember({"csv", "json"}));

  std::string table1_format = "text";
  auto* table1 = app.add_subcommand("table1", "reproduce Table 1");
  table1->add_option("--format", table1_format)
      ->check(CLI::IsMember({"json", "text"}));

  int which = 1;
  std::string figure_out;
  auto* figure = app.add_subcommand("figure", "emit figure data as CSV");
  figure->add_option("--which", which)->required()->check(
      CLI::IsMember({1, 2}));
  figure->add_option("--out", figure_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (*analyze) return cmd_analyze(analyze_args, analyze_format, sieve_cap);
    if (*verify) return cmd_verify(verify_args, sieve_cap);
    if (*scan) return cmd_scan(scan_args, sieve_cap);
    if (*table1) return cmd_table1(table1_format);
    if (*figure) return cmd_figure(which, figure_out, sieve_cap);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const sg3::Error& e) {
    std::cerr << "sg3: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const IoError& e) {
    std::cerr << "sg3: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
