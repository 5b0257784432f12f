#include "nekrasov_cli/cli.hpp"

#include "nekrasov/analysis.hpp"
#include "nekrasov/darcais.hpp"
#include "nekrasov/formats.hpp"
#include "nekrasov/series.hpp"
#include "nekrasov/stirling.hpp"
#include "nekrasov_cli/ranges.hpp"
#include "nekrasov_cli/verify_suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <set>

namespace nekrasov::cli {

namespace {

using nlohmann::json;

struct SharedOptions {
  std::string format;
  std::string out_path;
};

// Where data goes: --out PATH or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<std::uint32_t> to_u32(const std::vector<std::uint64_t>& values, std::uint64_t max,
                                  const char* what) {
  std::vector<std::uint32_t> out;
  for (auto v : values) {
    if (v > max) throw std::invalid_argument(std::string(what) + " value " + std::to_string(v) + " is too large");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

// ------------------------------------------------------------------ qpoly

struct QpolyOptions {
  std::string n;
  std::string method = "recursion";
};

int cmd_qpoly(const QpolyOptions& opt, const SharedOptions& shared, std::ostream& out,
              std::ostream& err) {
  const auto ns = to_u32(parse_index_list(opt.n), 100000, "--n");
  std::vector<QMethod> methods;
  if (opt.method == "all") {
    methods = {QMethod::recursion, QMethod::hooks, QMethod::trivial_hooks, QMethod::multiplicities};
  } else {
    methods = {parse_q_method(opt.method)};
  }
  const auto budget = EnumerationBudget::from_environment();

  std::vector<std::vector<QPolynomial>> results;
  for (auto m : methods) {
    std::vector<QPolynomial> polys;
    if (m == QMethod::recursion) {
      // One table serves every requested n.
      const DarcaisTable table(*std::max_element(ns.begin(), ns.end()));
      for (auto n : ns) polys.push_back(table.row(n));
    } else {
      for (auto n : ns) polys.push_back(compute_q(m, n, budget));
    }
    results.push_back(std::move(polys));
  }
  const bool all = methods.size() > 1;
  const bool agree = std::all_of(results.begin(), results.end(),
                                 [&](const auto& r) { return r == results.front(); });

  Sink sink(shared.out_path, out);
  if (shared.format == "json") {
    json doc;
    doc["results"] = json::array();
    for (std::size_t i = 0; i < methods.size(); ++i) {
      json polys = json::array();
      for (const auto& q : results[i]) polys.push_back(json::parse(formats::qpoly_json(q)));
      doc["results"].push_back({{"method", std::string(to_string(methods[i]))}, {"polynomials", polys}});
    }
    if (all) doc["verdict"] = agree ? "agree" : "disagree";
    *sink << doc.dump() << '\n';
  } else if (shared.format == "csv") {
    formats::write_qpoly_csv_header(*sink);
    for (std::size_t i = 0; i < methods.size(); ++i) {
      for (const auto& q : results[i]) formats::write_qpoly_csv_rows(*sink, to_string(methods[i]), q);
    }
    if (all) err << "verdict: " << (agree ? "agree" : "disagree") << '\n';
  } else {
    for (std::size_t i = 0; i < methods.size(); ++i) {
      if (all) *sink << "# method " << to_string(methods[i]) << '\n';
      for (const auto& q : results[i]) formats::write_qpoly_dump(*sink, q);
    }
    if (all) *sink << "# verdict " << (agree ? "agree" : "disagree") << '\n';
  }
  return agree ? kOk : kViolation;
}

// ------------------------------------------------------------------- scan

struct ScanCliOptions {
  std::string k;
  std::size_t n_max = 0;
  std::string mode = "adaptive-float";
  unsigned precision_cap = 848;
  std::size_t exact_fallback = 2048;
  unsigned jobs = 1;
  std::string series = "sigma-minus-one";
};

int cmd_scan(const ScanCliOptions& opt, const SharedOptions& shared, std::ostream& out,
             std::ostream& err) {
  const auto ks_raw = parse_index_list(opt.k);
  const std::set<std::uint64_t> ks(ks_raw.begin(), ks_raw.end());
  const std::uint64_t k_min = opt.series == "sigma-minus-one" ? 2 : 1;
  std::vector<ScanJob> jobs;
  for (auto k : ks) {
    if (k < k_min || k > 24) {
      throw std::invalid_argument("--k values must lie in [" + std::to_string(k_min) + ", 24]");
    }
    jobs.push_back({opt.series, static_cast<std::uint32_t>(k), opt.n_max});
  }
  ScanOptions options;
  options.mode = parse_scan_mode(opt.mode);
  options.precision_cap = opt.precision_cap;
  options.exact_fallback = opt.exact_fallback;

  const auto reports = run_scans(jobs, options, opt.jobs);
  bool uncertified = false;
  for (const auto& r : reports) {
    err << "scan k=" << r.k << " n_max=" << r.n_max << " n0=" << (r.n0 ? std::to_string(*r.n0) : "none")
        << " certification=" << to_string(r.certification) << " triples=" << r.violations_checked
        << " (" << r.elapsed.count() << " ms)\n";
    uncertified = uncertified || r.certification == Certification::uncertified;
  }

  Sink sink(shared.out_path, out);
  if (shared.format == "json") {
    *sink << formats::scan_json(reports) << '\n';
  } else {
    formats::write_scan_csv_header(*sink);
    for (const auto& r : reports) formats::write_scan_csv_row(*sink, r);
  }
  return uncertified ? kUncertified : kOk;
}

// ----------------------------------------------------------------- verify

struct VerifyOptions {
  std::string suite = "all";
  std::optional<std::uint32_t> n_max;
};

int cmd_verify(const VerifyOptions& opt, const SharedOptions& shared, std::ostream& out,
               std::ostream& err) {
  std::vector<CheckResult> results;
  auto add = [&](std::vector<CheckResult> r) {
    results.insert(results.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  };
  if (opt.suite == "identities" || opt.suite == "all") {
    add(run_identity_suite(opt.n_max.value_or(kDefaultIdentityNMax)));
  }
  if (opt.suite == "logconcave" || opt.suite == "all") {
    add(run_logconcave_suite(opt.n_max.value_or(kDefaultLogconcaveNMax)));
  }
  if (opt.suite == "stirling" || opt.suite == "all") {
    add(run_stirling_suite(opt.n_max.value_or(kDefaultStirlingNMax)));
  }
  const bool passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  for (const auto& r : results) {
    if (!r.passed) err << "FAILED " << r.suite << '/' << r.name << ": " << r.detail << '\n';
  }

  Sink sink(shared.out_path, out);
  if (shared.format == "json") {
    json checks = json::array();
    for (const auto& r : results) {
      checks.push_back({{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    *sink << json{{"checks", checks}, {"passed", passed}}.dump() << '\n';
  } else {
    const char sep = shared.format == "tsv" ? '\t' : ',';
    *sink << "suite" << sep << "check" << sep << "status" << sep << "detail\n";
    for (const auto& r : results) {
      *sink << r.suite << sep << r.name << sep << (r.passed ? "pass" : "fail") << sep
            << (sep == ',' ? csv_field(r.detail) : r.detail) << '\n';
    }
  }
  return passed ? kOk : kViolation;
}

// ------------------------------------------------------------ series-dump

struct SeriesDumpOptions {
  std::string series = "sigma-minus-one";
  std::uint32_t n = 10;
  std::uint32_t power = 1;
};

int cmd_series_dump(const SeriesDumpOptions& opt, const SharedOptions& shared, std::ostream& out) {
  RationalSeries s = opt.series == "partition" ? partition_series(opt.n) : custom_series(opt.series, opt.n);
  if (opt.power != 1) s = series_power(s, opt.power);
  Sink sink(shared.out_path, out);
  if (shared.format == "json") {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
    *sink << json{{"series", opt.series}, {"power", opt.power}, {"order", opt.n}, {"coeffs", coeffs}}.dump()
          << '\n';
  } else if (shared.format == "csv") {
    *sink << "n,coeff\n";
    for (std::size_t i = 0; i <= s.order(); ++i) *sink << i << ',' << to_string(s[i]) << '\n';
  } else {
    formats::write_series_dump(*sink, s);
  }
  return kOk;
}

// ---------------------------------------------------------- stirling-dump

int cmd_stirling_dump(std::uint32_t n, const SharedOptions& shared, std::ostream& out) {
  const StirlingTable table(n);
  Sink sink(shared.out_path, out);
  if (shared.format == "json") {
    json rows = json::array();
    for (std::uint32_t i = 0; i <= n; ++i) {
      json row = json::array();
      for (const auto& v : table.row(i)) row.push_back(v.get_str());
      rows.push_back(std::move(row));
    }
    *sink << json{{"n_max", n}, {"rows", rows}}.dump() << '\n';
  } else if (shared.format == "csv") {
    *sink << "n,m,value\n";
    for (std::uint32_t i = 0; i <= n; ++i) {
      for (std::uint32_t m = 0; m <= i; ++m) *sink << i << ',' << m << ',' << table(i, m) << '\n';
    }
  } else {
    formats::write_stirling_dump(*sink, table);
  }
  return kOk;
}

// ------------------------------------------------------------------ ratio

struct RatioOptions {
  std::string kind = "power-sum";
  std::string k = "1";
  std::string n;
};

int cmd_ratio(const RatioOptions& opt, const SharedOptions& shared, std::ostream& out) {
  const auto ns = parse_index_list(opt.n);
  std::vector<RatioReport> reports;
  if (opt.kind == "power-sum") {
    for (auto k : to_u32(parse_index_list(opt.k), 64, "--k")) {
      for (auto n : ns) reports.push_back(power_sum_ratio(k, n));
    }
  } else {
    for (auto n : to_u32(ns, UINT32_MAX, "--n")) reports.push_back(hardy_ramanujan_ratio(n));
  }
  Sink sink(shared.out_path, out);
  if (shared.format == "json") {
    json rows = json::array();
    for (const auto& r : reports) {
      rows.push_back({{"k", r.k}, {"n", r.n}, {"ratio_lo", formats::decimal17(r.ratio.lo)},
                      {"ratio_hi", formats::decimal17(r.ratio.hi)},
                      {"envelope", formats::decimal17(r.envelope)}});
    }
    *sink << json{{"kind", opt.kind}, {"ratios", rows}}.dump() << '\n';
  } else {
    formats::write_ratio_csv_header(*sink);
    for (const auto& r : reports) formats::write_ratio_csv_row(*sink, r);
  }
  return kOk;
}

// --------------------------------------------------------------- row-report

int cmd_row_report(const std::string& n_text, const SharedOptions& shared, std::ostream& out) {
  const auto ns = to_u32(parse_index_list(n_text), 5000, "--n");
  const DarcaisTable table(*std::max_element(ns.begin(), ns.end()));
  Sink sink(shared.out_path, out);
  json rows = json::array();
  if (shared.format != "json") {
    *sink << "n,first_violation,unimodal,mode,tail_start,log_concave_scale,tail_scale\n";
  }
  for (auto n : ns) {
    const auto r = row_shape_report(table.row(n));
    if (shared.format == "json") {
      rows.push_back({{"n", r.n},
                      {"first_violation", r.first_violation ? json(*r.first_violation) : json(nullptr)},
                      {"unimodal", r.unimodal}, {"mode", r.mode}, {"tail_start", r.tail_start},
                      {"log_concave_scale", formats::decimal17(r.log_concave_scale)},
                      {"tail_scale", formats::decimal17(r.tail_scale)}});
    } else {
      *sink << r.n << ',' << (r.first_violation ? std::to_string(*r.first_violation) : "") << ','
            << (r.unimodal ? "true" : "false") << ',' << r.mode << ',' << r.tail_start << ','
            << formats::decimal17(r.log_concave_scale) << ',' << formats::decimal17(r.tail_scale) << '\n';
    }
  }
  if (shared.format == "json") *sink << json{{"reports", rows}}.dump() << '\n';
  return kOk;
}

void add_shared(CLI::App* cmd, SharedOptions& shared, const std::string& default_format) {
  shared.format = default_format;
  cmd->add_option("--format", shared.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "tsv"}))
      ->capture_default_str();
  cmd->add_option("--out", shared.out_path, "Output path (default: standard output)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation of the Nekrasov-Okounkov polynomials Q_n(z) and verification "
               "of their coefficient inequalities",
               "nekrasov"};
  app.require_subcommand(1);

  SharedOptions qpoly_shared, scan_shared, verify_shared, series_shared, stirling_shared,
      ratio_shared, row_report_shared;

  QpolyOptions qpoly;
  auto* qpoly_cmd = app.add_subcommand("qpoly", "Coefficients A_{n,k} of Q_n(z)");
  qpoly_cmd->add_option("--n", qpoly.n, "n, a range a..b, or a list")->required();
  qpoly_cmd->add_option("--method", qpoly.method, "Computation method")
      ->check(CLI::IsMember({"recursion", "hooks", "trivial-hooks", "multiplicities", "all"}))
      ->capture_default_str();
  add_shared(qpoly_cmd, qpoly_shared, "tsv");

  ScanCliOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "First log-concavity violation n0(k) of c_{n,k}");
  scan_cmd->add_option("--k", scan.k, "k, a range a..b, or a list")->required();
  scan_cmd->add_option("--n-max", scan.n_max, "Scan bound (default 4*2^k)")->check(CLI::Range(3ul, 1ul << 26));
  scan_cmd->add_option("--mode", scan.mode, "Certification mode")
      ->check(CLI::IsMember({"exact", "adaptive-float"}))
      ->capture_default_str();
  scan_cmd->add_option("--precision-cap", scan.precision_cap, "Largest float precision in bits")
      ->check(CLI::Range(53u, 1u << 20))
      ->capture_default_str();
  scan_cmd->add_option("--exact-fallback", scan.exact_fallback, "Exact arithmetic allowed for n+1 <= N")
      ->capture_default_str();
  scan_cmd->add_option("--jobs", scan.jobs, "Parallel scans")->check(CLI::Range(1u, 1024u))->capture_default_str();
  scan_cmd->add_option("--series", scan.series, "Base series rule")
      ->check(CLI::IsMember(SeriesRegistry::instance().names()))
      ->capture_default_str();
  add_shared(scan_cmd, scan_shared, "csv");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", verify.suite, "Suite to run")
      ->check(CLI::IsMember({"identities", "logconcave", "stirling", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--n-max", verify.n_max, "Suite size");
  add_shared(verify_cmd, verify_shared, "csv");

  SeriesDumpOptions series;
  auto* series_cmd = app.add_subcommand("series-dump", "Dump a base series or a power of it");
  auto series_names = SeriesRegistry::instance().names();
  series_names.push_back("partition");
  series_cmd->add_option("--series", series.series, "Series")
      ->check(CLI::IsMember(series_names))
      ->capture_default_str();
  series_cmd->add_option("--n", series.n, "Truncation order")->capture_default_str();
  series_cmd->add_option("--power", series.power, "Power")->capture_default_str();
  add_shared(series_cmd, series_shared, "tsv");

  std::uint32_t stirling_n = 10;
  auto* stirling_cmd = app.add_subcommand("stirling-dump", "Dump unsigned Stirling numbers of the first kind");
  stirling_cmd->add_option("--n", stirling_n, "Last row")->capture_default_str();
  add_shared(stirling_cmd, stirling_shared, "tsv");

  RatioOptions ratio;
  auto* ratio_cmd = app.add_subcommand("ratio", "Certified asymptotic ratio reports");
  ratio_cmd->add_option("--kind", ratio.kind, "Ratio")
      ->check(CLI::IsMember({"power-sum", "hardy-ramanujan"}))
      ->capture_default_str();
  ratio_cmd->add_option("--k", ratio.k, "k values (power-sum)")->capture_default_str();
  ratio_cmd->add_option("--n", ratio.n, "n values")->required();
  add_shared(ratio_cmd, ratio_shared, "csv");

  std::string row_report_n;
  auto* row_report_cmd = app.add_subcommand("row-report", "Log-concavity, mode and tail report for Q_n rows");
  row_report_cmd->add_option("--n", row_report_n, "n values")->required();
  add_shared(row_report_cmd, row_report_shared, "csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUncertified;
  }

  try {
    if (*qpoly_cmd) return cmd_qpoly(qpoly, qpoly_shared, out, err);
    if (*scan_cmd) return cmd_scan(scan, scan_shared, out, err);
    if (*verify_cmd) return cmd_verify(verify, verify_shared, out, err);
    if (*series_cmd) return cmd_series_dump(series, series_shared, out);
    if (*stirling_cmd) return cmd_stirling_dump(stirling_n, stirling_shared, out);
    if (*ratio_cmd) return cmd_ratio(ratio, ratio_shared, out);
    if (*row_report_cmd) return cmd_row_report(row_report_n, row_report_shared, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUncertified;
  }
  return kUncertified;
}

}  // namespace nekrasov::cli
