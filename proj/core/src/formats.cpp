#include "nekrasov/formats.hpp"

#include <json.hpp>

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nekrasov::formats {

using nlohmann::json;

void write_qpoly_dump(std::ostream& out, const QPolynomial& q) {
  for (std::size_t k = 0; k < q.coeffs.size(); ++k) {
    out << q.n << ' ' << k << ' ' << to_string(q.coeffs[k]) << '\n';
  }
}

std::vector<QPolynomial> read_qpoly_dump(std::istream& in) {
  std::vector<QPolynomial> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::uint32_t n = 0;
    std::size_t k = 0;
    std::string value;
    std::string extra;
    if (!(fields >> n >> k >> value) || (fields >> extra)) {
      throw std::invalid_argument("malformed qpoly dump line: '" + line + "'");
    }
    if (out.empty() || out.back().n != n || out.back().coeffs.size() == out.back().n + 1u) {
      out.push_back({n, {}});
    }
    if (k != out.back().coeffs.size()) {
      throw std::invalid_argument("qpoly dump coefficients out of order: '" + line + "'");
    }
    out.back().coeffs.push_back(parse_rational(value));
  }
  return out;
}

std::string qpoly_json(const QPolynomial& q) {
  json coeffs = json::array();
  for (const auto& c : q.coeffs) coeffs.push_back(to_string(c));
  json j;
  j["n"] = q.n;
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

QPolynomial parse_qpoly_json(std::string_view text) {
  QPolynomial q;
  try {
    const auto j = json::parse(text);
    q.n = j.at("n").get<std::uint32_t>();
    for (const auto& c : j.at("coeffs")) q.coeffs.push_back(parse_rational(c.get<std::string>()));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed qpoly json: ") + e.what());
  }
  if (q.coeffs.size() != q.n + 1u) throw std::invalid_argument("qpoly json needs n + 1 coefficients");
  return q;
}

void write_qpoly_csv_header(std::ostream& out) { out << "method,n,k,coeff\n"; }

void write_qpoly_csv_rows(std::ostream& out, std::string_view method, const QPolynomial& q) {
  for (std::size_t k = 0; k < q.coeffs.size(); ++k) {
    out << method << ',' << q.n << ',' << k << ',' << to_string(q.coeffs[k]) << '\n';
  }
}

void write_series_dump(std::ostream& out, const RationalSeries& s) {
  for (std::size_t n = 0; n <= s.order(); ++n) out << n << '\t' << to_string(s[n]) << '\n';
}

RationalSeries read_series_dump(std::istream& in) {
  std::vector<Rational> coeffs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw std::invalid_argument("series dump line lacks a tab");
    if (std::stoul(line.substr(0, tab)) != coeffs.size()) {
      throw std::invalid_argument("series dump indices out of order");
    }
    coeffs.push_back(parse_rational(line.substr(tab + 1)));
  }
  return RationalSeries(std::move(coeffs));
}

void write_stirling_dump(std::ostream& out, const StirlingTable& table) {
  for (std::uint32_t n = 0; n <= table.n_max(); ++n) {
    for (std::uint32_t m = 0; m <= n; ++m) out << n << ' ' << m << ' ' << table(n, m) << '\n';
  }
}

void write_scan_csv_header(std::ostream& out) { out << kScanCsvHeader << '\n'; }

void write_scan_csv_row(std::ostream& out, const ScanReport& r) {
  out << r.k << ',';
  if (r.n0) out << *r.n0;
  out << ',' << to_string(r.certification) << ',' << r.elapsed.count() << ',' << r.n_max << '\n';
}

std::string scan_json(std::span<const ScanReport> reports) {
  json rows = json::array();
  for (const auto& r : reports) {
    json row;
    row["k"] = r.k;
    row["n0"] = r.n0 ? json(*r.n0) : json(nullptr);
    row["mode"] = std::string(to_string(r.certification));
    row["elapsed_ms"] = r.elapsed.count();
    row["n_max"] = r.n_max;
    row["triples_checked"] = r.violations_checked;
    row["max_precision_bits"] = r.max_precision_used;
    row["uncertified_at"] = r.uncertified_at ? json(*r.uncertified_at) : json(nullptr);
    rows.push_back(std::move(row));
  }
  return json{{"scans", std::move(rows)}}.dump();
}

void write_ratio_csv_header(std::ostream& out) { out << kRatioCsvHeader << '\n'; }

void write_ratio_csv_row(std::ostream& out, const RatioReport& r) {
  out << r.k << ',' << r.n << ',' << decimal17(r.ratio.lo) << ',' << decimal17(r.ratio.hi) << ','
      << decimal17(r.envelope) << '\n';
}

std::string decimal17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace nekrasov::formats
