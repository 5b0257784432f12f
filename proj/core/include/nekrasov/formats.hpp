#ifndef NEKRASOV_FORMATS_HPP
#define NEKRASOV_FORMATS_HPP

#include "nekrasov/analysis.hpp"
#include "nekrasov/darcais.hpp"
#include "nekrasov/series.hpp"
#include "nekrasov/stirling.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nekrasov::formats {

// QPolynomial: one "n k p/q" line per coefficient.
void write_qpoly_dump(std::ostream& out, const QPolynomial& q);
/// Reads back consecutive dump lines; throws std::invalid_argument on malformed input.
std::vector<QPolynomial> read_qpoly_dump(std::istream& in);

/// {"n": n, "coeffs": ["p/q", ...]} with no whitespace.
std::string qpoly_json(const QPolynomial& q);
QPolynomial parse_qpoly_json(std::string_view text);

/// "method,n,k,coeff" header then one row per coefficient.
void write_qpoly_csv_header(std::ostream& out);
void write_qpoly_csv_rows(std::ostream& out, std::string_view method, const QPolynomial& q);

/// Series dump: "n<TAB>p/q" per coefficient.
void write_series_dump(std::ostream& out, const RationalSeries& s);
RationalSeries read_series_dump(std::istream& in);

/// Stirling rows: "n m value" per entry, rows 0..table.n_max().
void write_stirling_dump(std::ostream& out, const StirlingTable& table);

// ScanReport CSV: header exactly "k,n0,mode,elapsed_ms,n_max"; n0 is empty
// when absent and mode is the certification ("uncertified" if it failed).
inline constexpr std::string_view kScanCsvHeader = "k,n0,mode,elapsed_ms,n_max";
void write_scan_csv_header(std::ostream& out);
void write_scan_csv_row(std::ostream& out, const ScanReport& r);
std::string scan_json(std::span<const ScanReport> reports);

// Ratio reports: "k,n,ratio_lo,ratio_hi,envelope", 17 significant digits.
inline constexpr std::string_view kRatioCsvHeader = "k,n,ratio_lo,ratio_hi,envelope";
void write_ratio_csv_header(std::ostream& out);
void write_ratio_csv_row(std::ostream& out, const RatioReport& r);

/// "%.17g".
std::string decimal17(double value);

}  // namespace nekrasov::formats

#endif  // NEKRASOV_FORMATS_HPP
