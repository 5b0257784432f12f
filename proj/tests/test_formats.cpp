#include "nekrasov/darcais.hpp"
#include "nekrasov/formats.hpp"
#include "nekrasov/series.hpp"
#include "nekrasov/stirling.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace nekrasov;

TEST(Rational, StringForms) {
  EXPECT_EQ(to_string(Rational(29, 6)), "29/6");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
  EXPECT_EQ(parse_rational("10/4"), Rational(5, 2));
  EXPECT_EQ(parse_rational("-7"), -7);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(factorial(0), 1);
}

TEST(Formats, QpolyDumpRoundTrip) {
  std::vector<QPolynomial> qs;
  for (std::uint32_t n = 0; n <= 6; ++n) qs.push_back(q_via_recursion(n));
  std::stringstream ss;
  for (const auto& q : qs) formats::write_qpoly_dump(ss, q);
  EXPECT_EQ(formats::read_qpoly_dump(ss), qs);

  std::ostringstream three;
  formats::write_qpoly_dump(three, q_via_recursion(3));
  EXPECT_EQ(three.str(), "3 0 3\n3 1 29/6\n3 2 2\n3 3 1/6\n");
}

TEST(Formats, QpolyJson) {
  const auto q = q_via_recursion(3);
  const auto text = formats::qpoly_json(q);
  EXPECT_EQ(text, R"({"coeffs":["3","29/6","2","1/6"],"n":3})");
  EXPECT_EQ(formats::parse_qpoly_json(text), q);
  EXPECT_THROW(formats::parse_qpoly_json(R"({"n":2,"coeffs":["1"]})"), std::invalid_argument);
}

TEST(Formats, QpolyCsv) {
  std::ostringstream out;
  formats::write_qpoly_csv_header(out);
  formats::write_qpoly_csv_rows(out, "hooks", q_via_recursion(1));
  EXPECT_EQ(out.str(), "method,n,k,coeff\nhooks,1,0,1\nhooks,1,1,1\n");
}

TEST(Formats, SeriesDumpRoundTrip) {
  const auto f = f_series(12);
  std::stringstream ss;
  formats::write_series_dump(ss, f);
  EXPECT_EQ(formats::read_series_dump(ss), f);
}

TEST(Formats, StirlingDump) {
  std::ostringstream out;
  formats::write_stirling_dump(out, StirlingTable(2));
  EXPECT_EQ(out.str(), "0 0 1\n1 0 0\n1 1 1\n2 0 0\n2 1 1\n2 2 1\n");
}

TEST(Formats, ScanCsv) {
  std::ostringstream out;
  formats::write_scan_csv_header(out);
  ScanReport a;
  a.k = 2;
  a.n_max = 16;
  a.n0 = 6;
  a.certification = Certification::exact;
  a.elapsed = std::chrono::milliseconds(3);
  ScanReport b = a;
  b.n0.reset();
  b.n_max = 5;
  ScanReport c = a;
  c.n0.reset();
  c.certification = Certification::uncertified;
  formats::write_scan_csv_row(out, a);
  formats::write_scan_csv_row(out, b);
  formats::write_scan_csv_row(out, c);
  EXPECT_EQ(out.str(), "k,n0,mode,elapsed_ms,n_max\n2,6,exact,3,16\n2,,exact,3,5\n2,,uncertified,3,16\n");
}

TEST(Formats, RatioCsv) {
  std::ostringstream out;
  formats::write_ratio_csv_header(out);
  RatioReport r;
  r.k = 1;
  r.n = 100;
  r.ratio = {0.1, 1.0};
  r.envelope = 1.0 / 3.0;
  formats::write_ratio_csv_row(out, r);
  EXPECT_EQ(out.str(), "k,n,ratio_lo,ratio_hi,envelope\n1,100,0.10000000000000001,1,0.33333333333333331\n");
}
