#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "sg3/report.hpp"
#include "sg3/scan.hpp"

namespace sg3 {
namespace {

int count_columns(const std::string& line) {
  return static_cast<int>(std::count(line.begin(), line.end(), ',')) + 1;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

// Every {"exact", "decimal"} pair must agree under exact rounding.
int check_decimals(const Json& j) {
  int seen = 0;
  if (j.is_object()) {
    if (j.contains("exact") && j.contains("decimal") && j["exact"].is_string()) {
      EXPECT_EQ(j["decimal"].get<std::string>(),
                to_decimal(parse_fraction(j["exact"].get<std::string>()), 5));
      ++seen;
    }
    for (const auto& [k, v] : j.items()) seen += check_decimals(v);
  } else if (j.is_array()) {
    for (const auto& v : j) seen += check_decimals(v);
  }
  return seen;
}

TEST(Json, RoundTripIsByteIdentical) {
  const auto a = analyze(validate_triple(4, 7, 13));
  const std::string text = analysis_json(a).dump(2);
  EXPECT_EQ(Json::parse(text).dump(2), text);
}

TEST(Json, DecimalsMatchExactValues) {
  for (auto [x, y, z] : {std::array<std::int64_t, 3>{3, 4, 5},
                         std::array<std::int64_t, 3>{4, 6, 9},
                         std::array<std::int64_t, 3>{5, 8, 9}}) {
    const auto a = analyze(validate_triple(x, y, z));
    EXPECT_GT(check_decimals(analysis_json(a)), 10);
    EXPECT_GT(check_decimals(record_json(make_record(a.profile.triple, a))), 5);
  }
}

TEST(Csv, ColumnCounts) {
  const auto a = analyze(validate_triple(3, 4, 5));
  const int h = 7;
  const std::string header = csv_header(h);
  EXPECT_EQ(count_columns(first_line(header)), 28 + 2 * h);
  EXPECT_EQ(count_columns(first_line(csv_row(make_record(a.profile.triple, a), h))),
            28 + 2 * h);
  const Error err(ErrorKind::kResourceLimit, "too big");
  EXPECT_EQ(count_columns(first_line(
                csv_row(make_error_record(validate_triple(3, 4, 5), err), h))),
            28 + 2 * h);
  EXPECT_EQ(header.rfind("d1,d2,d3,F3,c3,G0,tau,symmetric,g3", 0), 0u);
}

TEST(Figure2, ExactThresholdRow) {
  ScanConfig config;
  config.d1_lo = 4;
  config.d1_hi = 6;
  config.d2_max = 15;
  std::ostringstream out;
  write_figure2_csv(out, figure2_data(config, 12));
  EXPECT_NE(out.str().find("\n12,36.00000,"), std::string::npos) << out.str();
}

TEST(Text, NamesTheTriple) {
  const auto text = analysis_text(analyze(validate_triple(4, 6, 9)));
  EXPECT_NE(text.find("<4,6,9>"), std::string::npos);
  EXPECT_NE(table1_text(table1_reproduce()).find("<5,8,9>"), std::string::npos);
}

}  // namespace
}  // namespace sg3
