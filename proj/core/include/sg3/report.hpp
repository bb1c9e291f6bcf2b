#ifndef SG3_REPORT_HPP_
#define SG3_REPORT_HPP_

// JSON, CSV and text renderings of analyses, scan records and the Table 1 /
// figure datasets. Exact rationals travel as "num/den" strings next to their
// 5-decimal display value.

#include <nlohmann/json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "sg3/scan.hpp"

namespace sg3 {

inline constexpr std::string_view kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// {"exact": "n/d", "decimal": "x.xxxxx"}
Json rational_json(const Rational& q);
Json bound_entry_json(const BoundEntry& entry);
Json analysis_json(const Analysis& analysis);
Json record_json(const ScanRecord& record);
Json summary_json(const ScanSummary& summary);
Json table1_json(const Table1Report& report);
Json scan_config_json(const ScanConfig& config);  // omits jobs

// Envelope shared by every command. `timing_ms` is null when absent so file
// outputs stay byte-stable.
Json envelope(std::string_view command, Json config, Json records,
              Json findings, std::optional<double> timing_ms);

// Fixed column order: d1,d2,d3,F3,c3,G0,tau,symmetric,g3,x1,x2,x3,y1,y2,
// u,u_dec,v,v_dec,h0,h0_dec..h{n-1},h{n-1}_dec,w3,w3_dec,e3,e3_dec,rho3,
// rho3_squared,rho_exception,wilf_route,failed,error
std::string csv_header(int h_count);
std::string csv_row(const ScanRecord& record, int h_count);

std::string analysis_text(const Analysis& analysis);
std::string table1_text(const Table1Report& report);

// Columns: u,v,h0,phi,label
void write_figure1_csv(std::ostream& out, const Figure1Data& data);
// Columns: d1,C_d1,lower_product,d2d3,rho_class,e3_class,label
void write_figure2_csv(std::ostream& out, const Figure2Data& data);

}  // namespace sg3

#endif  // SG3_REPORT_HPP_
