#ifndef SG3_SCAN_HPP_
#define SG3_SCAN_HPP_

// Per-semigroup pipeline (profile -> numerator -> syzygies -> rescaled genera
// -> bound report) and the bulk drivers built on it: triple enumeration,
// deterministic parallel scans, Table 1 reproduction, the rho-exception
// search and the figure datasets.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sg3/error.hpp"
#include "sg3/exact.hpp"
#include "sg3/rescaled.hpp"
#include "sg3/semigroup.hpp"
#include "sg3/syzygy.hpp"

namespace sg3 {

inline constexpr int kMaxRMax = 64;

struct AnalyzeOptions {
  int r_max = kDefaultRMax;
  std::int64_t sieve_cap = kDefaultSieveCap;
};

struct Analysis {
  SemigroupProfile profile;
  HilbertNumerator numerator;
  SyzygyData syzygy;
  RescaledProfile rescaled;
  std::vector<IdentityVerdict> identities;  // r = 0..r_max-3
  WilfVerdict wilf;
  std::optional<RhoScreen> rho;  // d1 >= 4
  BoundReport report;            // every check, structural through Wilf

  bool rho_exception() const {
    return rho.has_value() && rho->rho_above && !profile.is_symmetric;
  }
};

// Runs every per-semigroup computation and check. Throws sg3::Error for
// ResourceLimit and NumeratorShapeError.
Analysis analyze(const GeneratorTriple& triple,
                 const AnalyzeOptions& options = {});

enum class D3Rule { kMaxAllowed, kStrict };
enum class Predicate { kAll, kRhoException, kWilf, kBounds };

std::string_view predicate_name(Predicate p);
std::optional<Predicate> parse_predicate(std::string_view text);

struct ScanConfig {
  std::int64_t d1_lo = 3;
  std::int64_t d1_hi = 3;
  std::int64_t d2_max = 10;
  std::int64_t product_max = 0;  // d1·d2 limit per stripe; 0 means none
  D3Rule d3_rule = D3Rule::kMaxAllowed;
  bool include_symmetric = true;
  int r_max = kDefaultRMax;
  Predicate predicate = Predicate::kAll;
  int jobs = 1;
  std::int64_t sieve_cap = kDefaultSieveCap;

  // Throws std::invalid_argument when d1_lo < 3 or r_max is out of [3, 64].
  void validate() const;
};

// Admissible triples for one (d1, d2) stripe, in increasing d3. Symmetric
// filtering is not applied here.
std::vector<GeneratorTriple> stripe_triples(std::int64_t d1, std::int64_t d2,
                                            D3Rule rule);

// Every triple passing validate_triple within the limits, lexicographic.
std::vector<GeneratorTriple> enumerate_triples(const ScanConfig& config);

struct ScanRecord {
  GeneratorTriple triple;
  std::optional<std::string> error;  // "Kind: message" when the pipeline threw
  std::int64_t frobenius = 0;
  std::int64_t conductor = 0;
  std::int64_t genus = 0;
  std::int64_t type = 0;
  bool symmetric = false;
  std::int64_t g3 = 0;
  std::vector<std::int64_t> x, y;
  Rational u, v;
  std::vector<Rational> h;  // h_0..h_{r_max-3}
  Rational w3, e3;
  std::string rho3;  // 5-decimal display
  Rational rho3_squared;
  bool rho_exception = false;
  WilfRoute wilf_route = WilfRoute::kDirect;
  std::vector<BoundEntry> failed;  // failing hard and soft entries

  bool has_findings() const { return error.has_value() || !failed.empty(); }
};

ScanRecord make_record(const GeneratorTriple& triple, const Analysis& analysis);
ScanRecord make_error_record(const GeneratorTriple& triple, const Error& error);

struct BoundTally {
  std::int64_t pass = 0;
  std::int64_t fail = 0;
};

struct ScanSummary {
  std::int64_t triples = 0;
  std::int64_t emitted = 0;
  std::int64_t symmetric = 0;
  std::int64_t errors = 0;
  std::int64_t records_with_findings = 0;
  std::int64_t violations = 0;  // failing hard entries
  std::int64_t rho_exceptions = 0;
  std::map<std::string, BoundTally> bounds;
  std::map<std::string, std::int64_t> wilf_routes;

  bool clean() const { return records_with_findings == 0; }
};

struct ScanResult {
  std::vector<ScanRecord> records;  // predicate-filtered, enumeration order
  ScanSummary summary;              // over every enumerated triple
};

bool matches_predicate(const ScanRecord& record, Predicate predicate);

// Work is split into (d1, d2) stripes; output order and content do not depend
// on config.jobs.
ScanResult run_scan(const ScanConfig& config);

// --- Table 1 ---------------------------------------------------------------

struct Table1Cell {
  std::string printed;
  std::string computed;   // half-away-from-zero display, same digits
  bool within = false;    // |exact - printed| <= 1e-5
  bool same_display = false;
};

struct Table1Row {
  GeneratorTriple triple;
  std::array<Table1Cell, 4> cells;  // rho3, e3, w3, h0
  bool e3_above_one = false;
  bool wilf_holds = false;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  int cells_matched = 0;
  int cells_total = 0;
  bool split_ok = false;  // 10 with e3 < 1, the 3 named with e3 > 1
  bool all_wilf = false;

  bool ok() const {
    return cells_total == 52 && cells_matched == cells_total && split_ok &&
           all_wilf;
  }
};

struct Table1Entry {
  std::int64_t d1, d2, d3;
  std::array<const char*, 4> printed;
};

const std::vector<Table1Entry>& table1_entries();
Table1Report table1_reproduce();

// --- rho exceptions --------------------------------------------------------

struct RhoException {
  GeneratorTriple triple;
  Rational e3;
  bool e3_above_one = false;
  Rational w3;
  bool wilf_holds = false;
  bool in_table1 = false;
  // d2 d3 > C(d1): the product route already settles Wilf without rho3.
  bool product_exceeds_c = false;
};

// Non-symmetric triples with 3 sigma1^2 > 4 pi3 (rho3 > 2/sqrt 3). Requires
// config.d1_lo >= 4.
std::vector<RhoException> rho_exception_scan(const ScanConfig& config);

// --- figures ---------------------------------------------------------------

struct Figure1Point {
  std::string label;
  Rational u, v, h0;
  Surd phi;
  bool above_phi = false;  // h0 >= Phi(u, v), exact
};

struct Figure1Data {
  std::vector<Figure1Point> grid;    // label "grid", h0 unused
  std::vector<Figure1Point> points;  // one per semigroup
};

struct Figure2Curve {
  std::int64_t d1;
  Surd c_d1;
  std::int64_t lower_product;  // (d1 + 1)(d1 + 2)
};

struct Figure2Point {
  GeneratorTriple triple;
  std::int64_t product;  // d2 d3
  bool rho_below = false;
  bool e3_below_one = false;
};

struct Figure2Data {
  std::vector<Figure2Curve> curve;
  std::vector<Figure2Point> points;
};

const std::vector<std::array<std::int64_t, 3>>& figure1_semigroups();

Figure1Data figure1_data(const std::vector<std::array<std::int64_t, 3>>& set,
                         const AnalyzeOptions& options = {},
                         int grid_steps = 20);
// Curve over d1 in [4, curve_d1_max]; scatter over the non-symmetric d1 >= 4
// triples of config.
Figure2Data figure2_data(const ScanConfig& config, std::int64_t curve_d1_max);

}  // namespace sg3

#endif  // SG3_SCAN_HPP_
