#include "sg3/scan.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

namespace sg3 {

namespace {

template <std::size_t N>
std::array<std::string, N> numbered_ids(const char* prefix) {
  std::array<std::string, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = prefix + std::to_string(i);
  return out;
}

std::string_view identity_id(int r) {
  static const auto ids = numbered_ids<kMaxRMax>("identity_r");
  return ids.at(static_cast<std::size_t>(r));
}

std::string_view k_agree_id(int r) {
  static const auto ids = numbered_ids<3>("k_agree_r");
  return ids.at(static_cast<std::size_t>(r));
}

void structural_checks(const SemigroupProfile& p, const HilbertNumerator& num,
                       const SyzygyData& data, BoundReport& report) {
  const auto& t = p.triple;
  if (std::gcd(t.d1(), t.d2()) == 1) {
    report.add("frobenius_cap", p.frobenius <= t.d1() * t.d2() - t.d1() - t.d2());
  }
  const std::int64_t twice_genus = 2 * p.genus;
  report.add("genus_dichotomy",
             twice_genus >= p.conductor &&
                 (twice_genus == p.conductor) == p.is_symmetric);
  report.add("type_range", (p.type == 1 || p.type == 2) &&
                               (p.type == 1) == p.is_symmetric);
  report.add("numerator_at_one", num.value_at_one() == 0);
  report.add("g3_relation", data.g3 == p.frobenius + t.sigma1());

  const BigInt& X1 = data.X(1);
  const BigInt& X2 = data.X(2);
  const BigInt& Y1 = data.Y(1);
  const BigInt& Y2 = data.Y(2);
  const BigInt& Y3 = data.Y(3);
  const BigInt g3 = to_big(data.g3);
  report.add("power_sum_y2", Y2 == Y1 * Y1 - 2 * g3 * Y1 + 2 * g3 * g3);
  report.add("power_sum_y3", 2 * Y3 == 3 * Y1 * Y2 - Y1 * Y1 * Y1);
  report.add("newton_maclaurin_x", 3 * X2 > X1 * X1);
  report.add("newton_maclaurin_y", 2 * Y2 > Y1 * Y1);
}

}  // namespace

Analysis analyze(const GeneratorTriple& triple, const AnalyzeOptions& options) {
  if (options.r_max < 3 || options.r_max > kMaxRMax) {
    throw Error(ErrorKind::kUnsupportedR, "r_max must lie in [3, 64]");
  }
  SemigroupProfile prof = profile(triple, 2, options.sieve_cap);
  HilbertNumerator num = hilbert_numerator(prof);
  SyzygyData data = extract_syzygies(num, prof, options.r_max);
  RescaledProfile rp = rescaled_profile(data, prof);
  WilfVerdict wilf = wilf_check(prof, rp);
  Analysis a{std::move(prof), std::move(num), std::move(data), std::move(rp),
             {},             std::move(wilf), std::nullopt, {}};

  auto& report = a.report;
  report.reserve(96);
  a.identities.reserve(static_cast<std::size_t>(options.r_max) - 2);
  structural_checks(a.profile, a.numerator, a.syzygy, report);

  for (int r = 0; r + 3 <= options.r_max; ++r) {
    a.identities.push_back(verify_identity(a.syzygy, a.profile, r));
    const auto& iv = a.identities.back();
    report.add(identity_id(r), iv.ok(), iv.order_residual);
    if (r <= 2) {
      Rational diff = iv.k - a.syzygy.k[static_cast<std::size_t>(r)];
      const bool agree = sgn(diff) == 0;
      report.add(k_agree_id(r), agree, std::move(diff));
    }
  }
  report.add("k_positive", a.syzygy.all_k_positive());

  report.append(davison_check(a.profile, a.syzygy));
  report.append(h0_bounds_check(a.rescaled));
  report.append(q_inequality_check(a.rescaled));
  if (a.rescaled.r_max() >= 2) report.append(h1_h2_identities(a.rescaled));
  if (a.rescaled.r_max() >= 3) report.append(h3_relation(a.rescaled));
  report.append(hr_window_checks(a.rescaled));
  if (a.rescaled.symmetric) {
    report.append(symmetric_formulas_check(a.rescaled));
  }
  report.append(a.wilf.report);
  if (triple.d1() >= 4) a.rho = rho_screen(triple);
  return a;
}

std::string_view predicate_name(Predicate p) {
  switch (p) {
    case Predicate::kAll: return "all";
    case Predicate::kRhoException: return "rho-exception";
    case Predicate::kWilf: return "wilf";
    case Predicate::kBounds: return "bounds";
  }
  return "all";
}

std::optional<Predicate> parse_predicate(std::string_view text) {
  for (auto p : {Predicate::kAll, Predicate::kRhoException, Predicate::kWilf,
                 Predicate::kBounds}) {
    if (predicate_name(p) == text) return p;
  }
  return std::nullopt;
}

void ScanConfig::validate() const {
  if (d1_lo < 3) throw std::invalid_argument("d1 range must start at 3 or more");
  if (r_max < 3 || r_max > kMaxRMax) {
    throw std::invalid_argument("r_max must lie in [3, 64]");
  }
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");
}

std::vector<GeneratorTriple> stripe_triples(std::int64_t d1, std::int64_t d2,
                                            D3Rule rule) {
  std::vector<GeneratorTriple> out;
  std::int64_t cap = d1 * d2 - d1 - d2;
  if (rule == D3Rule::kStrict) --cap;
  if (d2 % d1 == 0) return out;
  const std::int64_t g = std::gcd(d1, d2);
  for (std::int64_t d3 = d2 + 1; d3 <= cap; ++d3) {
    if (g != 1 && std::gcd(g, d3) != 1) continue;
    if (representable(d3, d1, d2)) continue;
    out.push_back(validate_triple(d1, d2, d3));
  }
  return out;
}

std::vector<GeneratorTriple> enumerate_triples(const ScanConfig& config) {
  config.validate();
  std::vector<GeneratorTriple> out;
  for (std::int64_t d1 = config.d1_lo; d1 <= config.d1_hi; ++d1) {
    for (std::int64_t d2 = d1 + 1; d2 <= config.d2_max; ++d2) {
      if (config.product_max > 0 && d1 * d2 > config.product_max) break;
      for (auto& t : stripe_triples(d1, d2, config.d3_rule)) {
        if (!config.include_symmetric &&
            profile(t, 0, config.sieve_cap).is_symmetric) {
          continue;
        }
        out.push_back(t);
      }
    }
  }
  return out;
}

ScanRecord make_record(const GeneratorTriple& triple, const Analysis& a) {
  ScanRecord rec{.triple = triple};
  rec.frobenius = a.profile.frobenius;
  rec.conductor = a.profile.conductor;
  rec.genus = a.profile.genus;
  rec.type = a.profile.type;
  rec.symmetric = a.profile.is_symmetric;
  rec.g3 = a.syzygy.g3;
  rec.x = a.syzygy.x;
  rec.y = a.syzygy.y;
  rec.u = a.rescaled.u;
  rec.v = a.rescaled.v;
  rec.h = a.rescaled.h;
  rec.w3 = a.rescaled.w3;
  rec.e3 = a.rescaled.e3;
  rec.rho3 = a.rescaled.rho3().to_decimal(5);
  rec.rho3_squared = a.rescaled.rho3_squared;
  rec.rho_exception = a.rho_exception();
  rec.wilf_route = a.wilf.route;
  for (const auto& e : a.report.entries()) {
    if (e.is_finding()) rec.failed.push_back(e);
  }
  return rec;
}

ScanRecord make_error_record(const GeneratorTriple& triple, const Error& error) {
  ScanRecord rec{.triple = triple};
  rec.error = error.what();
  return rec;
}

bool matches_predicate(const ScanRecord& record, Predicate predicate) {
  switch (predicate) {
    case Predicate::kAll: return true;
    case Predicate::kRhoException: return record.rho_exception;
    case Predicate::kWilf:
      return record.error.has_value() ||
             record.wilf_route == WilfRoute::kDirect ||
             std::any_of(record.failed.begin(), record.failed.end(),
                         [](const BoundEntry& e) {
                           return e.id.starts_with("wilf") || e.id == "froberg";
                         });
    case Predicate::kBounds: return record.has_findings();
  }
  return true;
}

namespace {

struct StripeOutput {
  std::vector<ScanRecord> records;
  ScanSummary summary;  // counts only; tallies live below until the merge
  // Bound ids all have static storage, so views are safe keys.
  std::map<std::string_view, BoundTally> bounds;
  std::map<std::string_view, std::int64_t> wilf_routes;
};

void merge_into(ScanSummary& total, const StripeOutput& part) {
  const auto& s = part.summary;
  total.triples += s.triples;
  total.emitted += s.emitted;
  total.symmetric += s.symmetric;
  total.errors += s.errors;
  total.records_with_findings += s.records_with_findings;
  total.violations += s.violations;
  total.rho_exceptions += s.rho_exceptions;
  for (const auto& [id, tally] : part.bounds) {
    auto& t = total.bounds[std::string(id)];
    t.pass += tally.pass;
    t.fail += tally.fail;
  }
  for (const auto& [route, n] : part.wilf_routes) {
    total.wilf_routes[std::string(route)] += n;
  }
}

StripeOutput run_stripe(const ScanConfig& config, std::int64_t d1,
                        std::int64_t d2) {
  StripeOutput out;
  auto& s = out.summary;
  const AnalyzeOptions options{config.r_max, config.sieve_cap};
  for (const auto& triple : stripe_triples(d1, d2, config.d3_rule)) {
    // The cheap fields that the counters and predicates read come first; the
    // full record is only built for triples that are emitted.
    ScanRecord rec{.triple = triple};
    std::optional<Analysis> analysis;
    try {
      analysis.emplace(analyze(triple, options));
      const Analysis& a = *analysis;
      if (!config.include_symmetric && a.profile.is_symmetric) continue;
      rec.symmetric = a.profile.is_symmetric;
      rec.rho_exception = a.rho_exception();
      rec.wilf_route = a.wilf.route;
      for (const auto& e : a.report.entries()) {
        auto& t = out.bounds[e.id];
        (e.pass ? t.pass : t.fail) += 1;
        if (e.is_violation()) ++s.violations;
        if (e.is_finding()) rec.failed.push_back(e);
      }
      ++out.wilf_routes[route_name(a.wilf.route)];
    } catch (const Error& err) {
      rec = make_error_record(triple, err);
      ++s.errors;
    }
    ++s.triples;
    if (rec.symmetric) ++s.symmetric;
    if (rec.rho_exception) ++s.rho_exceptions;
    if (rec.has_findings()) ++s.records_with_findings;
    if (matches_predicate(rec, config.predicate)) {
      ++s.emitted;
      if (analysis) rec = make_record(triple, *analysis);
      out.records.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace

ScanResult run_scan(const ScanConfig& config) {
  config.validate();
  std::vector<std::pair<std::int64_t, std::int64_t>> stripes;
  for (std::int64_t d1 = config.d1_lo; d1 <= config.d1_hi; ++d1) {
    for (std::int64_t d2 = d1 + 1; d2 <= config.d2_max; ++d2) {
      if (config.product_max > 0 && d1 * d2 > config.product_max) break;
      stripes.emplace_back(d1, d2);
    }
  }
  std::vector<StripeOutput> outputs(stripes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < stripes.size(); i = next++) {
      outputs[i] = run_stripe(config, stripes[i].first, stripes[i].second);
    }
  };
  const auto workers = static_cast<std::size_t>(config.jobs);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  ScanResult result;
  for (auto& out : outputs) {
    merge_into(result.summary, out);
    std::move(out.records.begin(), out.records.end(),
              std::back_inserter(result.records));
  }
  return result;
}

const std::vector<Table1Entry>& table1_entries() {
  static const std::vector<Table1Entry> entries = {
      {4, 5, 7, {"1.35225", "1.07143", "0.57143", "0.52273"}},
      {4, 7, 9, {"1.25988", "0.86363", "0.54545", "0.51667"}},
      {4, 5, 11, {"1.34840", "1.18750", "0.625", "0.53704"}},
      {4, 7, 13, {"1.25794", "1.04545", "0.63636", "0.54412"}},
      {4, 7, 17, {"1.28338", "0.96428", "0.57143", "0.52439"}},
      {4, 9, 11, {"1.20605", "0.76667", "0.53333", "0.51316"}},
      {4, 9, 15, {"1.20493", "0.9", "0.6", "0.53571"}},
      {4, 11, 13, {"1.17074", "0.71053", "0.52632", "0.51087"}},
      {5, 6, 7, {"1.24212", "0.85", "0.6", "0.53704"}},
      {5, 6, 8, {"1.22644", "0.9", "0.6", "0.53571"}},
      {5, 7, 8, {"1.19523", "0.79167", "0.58333", "0.53226"}},
      {5, 7, 9, {"1.18322", "0.71429", "0.57143", "0.52941"}},
      {5, 8, 9, {"1.15950", "0.80769", "0.61539", "0.54412"}},
  };
  return entries;
}

namespace {

const Rational kCellTolerance(1, 100000);

// Printed value padded to five decimals, for display comparison.
std::string five_places(const std::string& printed) {
  return to_decimal(parse_decimal(printed), 5);
}

Table1Cell rational_cell(const Rational& value, const char* printed) {
  Table1Cell cell{printed, to_decimal(value, 5)};
  const Rational p = parse_decimal(printed);
  cell.within = cmp(abs(value - p), kCellTolerance) <= 0;
  cell.same_display = cell.computed == five_places(cell.printed);
  return cell;
}

Table1Cell surd_cell(const Surd& value, const char* printed) {
  Table1Cell cell{printed, value.to_decimal(5)};
  const Rational p = parse_decimal(printed);
  cell.within = value.compare(p - kCellTolerance) >= 0 &&
                value.compare(p + kCellTolerance) <= 0;
  cell.same_display = cell.computed == five_places(cell.printed);
  return cell;
}

bool is_named_e3_exception(const GeneratorTriple& t) {
  static const std::array<std::array<std::int64_t, 3>, 3> named = {
      {{4, 5, 7}, {4, 5, 11}, {4, 7, 13}}};
  return std::find(named.begin(), named.end(), t.generators()) != named.end();
}

}  // namespace

Table1Report table1_reproduce() {
  Table1Report report;
  int below_one = 0;
  bool split_ok = true;
  report.all_wilf = true;
  for (const auto& entry : table1_entries()) {
    const auto triple = validate_triple(entry.d1, entry.d2, entry.d3);
    const Analysis a = analyze(triple, {.r_max = 3});
    const auto& rp = a.rescaled;
    Table1Row row{triple,
                  {surd_cell(rp.rho3(), entry.printed[0]),
                   rational_cell(rp.e3, entry.printed[1]),
                   rational_cell(rp.w3, entry.printed[2]),
                   rational_cell(rp.h[0], entry.printed[3])}};
    row.e3_above_one = cmp(rp.e3, Rational(1)) > 0;
    row.wilf_holds = a.wilf.holds;
    for (const auto& cell : row.cells) {
      ++report.cells_total;
      if (cell.within) ++report.cells_matched;
    }
    if (!row.e3_above_one) ++below_one;
    if (row.e3_above_one != is_named_e3_exception(triple)) split_ok = false;
    // every listed triple is a rho exception
    if (!a.rho_exception()) split_ok = false;
    report.all_wilf = report.all_wilf && row.wilf_holds;
    report.rows.push_back(std::move(row));
  }
  report.split_ok = split_ok && below_one == 10;
  return report;
}

std::vector<RhoException> rho_exception_scan(const ScanConfig& config) {
  if (config.d1_lo < 4) {
    throw std::invalid_argument("rho-exception scan needs d1 >= 4");
  }
  ScanConfig cfg = config;
  cfg.predicate = Predicate::kRhoException;
  cfg.include_symmetric = false;
  cfg.r_max = 3;
  const ScanResult result = run_scan(cfg);
  std::vector<RhoException> out;
  for (const auto& rec : result.records) {
    if (rec.error) continue;
    RhoException ex{rec.triple, rec.e3};
    ex.e3_above_one = cmp(rec.e3, Rational(1)) > 0;
    ex.w3 = rec.w3;
    ex.wilf_holds = cmp(rec.w3, Rational(2, 3)) <= 0;
    ex.product_exceeds_c = rho_screen(rec.triple).product_exceeds_c;
    ex.in_table1 = std::any_of(
        table1_entries().begin(), table1_entries().end(),
        [&](const Table1Entry& e) {
          return rec.triple.generators() ==
                 std::array<std::int64_t, 3>{e.d1, e.d2, e.d3};
        });
    out.push_back(std::move(ex));
  }
  return out;
}

const std::vector<std::array<std::int64_t, 3>>& figure1_semigroups() {
  static const std::vector<std::array<std::int64_t, 3>> set = {
      {3, 4, 5},      {4, 5, 6},       {5, 6, 7},        {11, 17, 29},
      {25, 31, 43},   {23, 29, 44},    {43, 47, 113},    {501, 503, 603},
      {901, 903, 1003}, {1201, 1203, 1303}};
  return set;
}

Figure1Data figure1_data(const std::vector<std::array<std::int64_t, 3>>& set,
                         const AnalyzeOptions& options, int grid_steps) {
  Figure1Data data;
  // Interior grid over (1, 2) x (0, 1/3).
  for (int i = 1; i < grid_steps; ++i) {
    for (int j = 1; j < grid_steps; ++j) {
      const Rational u = 1 + Rational(i, grid_steps);
      const Rational v = Rational(j, 3 * grid_steps);
      data.grid.push_back({"grid", u, v, Rational(0), phi_function(u, v), false});
    }
  }
  for (const auto& g : set) {
    const auto triple = validate_triple(g[0], g[1], g[2]);
    const SemigroupProfile prof = profile(triple, 2, options.sieve_cap);
    const SyzygyData syz = extract_syzygies(hilbert_numerator(prof), prof, 3);
    const RescaledProfile rp = rescaled_profile(syz, prof);
    Figure1Point point{triple.to_string(), rp.u, rp.v, rp.h[0],
                       phi_function(rp.u, rp.v), false};
    point.above_phi = q_inequality_check(rp).passed("phi_lower");
    data.points.push_back(std::move(point));
  }
  return data;
}

Figure2Data figure2_data(const ScanConfig& config, std::int64_t curve_d1_max) {
  Figure2Data data;
  for (std::int64_t d1 = 4; d1 <= curve_d1_max; ++d1) {
    data.curve.push_back({d1, c_threshold(d1), (d1 + 1) * (d1 + 2)});
  }
  ScanConfig cfg = config;
  cfg.d1_lo = std::max<std::int64_t>(cfg.d1_lo, 4);
  cfg.include_symmetric = false;
  cfg.predicate = Predicate::kAll;
  cfg.r_max = 3;
  for (const auto& rec : run_scan(cfg).records) {
    if (rec.error) continue;
    const BigInt s1 = to_big(rec.triple.sigma1());
    data.points.push_back({rec.triple, rec.triple.d2() * rec.triple.d3(),
                           3 * s1 * s1 < 4 * rec.triple.pi3(),
                           cmp(rec.e3, Rational(1)) < 0});
  }
  return data;
}

}  // namespace sg3
