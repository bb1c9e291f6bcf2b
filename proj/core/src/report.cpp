#include "sg3/report.hpp"

#include <sstream>

namespace sg3 {

namespace {

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::kHard: return "hard";
    case Severity::kSoft: return "soft";
    case Severity::kInfo: return "info";
  }
  return "hard";
}

Json int_list(const std::vector<std::int64_t>& values) {
  Json out = Json::array();
  for (auto v : values) out.push_back(v);
  return out;
}

Json triple_json(const GeneratorTriple& t) {
  return Json::array({t.d1(), t.d2(), t.d3()});
}

std::string numerator_string(const HilbertNumerator& num) {
  std::ostringstream out;
  bool first = true;
  for (const auto& term : num.terms) {
    const auto mag = term.coefficient < 0 ? -term.coefficient : term.coefficient;
    if (first) {
      if (term.coefficient < 0) out << "-";
    } else {
      out << (term.coefficient < 0 ? " - " : " + ");
    }
    if (term.exponent == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag;
      out << "t^" << term.exponent;
    }
    first = false;
  }
  return out.str();
}

std::string join_ids(const std::vector<BoundEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    if (!out.empty()) out += ';';
    out += e.id;
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json rational_json(const Rational& q) {
  Json out;
  out["exact"] = fraction_string(q);
  out["decimal"] = to_decimal(q, 5);
  return out;
}

Json bound_entry_json(const BoundEntry& entry) {
  Json out;
  out["id"] = std::string(entry.id);
  out["pass"] = entry.pass;
  out["severity"] = std::string(severity_name(entry.severity));
  out["margin"] = entry.margin ? rational_json(*entry.margin) : Json(nullptr);
  return out;
}

Json analysis_json(const Analysis& a) {
  const auto& p = a.profile;
  const auto& s = a.syzygy;
  const auto& rp = a.rescaled;
  Json out;
  out["triple"] = triple_json(p.triple);

  Json prof;
  prof["gaps"] = int_list(p.gaps());
  prof["frobenius"] = p.frobenius;
  prof["conductor"] = p.conductor;
  prof["genus"] = p.genus;
  Json genera = Json::array();
  for (const auto& g : p.higher_genera) genera.push_back(g.get_str());
  prof["higher_genera"] = std::move(genera);
  prof["symmetric"] = p.is_symmetric;
  prof["pseudo_frobenius"] = int_list(p.pseudo_frobenius);
  prof["type"] = p.type;
  out["profile"] = std::move(prof);

  Json num = Json::array();
  for (const auto& t : a.numerator.terms) {
    num.push_back(Json::array({t.exponent, t.coefficient}));
  }
  Json syz;
  syz["numerator"] = std::move(num);
  syz["numerator_text"] = numerator_string(a.numerator);
  syz["x"] = int_list(s.x);
  syz["y"] = int_list(s.y);
  syz["g3"] = s.g3;
  syz["symmetric_padding"] = s.symmetric_padding;
  Json xs = Json::array(), ys = Json::array(), ks = Json::array();
  for (int r = 0; r <= s.r_max(); ++r) {
    xs.push_back(s.X(r).get_str());
    ys.push_back(s.Y(r).get_str());
  }
  for (const auto& k : s.k) ks.push_back(rational_json(k));
  syz["power_sums_x"] = std::move(xs);
  syz["power_sums_y"] = std::move(ys);
  syz["k"] = std::move(ks);
  out["syzygy"] = std::move(syz);

  Json res;
  res["u"] = rational_json(rp.u);
  res["v"] = rational_json(rp.v);
  Json hs = Json::array();
  for (const auto& h : rp.h) hs.push_back(rational_json(h));
  res["h"] = std::move(hs);
  res["w3"] = rational_json(rp.w3);
  res["e3"] = rational_json(rp.e3);
  res["rho3"] = rp.rho3().to_decimal(5);
  res["rho3_squared"] = rational_json(rp.rho3_squared);
  out["rescaled"] = std::move(res);

  Json identities = Json::array();
  for (const auto& iv : a.identities) {
    Json j;
    j["r"] = iv.r;
    j["k"] = rational_json(iv.k);
    j["first_residual"] = fraction_string(iv.first_residual);
    j["second_residual"] = fraction_string(iv.second_residual);
    j["order_residual"] = fraction_string(iv.order_residual);
    j["ok"] = iv.ok();
    identities.push_back(std::move(j));
  }
  out["identities"] = std::move(identities);

  Json wilf;
  wilf["holds"] = a.wilf.holds;
  wilf["margin"] = rational_json(a.wilf.margin);
  wilf["route"] = std::string(route_name(a.wilf.route));
  out["wilf"] = std::move(wilf);

  if (a.rho) {
    Json rho;
    rho["rho3"] = a.rho->rho3.to_decimal(5);
    rho["rho_below"] = a.rho->rho_below;
    rho["rho_above"] = a.rho->rho_above;
    rho["C_d1"] = a.rho->c_d1.to_decimal(5);
    rho["product_exceeds_c"] = a.rho->product_exceeds_c;
    rho["rule_pass"] = a.rho->rule_pass;
    out["rho_screen"] = std::move(rho);
  } else {
    out["rho_screen"] = nullptr;
  }

  Json bounds = Json::array();
  for (const auto& e : a.report.entries()) bounds.push_back(bound_entry_json(e));
  out["bounds"] = std::move(bounds);
  return out;
}

Json record_json(const ScanRecord& rec) {
  Json out;
  out["triple"] = triple_json(rec.triple);
  out["error"] = rec.error ? Json(*rec.error) : Json(nullptr);
  out["F3"] = rec.frobenius;
  out["c3"] = rec.conductor;
  out["G0"] = rec.genus;
  out["tau"] = rec.type;
  out["symmetric"] = rec.symmetric;
  out["g3"] = rec.g3;
  out["x"] = int_list(rec.x);
  out["y"] = int_list(rec.y);
  out["u"] = rational_json(rec.u);
  out["v"] = rational_json(rec.v);
  Json hs = Json::array();
  for (const auto& h : rec.h) hs.push_back(rational_json(h));
  out["h"] = std::move(hs);
  out["w3"] = rational_json(rec.w3);
  out["e3"] = rational_json(rec.e3);
  out["rho3"] = rec.rho3;
  out["rho3_squared"] = rational_json(rec.rho3_squared);
  out["rho_exception"] = rec.rho_exception;
  out["wilf_route"] = std::string(route_name(rec.wilf_route));
  Json failed = Json::array();
  for (const auto& e : rec.failed) failed.push_back(bound_entry_json(e));
  out["failed"] = std::move(failed);
  return out;
}

Json summary_json(const ScanSummary& s) {
  Json out;
  out["triples"] = s.triples;
  out["emitted"] = s.emitted;
  out["symmetric"] = s.symmetric;
  out["errors"] = s.errors;
  out["records_with_findings"] = s.records_with_findings;
  out["violations"] = s.violations;
  out["rho_exceptions"] = s.rho_exceptions;
  Json bounds;
  for (const auto& [id, t] : s.bounds) {
    bounds[id] = Json{{"pass", t.pass}, {"fail", t.fail}};
  }
  out["bounds"] = bounds.is_null() ? Json::object() : std::move(bounds);
  Json routes = Json::object();
  for (const auto& [route, n] : s.wilf_routes) routes[route] = n;
  out["wilf_routes"] = std::move(routes);
  return out;
}

Json table1_json(const Table1Report& report) {
  static constexpr std::array<const char*, 4> kColumns = {"rho3", "e3", "w3",
                                                          "h0"};
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json j;
    j["triple"] = triple_json(row.triple);
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
      const auto& c = row.cells[i];
      j[kColumns[i]] = Json{{"printed", c.printed},
                            {"computed", c.computed},
                            {"within", c.within},
                            {"same_display", c.same_display}};
    }
    j["e3_above_one"] = row.e3_above_one;
    j["wilf_holds"] = row.wilf_holds;
    rows.push_back(std::move(j));
  }
  Json out;
  out["rows"] = std::move(rows);
  out["cells_matched"] = report.cells_matched;
  out["cells_total"] = report.cells_total;
  out["split_ok"] = report.split_ok;
  out["all_wilf"] = report.all_wilf;
  out["ok"] = report.ok();
  return out;
}

Json scan_config_json(const ScanConfig& c) {
  Json out;
  out["d1"] = Json::array({c.d1_lo, c.d1_hi});
  out["d2_max"] = c.d2_max;
  out["product_max"] = c.product_max;
  out["d3_rule"] = c.d3_rule == D3Rule::kStrict ? "strict" : "max-allowed";
  out["include_symmetric"] = c.include_symmetric;
  out["r_max"] = c.r_max;
  out["predicate"] = std::string(predicate_name(c.predicate));
  out["sieve_cap"] = c.sieve_cap;
  return out;
}

Json envelope(std::string_view command, Json config, Json records,
              Json findings, std::optional<double> timing_ms) {
  Json out;
  out["tool"] = "sg3";
  out["version"] = std::string(kToolVersion);
  out["command"] = std::string(command);
  out["config"] = std::move(config);
  out["records"] = std::move(records);
  out["findings"] = std::move(findings);
  out["timing"] =
      timing_ms ? Json{{"elapsed_ms", *timing_ms}} : Json(nullptr);
  return out;
}

std::string csv_header(int h_count) {
  std::string out =
      "d1,d2,d3,F3,c3,G0,tau,symmetric,g3,x1,x2,x3,y1,y2,u,u_dec,v,v_dec";
  for (int r = 0; r < h_count; ++r) {
    out += ",h" + std::to_string(r) + ",h" + std::to_string(r) + "_dec";
  }
  out +=
      ",w3,w3_dec,e3,e3_dec,rho3,rho3_squared,rho_exception,wilf_route,failed,"
      "error";
  return out;
}

std::string csv_row(const ScanRecord& rec, int h_count) {
  std::ostringstream out;
  const auto& t = rec.triple;
  out << t.d1() << ',' << t.d2() << ',' << t.d3() << ',';
  if (rec.error) {
    // 28 + 2h columns in total; three written, the error goes last
    const int blanks = 24 + 2 * h_count;
    for (int i = 0; i < blanks; ++i) out << ',';
    out << csv_quote(*rec.error);
    return out.str();
  }
  out << rec.frobenius << ',' << rec.conductor << ',' << rec.genus << ','
      << rec.type << ',' << (rec.symmetric ? 1 : 0) << ',' << rec.g3;
  for (std::size_t i = 0; i < 3; ++i) {
    out << ',' << (i < rec.x.size() ? std::to_string(rec.x[i]) : "");
  }
  for (std::size_t i = 0; i < 2; ++i) {
    out << ',' << (i < rec.y.size() ? std::to_string(rec.y[i]) : "");
  }
  auto rational = [&](const Rational& q) {
    out << ',' << fraction_string(q) << ',' << to_decimal(q, 5);
  };
  rational(rec.u);
  rational(rec.v);
  for (int r = 0; r < h_count; ++r) {
    if (static_cast<std::size_t>(r) < rec.h.size()) {
      rational(rec.h[static_cast<std::size_t>(r)]);
    } else {
      out << ",,";
    }
  }
  rational(rec.w3);
  rational(rec.e3);
  out << ',' << rec.rho3 << ',' << fraction_string(rec.rho3_squared) << ','
      << (rec.rho_exception ? 1 : 0) << ',' << route_name(rec.wilf_route)
      << ',' << join_ids(rec.failed) << ',';
  return out.str();
}

std::string analysis_text(const Analysis& a) {
  const auto& p = a.profile;
  const auto& s = a.syzygy;
  const auto& rp = a.rescaled;
  std::ostringstream out;
  out << "S3 = " << p.triple.to_string() << "\n";
  out << "  F3 = " << p.frobenius << "  c3 = " << p.conductor
      << "  G0 = " << p.genus << "  tau = " << p.type
      << "  symmetric = " << (p.is_symmetric ? "yes" : "no") << "\n";
  out << "  gaps:";
  const auto gaps = p.gaps();
  const std::size_t shown = std::min<std::size_t>(gaps.size(), 40);
  for (std::size_t i = 0; i < shown; ++i) out << ' ' << gaps[i];
  if (shown < gaps.size()) out << " ... (" << gaps.size() << " total)";
  out << "\n  numerator: " << numerator_string(a.numerator) << "\n";
  out << "  g3 = " << s.g3 << "  x = {" << s.x[0] << "," << s.x[1] << ","
      << s.x[2] << "}  y = {" << s.y[0] << "," << s.y[1] << "}\n\n";
  out << "  S3            rho3      e3        w3        h0\n";
  out << "  " << p.triple.to_string();
  for (std::size_t pad = p.triple.to_string().size(); pad < 14; ++pad) {
    out << ' ';
  }
  out << rp.rho3().to_decimal(5) << "   " << to_decimal(rp.e3) << "   "
      << to_decimal(rp.w3) << "   " << to_decimal(rp.h[0]) << "\n\n";
  out << "  u = " << fraction_string(rp.u) << " (" << to_decimal(rp.u)
      << ")  v = " << fraction_string(rp.v) << " (" << to_decimal(rp.v)
      << ")\n";
  for (std::size_t r = 0; r < rp.h.size(); ++r) {
    out << "  h" << r << " = " << fraction_string(rp.h[r]) << " ("
        << to_decimal(rp.h[r]) << ")\n";
  }
  int pass = 0;
  std::vector<BoundEntry> failed;
  for (const auto& e : a.report.entries()) {
    if (e.pass) {
      ++pass;
    } else if (e.severity != Severity::kInfo) {
      failed.push_back(e);
    }
  }
  out << "\n  checks: " << pass << " pass, " << failed.size() << " findings";
  if (!failed.empty()) out << " (" << join_ids(failed) << ")";
  out << "\n  wilf: w3 <= 2/3 " << (a.wilf.holds ? "holds" : "FAILS")
      << " via " << route_name(a.wilf.route) << "\n";
  return out.str();
}

std::string table1_text(const Table1Report& report) {
  static constexpr std::array<const char*, 4> kColumns = {"rho3", "e3", "w3",
                                                          "h0"};
  std::ostringstream out;
  out << "S3            ";
  for (const char* c : kColumns) out << c << " (computed/printed)   ";
  out << "\n";
  for (const auto& row : report.rows) {
    std::string name = row.triple.to_string();
    name.resize(14, ' ');
    out << name;
    for (const auto& cell : row.cells) {
      std::string col = cell.computed + "/" + cell.printed +
                        (cell.within ? "" : " !");
      col.resize(27, ' ');
      out << col;
    }
    out << "\n";
  }
  out << report.cells_matched << "/" << report.cells_total
      << " cells match; e3 split " << (report.split_ok ? "ok" : "WRONG")
      << "; w3 <= 2/3 " << (report.all_wilf ? "for all" : "FAILS") << "\n";
  return out.str();
}

void write_figure1_csv(std::ostream& out, const Figure1Data& data) {
  out << "u,v,h0,phi,label\n";
  for (const auto& g : data.grid) {
    out << to_decimal(g.u) << ',' << to_decimal(g.v) << ",,"
        << g.phi.to_decimal(5) << ',' << g.label << '\n';
  }
  for (const auto& p : data.points) {
    out << to_decimal(p.u) << ',' << to_decimal(p.v) << ',' << to_decimal(p.h0)
        << ',' << p.phi.to_decimal(5) << ',' << csv_quote(p.label) << '\n';
  }
}

void write_figure2_csv(std::ostream& out, const Figure2Data& data) {
  out << "d1,C_d1,lower_product,d2d3,rho_class,e3_class,label\n";
  for (const auto& c : data.curve) {
    out << c.d1 << ',' << c.c_d1.to_decimal(5) << ',' << c.lower_product
        << ",,,,curve\n";
  }
  for (const auto& p : data.points) {
    const auto d1 = p.triple.d1();
    out << d1 << ',' << c_threshold(d1).to_decimal(5) << ','
        << (d1 + 1) * (d1 + 2) << ',' << p.product << ','
        << (p.rho_below ? "rho<1.1547" : "rho>1.1547") << ','
        << (p.e3_below_one ? "e3<1" : "e3>=1") << ','
        << csv_quote(p.triple.to_string()) << '\n';
  }
}

}  // namespace sg3
