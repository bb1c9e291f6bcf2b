#include "sg3/rescaled.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "sg3/error.hpp"

namespace sg3 {

namespace {

// min(value - lo, hi - value): positive iff lo < value < hi.
Rational window_margin(const Rational& value, const Rational& lo,
                       const Rational& hi) {
  Rational below = value - lo;
  Rational above = hi - value;
  return cmp(below, above) < 0 ? below : above;
}

void add_open_window(BoundReport& report, std::string_view id,
                     const Rational& value, const Rational& lo,
                     const Rational& hi, Severity severity = Severity::kHard) {
  Rational m = window_margin(value, lo, hi);
  const bool pass = sgn(m) > 0;
  report.add(id, pass, std::move(m), severity);
}

void add_identity(BoundReport& report, std::string_view id, Rational residual) {
  const bool pass = sgn(residual) == 0;
  report.add(id, pass, std::move(residual));
}

struct Window {
  Rational lo, hi;
};

const std::array<Window, 7>& symmetric_windows() {
  static const std::array<Window, 7> w = {{
      {Rational(1, 2), Rational(1, 2)},
      {Rational(7, 48), Rational(1, 6)},
      {Rational(1, 16), Rational(1, 12)},
      {Rational(31, 960), Rational(1, 20)},
      {Rational(3, 160), Rational(1, 30)},
      {Rational(127, 10752), Rational(1, 42)},
      {Rational(85, 10752), Rational(1, 56)},
  }};
  return w;
}

const Rational kH3Low = parse_decimal("0.02443");
const Rational kH3High = parse_decimal("0.07515");

}  // namespace

const BoundEntry* BoundReport::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

bool BoundReport::passed(std::string_view id) const {
  const auto* e = find(id);
  return e != nullptr && e->pass;
}

bool BoundReport::all_pass() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const BoundEntry& e) { return e.is_violation(); });
}

bool BoundReport::has_findings() const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [](const BoundEntry& e) { return e.is_finding(); });
}

RescaledProfile rescaled_profile(const SyzygyData& data,
                                 const SemigroupProfile& profile) {
  RescaledProfile rp;
  const BigInt g3 = to_big(data.g3);
  rp.u = make_rational(data.Y(1), g3);
  rp.v = make_rational(data.pi3, g3 * g3);
  rp.h.reserve(data.k.size());
  BigInt g_pow = g3;
  for (std::size_t r = 0; r < data.k.size(); ++r) {
    const int order = static_cast<int>(r);
    const bool direct = order <= 2 && profile.r_max() >= order;
    Rational k = !direct                 ? data.k[r]
                 : r < data.k_direct.size()
                     ? data.k_direct[r]
                     : k_coefficient(data, profile, order, KMode::kDirect);
    rp.h.push_back(k / Rational(g_pow));
    g_pow *= g3;
  }
  const BigInt c3 = to_big(profile.conductor);
  rp.w3 = make_rational(to_big(profile.genus), c3);
  rp.e3 = profile.triple.delta(1) / Rational(c3);
  const BigInt s1 = to_big(profile.triple.sigma1());
  rp.rho3_squared = make_rational(s1 * s1, profile.triple.pi3());
  rp.symmetric = profile.is_symmetric;
  return rp;
}

BoundReport davison_check(const SemigroupProfile& profile,
                          const SyzygyData& data) {
  BoundReport report;
  const BigInt g3 = to_big(data.g3);
  const BigInt g3_sq = g3 * g3;
  const BigInt pi3 = profile.triple.pi3();
  const BigInt strict = g3_sq - 3 * pi3;
  const BigInt strong = g3_sq - 3 * (pi3 + 1);
  report.add("davison_strict", sgn(strict) > 0, Rational(strict));
  report.add("davison_strong", sgn(strong) >= 0, Rational(strong));
  return report;
}

BoundReport h0_bounds_check(const RescaledProfile& rp) {
  BoundReport report;
  const Rational& h0 = rp.h.at(0);
  Rational lower = h0 - Rational(1, 2);
  Rational upper = Rational(5, 9) - h0;
  const bool at_half = sgn(lower) == 0;
  report.add("h0_lower", sgn(lower) >= 0, lower);
  report.add("h0_upper", sgn(upper) > 0, upper);
  report.add("h0_equality_iff_symmetric", at_half == rp.symmetric);
  return report;
}

Rational q_function(const Rational& u, const Rational& v) {
  const Rational base = u - 1 + v;
  return base * base * base / (27 * v * v);
}

Surd phi_function(const Rational& u, const Rational& v) {
  return Surd{u / 2, -1, q_function(u, v) / 4};
}

BoundReport q_inequality_check(const RescaledProfile& rp) {
  BoundReport report;
  const Rational q = q_function(rp.u, rp.v);
  const Rational gap = rp.u - 2 * rp.h.at(0);
  Rational margin = q - gap * gap;
  const bool squared_ok = sgn(margin) >= 0;
  report.add("q_inequality", squared_ok, margin);
  // h0 >= (u - sqrt Q)/2  <=>  u - 2h0 <= sqrt Q
  const bool phi_ok = sgn(gap) <= 0 || squared_ok;
  report.add("phi_lower", phi_ok);
  return report;
}

BoundReport h1_h2_identities(const RescaledProfile& rp) {
  BoundReport report;
  const Rational& u = rp.u;
  const Rational& v = rp.v;
  const Rational& h0 = rp.h.at(0);
  const Rational t = 2 * h0 - 1;
  add_identity(report, "h1_identity",
               12 * rp.h.at(1) - (2 * u * t + 2 - v));
  add_identity(report, "h2_identity",
               12 * rp.h.at(2) - (t * u * (u - 1) + 2 * h0 * (1 - v)));
  return report;
}

BoundReport h3_relation(const RescaledProfile& rp) {
  BoundReport report;
  const Rational& u = rp.u;
  const Rational& v = rp.v;
  const Rational& h0 = rp.h.at(0);
  const Rational& h1 = rp.h.at(1);
  const Rational& h2 = rp.h.at(2);
  const Rational& h3 = rp.h.at(3);
  const Rational delta1 = 3 * h1 - 2 * h0 * h0 + v / 4;
  const Rational delta2 = 6 * h2 - 6 * h0 * h1 + v / 2 * h0;
  add_identity(report, "delta1_factorization",
               delta1 - (2 * h0 - 1) * (u - 1 - 2 * h0) / 2);
  add_identity(report, "delta2_relation", delta2 - u * delta1);
  const Rational core = 10 * h3 - 18 * h1 * h1 + v * h0 * h0 - v * v / 24;
  add_identity(report, "h3_quartic", core * delta1 - delta2 * delta2);
  add_identity(report, "h3_relation",
               10 * h3 - (18 * h1 * h1 - v * h0 * h0 + v * v / 24 +
                          u * u * delta1));
  return report;
}

BoundReport hr_window_checks(const RescaledProfile& rp) {
  BoundReport report;
  if (rp.r_max() >= 1) {
    add_open_window(report, "h1_window", rp.h[1], Rational(5, 36),
                    Rational(11, 54));
  }
  if (rp.r_max() >= 2) {
    add_open_window(report, "h2_window", rp.h[2], Rational(1, 18),
                    Rational(1, 9));
  }
  if (rp.r_max() >= 3) {
    add_open_window(report, "h3_window", rp.h[3], kH3Low, kH3High,
                    Severity::kSoft);
  }
  return report;
}

Rational symmetric_h(int r, const Rational& v) {
  const Rational v2 = v * v;
  const Rational v3 = v2 * v;
  switch (r) {
    case 0: return Rational(1, 2);
    case 1: return (1 - v / 2) / 6;
    case 2: return (1 - v) / 12;
    case 3: return (1 - 3 * v / 2 + v2 / 3) / 20;
    case 4: return (1 - 2 * v + v2) / 30;
    case 5: return (1 - 5 * v / 2 + 2 * v2 - v3 / 4) / 42;
    case 6: return (1 - 3 * v + 10 * v2 / 3 - v3) / 56;
    default: break;
  }
  throw Error(ErrorKind::kUnsupportedR,
              "symmetric closed form known for r <= 6 only");
}

BoundReport symmetric_formulas_check(const RescaledProfile& rp) {
  if (!rp.symmetric) {
    throw Error(ErrorKind::kNotSymmetric,
                "closed forms apply to symmetric semigroups only");
  }
  static constexpr std::array<std::string_view, 7> kFormIds = {
      "sym_h0", "sym_h1", "sym_h2", "sym_h3", "sym_h4", "sym_h5", "sym_h6"};
  static constexpr std::array<std::string_view, 7> kWindowIds = {
      "sym_h0_window", "sym_h1_window", "sym_h2_window", "sym_h3_window",
      "sym_h4_window", "sym_h5_window", "sym_h6_window"};
  BoundReport report;
  add_identity(report, "sym_u", rp.u - 1);
  add_identity(report, kFormIds[0], rp.h.at(0) - Rational(1, 2));
  Rational v_margin = Rational(1, 4) - rp.v;
  const bool v_ok = sgn(rp.v) > 0 && sgn(v_margin) >= 0;
  report.add("sym_v_range", v_ok, std::move(v_margin));
  const int top = std::min(rp.r_max(), 6);
  for (int r = 1; r <= top; ++r) {
    const auto idx = static_cast<std::size_t>(r);
    add_identity(report, kFormIds[idx], rp.h[idx] - symmetric_h(r, rp.v));
    const auto& w = symmetric_windows()[idx];
    add_open_window(report, kWindowIds[idx], rp.h[idx], w.lo, w.hi);
  }
  return report;
}

std::string_view route_name(WilfRoute route) {
  switch (route) {
    case WilfRoute::kSymmetric: return "symmetric";
    case WilfRoute::kLemmaD1Eq3: return "d1=3-lemma";
    case WilfRoute::kSufficientE3: return "e3<=1";
    case WilfRoute::kDirect: return "direct";
  }
  return "unknown";
}

bool in_wilf_equality_family(const GeneratorTriple& triple) {
  return triple.d1() == 3 && triple.d2() % 3 == 1 &&
         triple.d3() == triple.d2() + 1;
}

WilfVerdict wilf_check(const SemigroupProfile& profile,
                       const RescaledProfile& rp) {
  WilfVerdict verdict;
  auto& report = verdict.report;
  const Rational two_thirds(2, 3);
  verdict.margin = two_thirds - rp.w3;
  verdict.holds = sgn(verdict.margin) >= 0;
  report.add("wilf_upper", verdict.holds, verdict.margin);

  const Rational lower = rp.w3 - Rational(1, 2);
  report.add("wilf_lower",
             rp.symmetric ? sgn(lower) == 0 : sgn(lower) > 0, lower);
  report.add("wilf_equality_family",
             (sgn(verdict.margin) == 0) ==
                 in_wilf_equality_family(profile.triple));

  const BigInt G0 = to_big(profile.genus);
  const BigInt c3 = to_big(profile.conductor);
  const BigInt tau = to_big(profile.type);
  const BigInt froberg = tau * c3 - G0 * (tau + 1);
  report.add("froberg", sgn(froberg) >= 0,
             make_rational(froberg, c3 * (tau + 1)));

  if (rp.symmetric) {
    verdict.route = WilfRoute::kSymmetric;
  } else if (profile.triple.d1() == 3) {
    verdict.route = WilfRoute::kLemmaD1Eq3;
    const bool lemma = 3 * c3 <= 6 * G0 && 3 * G0 < 2 * c3 + 1;
    report.add("wilf_lemma_d1_3", lemma);
  } else {
    Rational slack = Rational(5, 9) + rp.e3 / 9 - rp.w3;
    report.add("wilf_sufficient", sgn(slack) > 0, slack);
    const bool e3_small = cmp(rp.e3, Rational(1)) <= 0;
    report.add("e3_le_1", e3_small, Rational(1) - rp.e3, Severity::kInfo);
    verdict.route = e3_small ? WilfRoute::kSufficientE3 : WilfRoute::kDirect;
  }
  return verdict;
}

Surd c_threshold(std::int64_t d1) {
  if (d1 < 4) throw std::invalid_argument("C(d1) needs d1 >= 4");
  const BigInt d = to_big(d1);
  const BigInt m = d - 3;
  const Rational a = make_rational(3 * d * d * (d + 3), 4 * m * m);
  const Rational b = make_rational(3 * d * d, 2 * m * m);
  return Surd{a, 1, b * b * Rational(3 * d)};
}

bool product_exceeds_c(std::int64_t d1, const BigInt& product) {
  if (d1 < 4) throw std::invalid_argument("C(d1) needs d1 >= 4");
  const BigInt d = to_big(d1);
  const BigInt lhs = (4 * d + 12) * product - 3 * d * d;
  if (sgn(lhs) <= 0) return false;
  return lhs * lhs > 192 * d * product * product;
}

RhoScreen rho_screen(const GeneratorTriple& triple) {
  if (triple.d1() < 4) throw std::invalid_argument("rho screen needs d1 >= 4");
  RhoScreen s;
  const BigInt s1 = to_big(triple.sigma1());
  const BigInt lhs = 3 * s1 * s1;
  const BigInt rhs = 4 * triple.pi3();
  s.rho_below = lhs < rhs;
  s.rho_above = lhs > rhs;
  const BigInt product = to_big(triple.d2()) * to_big(triple.d3());
  s.product_exceeds_c = product_exceeds_c(triple.d1(), product);
  if (triple.d1() == 4) {
    s.rule_pass = product > 167;
  } else if (triple.d1() == 5) {
    s.rule_pass = product > 73;
  } else {
    s.rule_pass = true;
  }
  s.rho3 = Surd::sqrt_of(make_rational(s1 * s1, triple.pi3()));
  s.c_d1 = c_threshold(triple.d1());
  return s;
}

BoundReport window_nesting_check() {
  BoundReport report;
  const auto& sym = symmetric_windows();
  report.add("nest_h0", cmp(sym[0].lo, Rational(1, 2)) >= 0 &&
                            cmp(sym[0].hi, Rational(5, 9)) < 0);
  report.add("nest_h1", cmp(Rational(5, 36), sym[1].lo) < 0 &&
                            cmp(sym[1].hi, Rational(11, 54)) < 0);
  report.add("nest_h2", cmp(Rational(1, 18), sym[2].lo) < 0 &&
                            cmp(sym[2].hi, Rational(1, 9)) < 0);
  report.add("nest_h3",
             cmp(kH3Low, sym[3].lo) < 0 && cmp(sym[3].hi, kH3High) < 0);
  return report;
}

}  // namespace sg3
