#ifndef SG3_RESCALED_HPP_
#define SG3_RESCALED_HPP_

// Rescaled genera h_r = K_r / g3^(r+1) and the identities and bounds they
// satisfy. Every verdict is decided in exact arithmetic; irrational bounds
// are compared in squared or denominator-cleared form.

#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sg3/exact.hpp"
#include "sg3/semigroup.hpp"
#include "sg3/syzygy.hpp"

namespace sg3 {

struct RescaledProfile {
  Rational u;  // Y1 / g3
  Rational v;  // pi3 / g3^2
  std::vector<Rational> h;  // h_0..h_R
  Rational w3;  // G0 / c3
  Rational e3;  // delta1 / c3
  Rational rho3_squared;  // sigma1^2 / pi3
  bool symmetric = false;

  Surd rho3() const { return Surd::sqrt_of(rho3_squared); }
  int r_max() const { return static_cast<int>(h.size()) - 1; }
};

// h_0..h_2 come from the closed-form K_r (profile genera), h_3 onwards from
// the backsolved K_r, so identities between them compare independent routes.
RescaledProfile rescaled_profile(const SyzygyData& data,
                                 const SemigroupProfile& profile);

enum class Severity {
  kHard,  // a failure is a violation
  kSoft,  // a failure is a reported finding only
  kInfo,  // a flag, never a finding
};

struct BoundEntry {
  std::string_view id;
  bool pass = false;
  Severity severity = Severity::kHard;
  // Exact slack where the bound is rational (bound side minus value, or the
  // residual for identities); absent for irrational comparisons.
  std::optional<Rational> margin;

  bool is_finding() const { return !pass && severity != Severity::kInfo; }
  bool is_violation() const { return !pass && severity == Severity::kHard; }
};

class BoundReport {
 public:
  void add(BoundEntry entry) { entries_.push_back(std::move(entry)); }
  void add(std::string_view id, bool pass, std::optional<Rational> margin = {},
           Severity severity = Severity::kHard) {
    entries_.push_back({id, pass, severity, std::move(margin)});
  }
  void append(BoundReport&& other) {
    entries_.insert(entries_.end(),
                    std::make_move_iterator(other.entries_.begin()),
                    std::make_move_iterator(other.entries_.end()));
  }
  void append(const BoundReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(),
                    other.entries_.end());
  }
  void reserve(std::size_t n) { entries_.reserve(n); }

  const std::vector<BoundEntry>& entries() const { return entries_; }
  const BoundEntry* find(std::string_view id) const;
  bool passed(std::string_view id) const;
  bool all_pass() const;  // no violations (soft findings allowed)
  bool has_findings() const;

 private:
  std::vector<BoundEntry> entries_;
};

// g3^2 > 3 pi3 and the strengthened g3^2 >= 3 (pi3 + 1), integers only.
BoundReport davison_check(const SemigroupProfile& profile,
                          const SyzygyData& data);

// 1/2 <= h0 < 5/9, with h0 = 1/2 exactly when symmetric.
BoundReport h0_bounds_check(const RescaledProfile& rp);

// (u - 2h0)^2 <= Q(u,v) = (u - 1 + v)^3 / (27 v^2), and the one-sided
// h0 >= Phi(u,v) = (u - sqrt(Q)) / 2.
BoundReport q_inequality_check(const RescaledProfile& rp);
Rational q_function(const Rational& u, const Rational& v);
Surd phi_function(const Rational& u, const Rational& v);

// 12 h1 = 2u(2h0 - 1) + 2 - v and 12 h2 = (2h0 - 1)u(u - 1) + 2h0(1 - v).
// Needs h_2.
BoundReport h1_h2_identities(const RescaledProfile& rp);

// Delta_1 factorization, Delta_2 = u Delta_1, the quartic relation and the
// simplified 10 h3 formula. Needs h_3.
BoundReport h3_relation(const RescaledProfile& rp);

// 5/36 < h1 < 11/54, 1/18 < h2 < 1/9 (hard) and the decimal window
// 0.02443 < h3 < 0.07515 (soft). Windows beyond rp.r_max() are skipped.
BoundReport hr_window_checks(const RescaledProfile& rp);

// Complete-intersection closed forms of h_1..h_6 as polynomials in v and
// their windows. Throws kNotSymmetric for non-symmetric input. Checks only
// the orders present in rp.
BoundReport symmetric_formulas_check(const RescaledProfile& rp);
Rational symmetric_h(int r, const Rational& v);

enum class WilfRoute {
  kSymmetric,     // w3 = 1/2
  kLemmaD1Eq3,    // 3c3/2 <= 3G0 < 2c3 + 1
  kSufficientE3,  // w3 < 5/9 + e3/9 with e3 <= 1
  kDirect,        // e3 > 1: certified by the exact w3 itself
};

std::string_view route_name(WilfRoute route);

struct WilfVerdict {
  bool holds = false;  // w3 <= 2/3
  Rational margin;     // 2/3 - w3
  WilfRoute route = WilfRoute::kDirect;
  BoundReport report;
};

// True for <3, 3k+1, 3k+2>, the triples attaining w3 = 2/3.
bool in_wilf_equality_family(const GeneratorTriple& triple);

WilfVerdict wilf_check(const SemigroupProfile& profile,
                       const RescaledProfile& rp);

struct RhoScreen {
  bool rho_below = false;      // 3 sigma1^2 < 4 pi3, i.e. rho3 < 2/sqrt(3)
  bool rho_above = false;      // 3 sigma1^2 > 4 pi3
  bool product_exceeds_c = false;  // d2 d3 > C(d1)
  bool rule_pass = false;      // d1 = 4: d2d3 > 167; d1 = 5: > 73; d1 >= 6
  Surd rho3;
  Surd c_d1;
};

// C(d1) = (3/4) (d1 / (sqrt(d1) - sqrt(3)))^2 as an exact surd; d1 >= 4.
Surd c_threshold(std::int64_t d1);
// d2 d3 > C(d1) decided on integers.
bool product_exceeds_c(std::int64_t d1, const BigInt& product);

RhoScreen rho_screen(const GeneratorTriple& triple);

// The symmetric windows for h0..h3 lie inside the non-symmetric ones.
BoundReport window_nesting_check();

}  // namespace sg3

#endif  // SG3_RESCALED_HPP_
