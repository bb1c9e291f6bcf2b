#ifndef SG3_SYZYGY_HPP_
#define SG3_SYZYGY_HPP_

// Hilbert-series numerator of a three-generated semigroup, the syzygy degree
// multisets read off from it, their power sums, and the K_r coefficients
// tying power-sum differences to the higher genera.

#include <cstdint>
#include <vector>

#include "sg3/exact.hpp"
#include "sg3/semigroup.hpp"

namespace sg3 {

inline constexpr int kDefaultRMax = 9;

struct NumeratorTerm {
  std::int64_t exponent;
  std::int64_t coefficient;  // non-zero
  friend bool operator==(const NumeratorTerm&, const NumeratorTerm&) = default;
};

// N(t) = 1 - sum t^x + sum t^y, terms sorted by exponent.
struct HilbertNumerator {
  std::vector<NumeratorTerm> terms;

  std::int64_t degree() const {
    return terms.empty() ? -1 : terms.back().exponent;
  }
  std::int64_t value_at_one() const;
  std::int64_t coefficient(std::int64_t exponent) const;
};

// Numerator of the Hilbert series, i.e. the semigroup series times
// (1 - t^d1)(1 - t^d2)(1 - t^d3), built from the Apery set. Throws
// kNumeratorShape unless the result has degree g3 = F3 + sigma1 and the
// six-term (non-symmetric) or four-term (symmetric) shape.
HilbertNumerator hilbert_numerator(const SemigroupProfile& profile);

struct SyzygyData {
  std::vector<std::int64_t> x;  // 3 entries, sorted
  std::vector<std::int64_t> y;  // 2 entries, sorted; y.back() == g3
  std::int64_t g3 = 0;
  BigInt pi3;
  std::vector<BigInt> power_sums_x;  // X_0..X_r_max
  std::vector<BigInt> power_sums_y;  // Y_0..Y_r_max
  std::vector<Rational> k;           // backsolved K_0..K_{r_max-3}
  std::vector<Rational> k_direct;    // closed-form K_0..K_2 from the genera
  bool symmetric_padding = false;

  int r_max() const { return static_cast<int>(power_sums_x.size()) - 1; }
  const BigInt& X(int r) const { return power_sums_x[static_cast<std::size_t>(r)]; }
  const BigInt& Y(int r) const { return power_sums_y[static_cast<std::size_t>(r)]; }
  bool all_k_positive() const;
};

SyzygyData extract_syzygies(const HilbertNumerator& numerator,
                            const SemigroupProfile& profile,
                            int r_max = kDefaultRMax);

enum class KMode { kDirect, kBacksolved };

// Direct mode: closed forms in G_0..G_2 and delta_1, delta_2 (r <= 2, and the
// profile must carry G_r). Backsolved: (r!/(r+3)!)(Y_{r+3} - X_{r+3}) / pi3.
Rational k_coefficient(const SyzygyData& data, const SemigroupProfile& profile,
                       int r, KMode mode);

struct IdentityVerdict {
  int r = 0;
  Rational first_residual;   // Y1 - X1
  Rational second_residual;  // Y2 - X2 - 2 pi3
  Rational order_residual;   // Y_{r+3} - X_{r+3} - ((r+3)!/r!) K_r pi3
  Rational k;                // K_r used (direct for r <= 2)
  bool k_positive = false;

  bool ok() const {
    return first_residual == 0 && second_residual == 0 &&
           order_residual == 0 && k_positive;
  }
};

// Uses the direct K_r when available (r <= 2 and G_r present), so the
// residual compares two independent routes; otherwise the backsolved K_r.
IdentityVerdict verify_identity(const SyzygyData& data,
                                const SemigroupProfile& profile, int r);

}  // namespace sg3

#endif  // SG3_SYZYGY_HPP_
