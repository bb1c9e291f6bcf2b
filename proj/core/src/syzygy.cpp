#include "sg3/syzygy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sg3/error.hpp"

namespace sg3 {

std::int64_t HilbertNumerator::value_at_one() const {
  std::int64_t sum = 0;
  for (const auto& t : terms) sum += t.coefficient;
  return sum;
}

std::int64_t HilbertNumerator::coefficient(std::int64_t exponent) const {
  auto it = std::lower_bound(
      terms.begin(), terms.end(), exponent,
      [](const NumeratorTerm& t, std::int64_t e) { return t.exponent < e; });
  return (it != terms.end() && it->exponent == exponent) ? it->coefficient : 0;
}

namespace {

[[noreturn]] void shape_error(const SemigroupProfile& profile,
                              const std::string& why) {
  throw Error(ErrorKind::kNumeratorShape, profile.triple.to_string() + ": " + why);
}

void check_shape(const HilbertNumerator& num, const SemigroupProfile& profile,
                 std::int64_t g3) {
  if (num.terms.empty() || num.terms.front().exponent != 0 ||
      num.terms.front().coefficient != 1) {
    shape_error(profile, "constant term is not +1");
  }
  if (num.degree() != g3 || num.terms.back().coefficient <= 0) {
    shape_error(profile, "leading term is not +t^g3 with g3 = F3 + sigma1");
  }
  std::int64_t negative = 0;
  std::int64_t positive = 0;
  for (std::size_t i = 1; i < num.terms.size(); ++i) {
    const auto c = num.terms[i].coefficient;
    (c < 0 ? negative : positive) += c;
  }
  const bool six_term = negative == -3 && positive == 2;
  const bool four_term = negative == -2 && positive == 1;
  if (!six_term && !four_term) {
    shape_error(profile, "coefficient multiplicities " +
                             std::to_string(negative) + "/+" +
                             std::to_string(positive) +
                             " match neither -3/+2 nor -2/+1");
  }
  if (four_term != profile.is_symmetric) {
    shape_error(profile, "numerator shape disagrees with the symmetry test");
  }
}

// s^0..s^r_max summed over `values`.
std::vector<BigInt> power_sums(const std::vector<std::int64_t>& values,
                               int r_max) {
  std::vector<BigInt> out(static_cast<std::size_t>(r_max) + 1);
  std::int64_t largest = 0;
  for (auto v : values) largest = std::max(largest, v);
  const double bits = r_max * std::log2(static_cast<double>(largest) + 1) +
                      std::log2(static_cast<double>(values.size()) + 1);
  if (bits < 124.0) {
    std::vector<unsigned __int128> acc(out.size(), 0);
    for (auto v : values) {
      unsigned __int128 p = 1;
      for (std::size_t r = 0; r < acc.size(); ++r) {
        acc[r] += p;
        p *= static_cast<unsigned __int128>(v);
      }
    }
    for (std::size_t r = 0; r < acc.size(); ++r) out[r] = to_big(acc[r]);
    return out;
  }
  for (auto v : values) {
    BigInt p(1);
    const BigInt base = to_big(v);
    for (auto& sum : out) {
      sum += p;
      p *= base;
    }
  }
  return out;
}

}  // namespace

// The semigroup series is sum_{w in Ap} t^w / (1 - t^d1), so the numerator is
// (1 - t^d2)(1 - t^d3) sum_{w in Ap} t^w: 4 d1 terms before cancellation.
HilbertNumerator hilbert_numerator(const SemigroupProfile& profile) {
  const auto& t = profile.triple;
  const std::int64_t g3 = profile.frobenius + t.sigma1();
  std::vector<NumeratorTerm> raw;
  raw.reserve(4 * profile.apery.size());
  for (auto w : profile.apery) {
    raw.push_back({w, 1});
    raw.push_back({w + t.d2(), -1});
    raw.push_back({w + t.d3(), -1});
    raw.push_back({w + t.d2() + t.d3(), 1});
  }
  std::sort(raw.begin(), raw.end(),
            [](const NumeratorTerm& l, const NumeratorTerm& r) {
              return l.exponent < r.exponent;
            });
  HilbertNumerator num;
  for (std::size_t i = 0; i < raw.size();) {
    std::int64_t c = 0;
    std::size_t j = i;
    for (; j < raw.size() && raw[j].exponent == raw[i].exponent; ++j) {
      c += raw[j].coefficient;
    }
    if (c != 0) num.terms.push_back({raw[i].exponent, c});
    i = j;
  }
  check_shape(num, profile, g3);
  return num;
}

bool SyzygyData::all_k_positive() const {
  return std::all_of(k.begin(), k.end(),
                     [](const Rational& q) { return sgn(q) > 0; });
}

SyzygyData extract_syzygies(const HilbertNumerator& numerator,
                            const SemigroupProfile& profile, int r_max) {
  if (r_max < 3) {
    throw Error(ErrorKind::kUnsupportedR, "r_max must be at least 3");
  }
  SyzygyData data;
  for (std::size_t i = 1; i < numerator.terms.size(); ++i) {
    const auto& t = numerator.terms[i];
    auto& target = t.coefficient < 0 ? data.x : data.y;
    target.insert(target.end(), static_cast<std::size_t>(std::abs(t.coefficient)),
                  t.exponent);
  }
  if (data.x.size() == 2 && data.y.size() == 1) {
    data.x.insert(data.x.begin(), 0);
    data.y.insert(data.y.begin(), 0);
    data.symmetric_padding = true;
  }
  data.g3 = numerator.degree();
  data.pi3 = profile.triple.pi3();
  data.power_sums_x = power_sums(data.x, r_max);
  data.power_sums_y = power_sums(data.y, r_max);
  data.k.reserve(static_cast<std::size_t>(r_max) - 2);
  for (int r = 0; r + 3 <= r_max; ++r) {
    data.k.push_back(k_coefficient(data, profile, r, KMode::kBacksolved));
  }
  for (int r = 0; r <= std::min(2, profile.r_max()); ++r) {
    data.k_direct.push_back(k_coefficient(data, profile, r, KMode::kDirect));
  }
  return data;
}

Rational k_coefficient(const SyzygyData& data, const SemigroupProfile& profile,
                       int r, KMode mode) {
  if (r < 0) throw Error(ErrorKind::kUnsupportedR, "negative r");
  if (mode == KMode::kBacksolved) {
    if (r + 3 > data.r_max()) {
      throw Error(ErrorKind::kUnsupportedR,
                  "backsolved K_" + std::to_string(r) + " needs r_max >= " +
                      std::to_string(r + 3));
    }
    const BigInt diff = data.Y(r + 3) - data.X(r + 3);
    const BigInt den = BigInt((r + 1) * (r + 2) * (r + 3)) * data.pi3;
    return make_rational(diff, den);
  }
  if (r > 2) {
    throw Error(ErrorKind::kUnsupportedR,
                "closed form K_r is only available for r <= 2");
  }
  if (profile.r_max() < r) {
    throw Error(ErrorKind::kUnsupportedR,
                "profile lacks G_" + std::to_string(r));
  }
  // Closed forms over the common denominator 24, with delta_k = (sigma_k - 1)/2^k:
  //   K0 = G0 + delta_1
  //   K1 = G1 + sigma1 G0 / 2 + (3 delta_1^2 + delta_2) / 6
  //   K2 = G2 + sigma1 G1 + (3 sigma1^2 + sigma2) G0 / 12
  //        + delta_1 (delta_1^2 + delta_2) / 3
  const auto& triple = profile.triple;
  const auto& G = profile.higher_genera;
  const BigInt s1 = to_big(triple.sigma1());
  const BigInt s1m = s1 - 1;
  if (r == 0) return make_rational(2 * G[0] + s1m, BigInt(2));
  const BigInt s2 = triple.sigma(2);
  if (r == 1) {
    return make_rational(24 * G[1] + 12 * s1 * G[0] + 3 * s1m * s1m + s2 - 1,
                         BigInt(24));
  }
  return make_rational(24 * G[2] + 24 * s1 * G[1] + 2 * (3 * s1 * s1 + s2) * G[0] +
                           s1m * (s1m * s1m + s2 - 1),
                       BigInt(24));
}

IdentityVerdict verify_identity(const SyzygyData& data,
                                const SemigroupProfile& profile, int r) {
  IdentityVerdict v;
  v.r = r;
  v.first_residual = Rational(data.Y(1) - data.X(1));
  v.second_residual = Rational(data.Y(2) - data.X(2) - 2 * data.pi3);
  const auto idx = static_cast<std::size_t>(r);
  if (idx < data.k_direct.size()) {
    v.k = data.k_direct[idx];
  } else {
    const bool direct = r <= 2 && profile.r_max() >= r;
    v.k = k_coefficient(data, profile, r,
                        direct ? KMode::kDirect : KMode::kBacksolved);
  }
  v.k_positive = sgn(v.k) > 0;
  // lhs - f k pi3 over k's denominator, so only one canonicalization happens
  const BigInt lhs = data.Y(r + 3) - data.X(r + 3);
  const BigInt falling((r + 1) * (r + 2) * (r + 3));
  v.order_residual = make_rational(
      lhs * v.k.get_den() - falling * v.k.get_num() * data.pi3, v.k.get_den());
  return v;
}

}  // namespace sg3
