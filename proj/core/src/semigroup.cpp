#include "sg3/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sg3/error.hpp"

namespace sg3 {

namespace {

constexpr std::int64_t kMaxGenerator = std::int64_t{1} << 31;
constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();

}  // namespace

BigInt GeneratorTriple::sigma(unsigned k) const {
  if (k <= 3) {  // generators are below 2^31, so d^3 sums fit in 128 bits
    unsigned __int128 sum = 0;
    for (auto d : d_) {
      unsigned __int128 p = 1;
      for (unsigned i = 0; i < k; ++i) p *= static_cast<std::uint64_t>(d);
      sum += p;
    }
    return to_big(sum);
  }
  BigInt out;
  for (auto d : d_) out += pow(to_big(d), k);
  return out;
}

BigInt GeneratorTriple::pi3() const {
  return to_big(d_[0]) * to_big(d_[1]) * to_big(d_[2]);
}

Rational GeneratorTriple::delta(unsigned k) const {
  return make_rational(sigma(k) - 1, pow(BigInt(2), k));
}

std::string GeneratorTriple::to_string() const {
  return "<" + std::to_string(d_[0]) + "," + std::to_string(d_[1]) + "," +
         std::to_string(d_[2]) + ">";
}

bool representable(std::int64_t target, std::int64_t a, std::int64_t b) {
  for (std::int64_t rest = target; rest >= 0; rest -= a) {
    if (rest % b == 0) return true;
  }
  return false;
}

GeneratorTriple validate_triple(std::int64_t d1, std::int64_t d2,
                                std::int64_t d3) {
  if (d1 < 3 || !(d1 < d2 && d2 < d3)) {
    throw Error(ErrorKind::kNotSorted,
                "need 3 <= d1 < d2 < d3, got (" + std::to_string(d1) + "," +
                    std::to_string(d2) + "," + std::to_string(d3) + ")");
  }
  if (d3 >= kMaxGenerator) {
    throw Error(ErrorKind::kResourceLimit, "generators must be below 2^31");
  }
  if (std::gcd(std::gcd(d1, d2), d3) != 1) {
    throw Error(ErrorKind::kNonCoprime,
                "gcd(d1,d2,d3) = " +
                    std::to_string(std::gcd(std::gcd(d1, d2), d3)));
  }
  const std::int64_t cap = d1 * d2 - d1 - d2;
  if (d3 > cap) {
    throw Error(ErrorKind::kD3TooLarge,
                "d3 = " + std::to_string(d3) + " exceeds d1*d2 - d1 - d2 = " +
                    std::to_string(cap));
  }
  if (d2 % d1 == 0) {
    throw Error(ErrorKind::kNotMinimal,
                std::to_string(d2) + " is a multiple of " + std::to_string(d1));
  }
  if (representable(d3, d1, d2)) {
    throw Error(ErrorKind::kNotMinimal,
                std::to_string(d3) + " is a combination of " +
                    std::to_string(d1) + " and " + std::to_string(d2));
  }
  return GeneratorTriple({d1, d2, d3});
}

// Round-robin shortest paths over residues mod d1: each generator b splits
// the residues into gcd(d1, b) cycles; one lap starting from the cheapest
// residue of a cycle settles it.
std::vector<std::int64_t> apery_set(const GeneratorTriple& triple) {
  const std::int64_t a = triple.d1();
  std::vector<std::int64_t> w(static_cast<std::size_t>(a), kUnreached);
  w[0] = 0;
  for (std::int64_t b : {triple.d2(), triple.d3()}) {
    const std::int64_t g = std::gcd(a, b);
    const std::int64_t step = b % a;
    for (std::int64_t p = 0; p < g; ++p) {
      std::int64_t start = -1;
      for (std::int64_t q = p; q < a; q += g) {
        if (w[q] != kUnreached && (start < 0 || w[q] < w[start])) start = q;
      }
      if (start < 0) continue;
      std::int64_t q = start;
      for (std::int64_t i = 1; i < a / g; ++i) {
        std::int64_t next = q + step;
        if (next >= a) next -= a;
        w[next] = std::min(w[next], w[q] + b);
        q = next;
      }
    }
  }
  return w;
}

namespace {

std::int64_t checked_limit(const GeneratorTriple& triple, std::int64_t frobenius,
                           std::int64_t sieve_cap) {
  const std::int64_t limit = std::max(triple.d1() * triple.d2(), frobenius + 1);
  if (limit + 1 > sieve_cap) {
    throw Error(ErrorKind::kResourceLimit,
                "membership table of " + std::to_string(limit + 1) +
                    " entries exceeds sieve cap " + std::to_string(sieve_cap));
  }
  return limit;
}

std::int64_t apery_frobenius(const std::vector<std::int64_t>& apery) {
  return *std::max_element(apery.begin(), apery.end()) -
         static_cast<std::int64_t>(apery.size());
}

}  // namespace

MembershipTable membership_sieve(const GeneratorTriple& triple,
                                 std::int64_t sieve_cap) {
  const auto apery = apery_set(triple);
  const std::int64_t a = triple.d1();
  const std::int64_t frobenius = apery_frobenius(apery);
  const std::int64_t limit = checked_limit(triple, frobenius, sieve_cap);
  MembershipTable table;
  table.frobenius = frobenius;
  table.member.resize(static_cast<std::size_t>(limit) + 1);
  std::int64_t residue = 0;
  for (std::int64_t s = 0; s <= limit; ++s) {
    table.member[static_cast<std::size_t>(s)] =
        s >= apery[static_cast<std::size_t>(residue)] ? 1 : 0;
    if (++residue == a) residue = 0;
  }
  return table;
}

bool SemigroupProfile::contains(std::int64_t s) const {
  if (s < 0) return false;
  const auto a = static_cast<std::int64_t>(apery.size());
  return s >= apery[static_cast<std::size_t>(s % a)];
}

std::vector<std::int64_t> SemigroupProfile::gaps() const {
  // Branch-free compaction: every s is written, the cursor only advances on
  // gaps. One spare slot absorbs the trailing write.
  std::vector<std::int64_t> out(static_cast<std::size_t>(genus) + 1);
  const auto a = static_cast<std::int64_t>(apery.size());
  std::size_t n = 0;
  std::int64_t residue = 1 % a;
  for (std::int64_t s = 1; s <= frobenius; ++s) {
    out[n] = s;
    n += s < apery[static_cast<std::size_t>(residue)] ? 1 : 0;
    if (++residue == a) residue = 0;
  }
  out.resize(n);
  return out;
}

namespace {

// G_r = sum over gaps of s^r. The gaps of residue class w are w - k a for
// k = 1..m with m = floor(w / a), so G_0..G_2 have closed forms per class:
//   m,  m w - a m(m+1)/2,  m w^2 - a w m(m+1) + a^2 m(m+1)(2m+1)/6.
// Higher orders sum over the explicit gap list, in 128 bits while the total
// is guaranteed to fit.
std::vector<BigInt> gap_power_sums(const SemigroupProfile& p, int r_max) {
  std::vector<BigInt> out(static_cast<std::size_t>(r_max) + 1);
  using Wide = __int128;
  const auto a = static_cast<Wide>(p.apery.size());
  Wide sums[3] = {0, 0, 0};
  for (auto w64 : p.apery) {
    const Wide w = w64;
    const Wide m = w / a;
    const Wide t1 = m * (m + 1) / 2;
    const Wide t2 = m * (m + 1) * (2 * m + 1) / 6;
    sums[0] += m;
    sums[1] += m * w - a * t1;
    sums[2] += m * w * w - 2 * a * w * t1 + a * a * t2;
  }
  for (int r = 0; r <= std::min(r_max, 2); ++r) {
    out[static_cast<std::size_t>(r)] =
        to_big(static_cast<unsigned __int128>(sums[r]));
  }
  if (r_max <= 2 || p.genus == 0) return out;

  const auto gaps = p.gaps();
  const double bits_per_power = std::log2(static_cast<double>(gaps.back()) + 1);
  const double count_bits = std::log2(static_cast<double>(gaps.size()) + 1);
  int fast = 2;
  while (fast < r_max && (fast + 1) * bits_per_power + count_bits < 120.0) {
    ++fast;
  }
  if (fast > 2) {
    std::vector<unsigned __int128> acc(static_cast<std::size_t>(fast) + 1, 0);
    for (std::int64_t s : gaps) {
      unsigned __int128 pw = 1;
      for (int r = 1; r <= fast; ++r) {
        pw *= static_cast<unsigned __int128>(s);
        acc[static_cast<std::size_t>(r)] += pw;
      }
    }
    for (int r = 3; r <= fast; ++r) {
      out[static_cast<std::size_t>(r)] = to_big(acc[static_cast<std::size_t>(r)]);
    }
  }
  for (int r = std::max(fast, 2) + 1; r <= r_max; ++r) {
    BigInt sum;
    for (std::int64_t s : gaps) sum += pow(to_big(s), static_cast<unsigned>(r));
    out[static_cast<std::size_t>(r)] = sum;
  }
  return out;
}

}  // namespace

SemigroupProfile profile(const GeneratorTriple& triple, int r_max,
                         std::int64_t sieve_cap) {
  if (r_max < 0) r_max = 0;
  const std::int64_t a = triple.d1();
  SemigroupProfile p{.triple = triple};
  p.apery = apery_set(triple);
  p.frobenius = apery_frobenius(p.apery);
  checked_limit(triple, p.frobenius, sieve_cap);
  p.conductor = p.frobenius + 1;
  std::int64_t genus = 0;
  for (auto w : p.apery) genus += w / a;
  p.genus = genus;
  p.higher_genera = gap_power_sums(p, r_max);
  p.is_symmetric = p.conductor == 2 * p.genus;

  // w - a is pseudo-Frobenius iff w is maximal in the Apery set, i.e. no
  // w + d (d = d2, d3) is itself an Apery element.
  for (std::size_t r = 1; r < p.apery.size(); ++r) {
    const std::int64_t w = p.apery[r];
    bool maximal = true;
    for (std::int64_t d : {triple.d2(), triple.d3()}) {
      if (p.apery[static_cast<std::size_t>((w + d) % a)] == w + d) {
        maximal = false;
      }
    }
    if (maximal) p.pseudo_frobenius.push_back(w - a);
  }
  std::sort(p.pseudo_frobenius.begin(), p.pseudo_frobenius.end());
  p.type = static_cast<std::int64_t>(p.pseudo_frobenius.size());
  return p;
}

}  // namespace sg3
