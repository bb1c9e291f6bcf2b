#ifndef SG3_TESTS_ORACLE_HPP_
#define SG3_TESTS_ORACLE_HPP_

// Brute-force reference computations that share no code with the library:
// membership by dynamic programming and the Hilbert numerator by multiplying
// the truncated membership series out term by term.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

struct Semigroup {
  std::vector<std::uint8_t> member;  // [0, frobenius + d1]
  std::int64_t frobenius = -1;
  std::int64_t genus = 0;
};

// s is a member iff s - d is a member for some generator d. Stops once d1
// consecutive members are seen, since every later value then follows.
inline Semigroup semigroup(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
  Semigroup out;
  out.member.push_back(1);
  std::int64_t run = 1;
  for (std::int64_t s = 1; run < d1; ++s) {
    bool in = false;
    for (std::int64_t d : {d1, d2, d3}) {
      if (s >= d && out.member[static_cast<std::size_t>(s - d)]) in = true;
    }
    out.member.push_back(in ? 1 : 0);
    if (in) {
      ++run;
    } else {
      run = 0;
      out.frobenius = s;
      ++out.genus;
    }
  }
  return out;
}

// Numerator of the Hilbert series as exponent -> nonzero coefficient.
inline std::map<std::int64_t, std::int64_t> numerator(std::int64_t d1,
                                                      std::int64_t d2,
                                                      std::int64_t d3) {
  const auto sg = semigroup(d1, d2, d3);
  const std::int64_t top = sg.frobenius + d1 + d2 + d3 + 1;
  std::vector<std::int64_t> poly(static_cast<std::size_t>(top) + 1);
  for (std::int64_t s = 0; s <= top; ++s) {
    const bool in = s < static_cast<std::int64_t>(sg.member.size())
                        ? sg.member[static_cast<std::size_t>(s)] != 0
                        : true;
    poly[static_cast<std::size_t>(s)] = in ? 1 : 0;
  }
  for (std::int64_t d : {d1, d2, d3}) {
    std::vector<std::int64_t> next(poly.size(), 0);
    for (std::size_t e = 0; e < poly.size(); ++e) {
      next[e] += poly[e];
      if (e + static_cast<std::size_t>(d) < poly.size()) {
        next[e + static_cast<std::size_t>(d)] -= poly[e];
      }
    }
    poly.swap(next);
  }
  std::map<std::int64_t, std::int64_t> out;
  // Multiplying by 1 - t^d only looks backwards, so every coefficient up to
  // `top` is exact; top lies one past the expected degree.
  for (std::int64_t e = 0; e <= top; ++e) {
    if (poly[static_cast<std::size_t>(e)] != 0) {
      out[e] = poly[static_cast<std::size_t>(e)];
    }
  }
  return out;
}

// sum over gaps of s^r
inline mpz_class gap_power_sum(const Semigroup& sg, unsigned r) {
  mpz_class sum = 0;
  for (std::int64_t s = 1; s <= sg.frobenius; ++s) {
    if (!sg.member[static_cast<std::size_t>(s)]) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(s), r);
      sum += p;
    }
  }
  return sum;
}

}  // namespace oracle

#endif  // SG3_TESTS_ORACLE_HPP_
