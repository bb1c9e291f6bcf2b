#ifndef SG3_EXACT_HPP_
#define SG3_EXACT_HPP_

// Exact integer and rational arithmetic used throughout the library, plus
// the presentation helpers that turn exact values into fixed-point decimals.
//
// Every verdict in sg3 is decided on these types. Decimals are produced only
// for display, always by exact rounding (half away from zero).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sg3 {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt to_big(std::int64_t v) {
  BigInt out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
  return out;
}

BigInt to_big(unsigned __int128 v);

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// b^e for a non-negative exponent.
BigInt pow(const BigInt& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

// n! as a big integer.
BigInt factorial(unsigned long n);

// "num/den" (always with a denominator, "3/1" for integers).
std::string fraction_string(const Rational& q);

// Inverse of fraction_string; also accepts a bare integer.
Rational parse_fraction(std::string_view text);

// Parses a plain decimal literal ("0.02443", "-1.5", "36") into the exact
// rational it denotes.
Rational parse_decimal(std::string_view text);

// Round half away from zero to `places` fractional digits.
std::string to_decimal(const Rational& q, int places = 5);

// Number of the form a + sign·sqrt(radicand) with rational a and radicand >= 0.
// Used for quantities that are irrational in general (rho3, C(d1), Phi(u,v));
// comparisons and display rounding are exact.
struct Surd {
  Rational a;
  int sign = 1;
  Rational radicand;

  static Surd sqrt_of(const Rational& r) { return Surd{Rational(0), 1, r}; }

  // -1, 0, +1 as this value is less than, equal to, greater than q.
  int compare(const Rational& q) const;
  std::string to_decimal(int places = 5) const;
  double approx() const;
};

// Floor of the non-negative rational q.
BigInt floor_of(const Rational& q);

}  // namespace sg3

#endif  // SG3_EXACT_HPP_
