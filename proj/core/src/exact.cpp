#include "sg3/exact.hpp"

#include <climits>
#include <cmath>
#include <stdexcept>

namespace sg3 {

BigInt to_big(unsigned __int128 v) {
  const auto lo = static_cast<std::uint64_t>(v);
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  BigInt out;
  if (hi == 0 && lo <= ULONG_MAX) {
    mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(lo));
    return out;
  }
  const std::uint64_t words[2] = {lo, hi};  // least significant first
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  return out;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
  return Rational(pow(BigInt(base.get_num()), exponent),
                  pow(BigInt(base.get_den()), exponent));
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num, den(1);
  if (num.set_str(std::string(text.substr(0, slash)), 10) != 0) {
    throw std::invalid_argument("bad fraction: " + std::string(text));
  }
  if (slash != std::string_view::npos &&
      den.set_str(std::string(text.substr(slash + 1)), 10) != 0) {
    throw std::invalid_argument("bad fraction: " + std::string(text));
  }
  if (den == 0) throw std::invalid_argument("zero denominator");
  return make_rational(num, den);
}

Rational parse_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  std::string digits(text.substr(0, dot));
  std::size_t frac = 0;
  if (dot != std::string_view::npos) {
    frac = text.size() - dot - 1;
    digits += text.substr(dot + 1);
  }
  BigInt num;
  if (digits.empty() || num.set_str(digits, 10) != 0) {
    throw std::invalid_argument("bad decimal: " + std::string(text));
  }
  Rational q = make_rational(num, pow(BigInt(10), frac));
  return negative ? Rational(-q) : q;
}

BigInt floor_of(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

namespace {

std::string format_scaled(const BigInt& scaled, bool negative, int places) {
  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(),
                    '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && scaled != 0) digits.insert(0, "-");
  return digits;
}

}  // namespace

std::string to_decimal(const Rational& q, int places) {
  const bool negative = sgn(q) < 0;
  const Rational scaled = abs(q) * Rational(pow(BigInt(10), places)) +
                          Rational(1, 2);
  return format_scaled(floor_of(scaled), negative, places);
}

int Surd::compare(const Rational& q) const {
  // q vs a + sign*sqrt(r)  <=>  d = q - a vs sign*sqrt(r)
  const Rational d = q - a;
  const int ds = sgn(d);
  const int rs = sgn(radicand);
  if (rs == 0) return -ds;
  const Rational d2 = d * d;
  const int sq = cmp(d2, radicand);
  if (sign > 0) {
    if (ds <= 0) return 1;  // d <= 0 < sqrt(r)
    return -sq;
  }
  if (ds >= 0) return -1;  // d >= 0 > -sqrt(r)
  return sq;               // both negative: d < -sqrt(r) iff d^2 > r
}

double Surd::approx() const {
  return a.get_d() + sign * std::sqrt(radicand.get_d());
}

std::string Surd::to_decimal(int places) const {
  const int s = compare(Rational(0));
  Surd mag = *this;
  if (s < 0) {
    mag.a = -a;
    mag.sign = -sign;
  }
  // Largest k with (k - 1/2) / 10^p <= |value|.
  const BigInt scale = pow(BigInt(10), places);
  const Rational scale_q(scale);
  const Rational half(1, 2);
  BigInt k(static_cast<long>(std::llround(std::fabs(approx()) *
                                          std::pow(10.0, places))));
  if (k < 0) k = 0;
  auto below = [&](const BigInt& kk) {  // (kk - 1/2)/10^p <= |value|
    return mag.compare((Rational(kk) - half) / scale_q) >= 0;
  };
  while (!below(k)) --k;
  while (below(k + 1)) ++k;
  return format_scaled(k, s < 0, places);
}

}  // namespace sg3
