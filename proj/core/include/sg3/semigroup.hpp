#ifndef SG3_SEMIGROUP_HPP_
#define SG3_SEMIGROUP_HPP_

// Three-generated numerical semigroups: validated generator triples and the
// combinatorial profile (gaps, Frobenius number, genera, symmetry, type).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sg3/exact.hpp"

namespace sg3 {

inline constexpr std::int64_t kDefaultSieveCap = 100'000'000;

// Minimal generating triple d1 < d2 < d3. Only validate_triple() builds one.
class GeneratorTriple {
 public:
  std::int64_t d1() const { return d_[0]; }
  std::int64_t d2() const { return d_[1]; }
  std::int64_t d3() const { return d_[2]; }
  const std::array<std::int64_t, 3>& generators() const { return d_; }

  // d1^k + d2^k + d3^k
  BigInt sigma(unsigned k) const;
  std::int64_t sigma1() const { return d_[0] + d_[1] + d_[2]; }
  // d1·d2·d3
  BigInt pi3() const;
  // (sigma_k - 1) / 2^k
  Rational delta(unsigned k) const;

  std::string to_string() const;  // "<d1,d2,d3>"

  friend bool operator==(const GeneratorTriple&,
                         const GeneratorTriple&) = default;
  friend auto operator<=>(const GeneratorTriple&,
                          const GeneratorTriple&) = default;

 private:
  friend GeneratorTriple validate_triple(std::int64_t, std::int64_t,
                                         std::int64_t);
  explicit GeneratorTriple(std::array<std::int64_t, 3> d) : d_(d) {}
  std::array<std::int64_t, 3> d_;
};

// Throws sg3::Error with kNotSorted, kNonCoprime, kD3TooLarge or kNotMinimal,
// checked in that order.
GeneratorTriple validate_triple(std::int64_t d1, std::int64_t d2,
                                std::int64_t d3);

// True if `target` is a non-negative integer combination of a and b.
bool representable(std::int64_t target, std::int64_t a, std::int64_t b);

// Apery set with respect to d1: entry r is the least member congruent to r.
std::vector<std::int64_t> apery_set(const GeneratorTriple& triple);

// Membership over [0, limit]; limit = max(d1·d2, F3 + 1).
struct MembershipTable {
  std::vector<std::uint8_t> member;
  std::int64_t frobenius = -1;

  std::int64_t limit() const {
    return static_cast<std::int64_t>(member.size()) - 1;
  }
  bool contains(std::int64_t s) const {
    if (s < 0) return false;
    if (s > frobenius) return true;
    return member[static_cast<std::size_t>(s)] != 0;
  }
};

// Throws kResourceLimit when the table would exceed sieve_cap entries.
MembershipTable membership_sieve(const GeneratorTriple& triple,
                                 std::int64_t sieve_cap = kDefaultSieveCap);

struct SemigroupProfile {
  GeneratorTriple triple;
  std::vector<std::int64_t> apery;  // Apery set w.r.t. d1, indexed by residue
  std::int64_t frobenius = -1;
  std::int64_t conductor = 0;
  std::int64_t genus = 0;
  std::vector<BigInt> higher_genera;  // G_0..G_r_max
  bool is_symmetric = false;
  std::vector<std::int64_t> pseudo_frobenius;  // sorted
  std::int64_t type = 0;

  // s is a member iff s >= apery[s mod d1].
  bool contains(std::int64_t s) const;
  std::vector<std::int64_t> gaps() const;  // sorted, genus entries
  int r_max() const { return static_cast<int>(higher_genera.size()) - 1; }
};

// Same sieve_cap contract as membership_sieve. Symmetry is decided by
// F3 + 1 = 2 G0 and the pseudo-Frobenius numbers by maximality in the Apery
// set, so neither needs a pass over the table.
SemigroupProfile profile(const GeneratorTriple& triple, int r_max = 2,
                         std::int64_t sieve_cap = kDefaultSieveCap);

}  // namespace sg3

#endif  // SG3_SEMIGROUP_HPP_
