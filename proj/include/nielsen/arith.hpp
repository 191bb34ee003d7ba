#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace nielsen {

class IntPolynomial;

/// Ascending list of the positive divisors of n. Requires n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Distinct prime factors of n in ascending order (empty for n = 1).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// True when n = q^a for a prime q and a >= 1.
bool is_prime_power(std::uint64_t n);

int moebius(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Throws InvalidInput when the result does not fit in 64 bits.
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// lcm over a range; the empty lcm is 1.
template <typename Range>
std::uint64_t lcm_of(const Range& values) {
  std::uint64_t acc = 1;
  for (auto v : values) acc = lcm(acc, static_cast<std::uint64_t>(v));
  return acc;
}

/// LCM(base) = { lcm(B) : B subset of base }, or LCM_2(base) = LCM(base + {2})
/// when augmented. The empty subset contributes 1.
struct LcmClosure {
  std::set<std::uint64_t> base;
  bool augmented = false;
  std::set<std::uint64_t> members;

  bool contains(std::uint64_t x) const { return members.count(x) != 0; }
};

LcmClosure lcm_closure(const std::set<std::uint64_t>& base,
                       bool augment_with_two);

/// Membership test for LCM(base) / LCM_2(base) without building the closure:
/// x is an lcm of a subset iff the lcm of all members dividing x equals x.
bool in_lcm_closure(std::uint64_t x, const std::set<std::uint64_t>& base,
                    bool augment_with_two);

/// The d-th cyclotomic polynomial, by exact division of x^d - 1.
IntPolynomial cyclotomic(std::uint64_t d);

}  // namespace nielsen
