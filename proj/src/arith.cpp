#include <nielsen/arith.hpp>

#include <nielsen/errors.hpp>
#include <nielsen/polynomial.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace nielsen {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw InvalidInput(std::string(what) + ": argument must be >= 1");
}

}  // namespace

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t i = 1; i <= n / i; ++i) {
    if (n % i != 0) continue;
    small.push_back(i);
    if (i != n / i) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  require_positive(n, "prime_factors");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p <= n / p; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_prime_power(std::uint64_t n) {
  return n >= 2 && prime_factors(n).size() == 1;
}

int moebius(std::uint64_t n) {
  require_positive(n, "moebius");
  int sign = 1;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
  require_positive(n, "euler_phi");
  std::uint64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t q = a / std::gcd(a, b);
  if (q > UINT64_MAX / b) throw InvalidInput("lcm overflows 64 bits");
  return q * b;
}

LcmClosure lcm_closure(const std::set<std::uint64_t>& base,
                       bool augment_with_two) {
  LcmClosure out;
  out.base = base;
  out.augmented = augment_with_two;
  std::set<std::uint64_t> gens = base;
  if (augment_with_two) gens.insert(2);
  // Grow the closure one generator at a time: lcm's of subsets of the
  // first i generators, then adjoin lcm(x, g_{i+1}) for each x.
  out.members.insert(1);
  for (auto g : gens) {
    std::vector<std::uint64_t> added;
    for (auto x : out.members) added.push_back(lcm(x, g));
    out.members.insert(added.begin(), added.end());
  }
  return out;
}

bool in_lcm_closure(std::uint64_t x, const std::set<std::uint64_t>& base,
                    bool augment_with_two) {
  if (x == 0) return false;
  std::uint64_t acc = 1;
  if (augment_with_two && x % 2 == 0) acc = 2;
  for (auto b : base)
    if (b != 0 && x % b == 0) acc = lcm(acc, b);
  return acc == x;
}

IntPolynomial cyclotomic(std::uint64_t d) {
  require_positive(d, "cyclotomic");
  static std::mutex mu;
  static std::map<std::uint64_t, IntPolynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPolynomial p = IntPolynomial::monomial(d) - IntPolynomial::constant(1);
  for (auto e : divisors(d)) {
    if (e == d) break;
    auto q = p.divide_exact(cyclotomic(e));
    if (!q) throw Error("cyclotomic: inexact division");  // unreachable
    p = std::move(*q);
  }
  std::lock_guard lock(mu);
  cache.emplace(d, p);
  return p;
}

}  // namespace nielsen
