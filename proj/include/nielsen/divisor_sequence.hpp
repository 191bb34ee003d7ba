#pragma once

#include <nielsen/bigint.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace nielsen {

enum class SequenceKind { values, coefficients };

const char* to_string(SequenceKind kind);

/// Integer function on the divisors of a horizon n. With kind `values` it
/// holds A_k (indices, Lefschetz numbers); with kind `coefficients` it holds
/// the a_k of the periodic expansion sum_k a_k reg_k.
class DivisorSequence {
 public:
  /// All-zero sequence.
  DivisorSequence(std::uint64_t horizon, SequenceKind kind);
  /// Throws InvalidInput unless the key set is exactly divisors(horizon).
  DivisorSequence(std::uint64_t horizon, SequenceKind kind,
                  std::map<std::uint64_t, BigInt> values);

  std::uint64_t horizon() const { return horizon_; }
  SequenceKind kind() const { return kind_; }
  const std::map<std::uint64_t, BigInt>& values() const { return values_; }

  /// Throws InvalidInput when k does not divide the horizon.
  const BigInt& at(std::uint64_t k) const;
  void set(std::uint64_t k, BigInt v);

  /// Divisors k with a nonzero entry.
  std::set<std::uint64_t> support() const;

  friend DivisorSequence operator+(const DivisorSequence& a,
                                   const DivisorSequence& b);
  friend bool operator==(const DivisorSequence& a, const DivisorSequence& b) {
    return a.horizon_ == b.horizon_ && a.kind_ == b.kind_ &&
           a.values_ == b.values_;
  }

 private:
  std::uint64_t horizon_;
  SequenceKind kind_;
  std::map<std::uint64_t, BigInt> values_;
};

// --- periodic expansion ----------------------------------------------------

/// reg_k(n) = k if k | n, else 0.
std::uint64_t reg(std::uint64_t k, std::uint64_t n);

/// Result of Moebius-inverting a value sequence. Coefficients are exact
/// rationals; a coefficient that is not an integer signals a failed Dold
/// congruence at that divisor.
struct Expansion {
  std::uint64_t horizon = 1;
  std::map<std::uint64_t, Rational> coefficients;
  std::vector<std::uint64_t> non_integral;

  bool integral() const { return non_integral.empty(); }
  /// The coefficients as a sequence; throws ModelInconsistency when some
  /// coefficient is not an integer.
  DivisorSequence as_sequence() const;
};

/// a_k = (1/k) sum_{l|k} mu(k/l) A_l for every k | horizon.
Expansion expand(const DivisorSequence& seq);

/// sum_{l | horizon} a_l reg_l(k). Throws InvalidInput unless k | horizon.
BigInt evaluate(const DivisorSequence& coeffs, std::uint64_t k);

/// The Dold congruences sum_{k|n'} mu(n'/k) A_k = 0 (mod n') for every
/// n' | horizon. Checked directly by modular reduction.
bool check_dold(const DivisorSequence& seq);

}  // namespace nielsen
