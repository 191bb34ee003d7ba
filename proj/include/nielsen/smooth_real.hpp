#pragma once

#include <nielsen/divisor_sequence.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nielsen {

/// Which dimension restriction applied to an accepted witness. With
/// m >= 2s+3 there is none.
enum class RestrictionCase { unrestricted, m_eq_2s, m_eq_2s_plus_1, m_eq_2s_plus_2 };

const char* to_string(RestrictionCase c);

struct RealizabilityWitness {
  unsigned s = 0;
  std::set<std::uint64_t> d_set;
  RestrictionCase restriction_case = RestrictionCase::unrestricted;
  /// The accepting clause needed support within LCM(d_set) rather than
  /// LCM_2(d_set).
  bool used_plain_lcm = false;
};

struct RealizabilityVerdict {
  bool realizable = false;
  std::optional<RealizabilityWitness> witness;
  std::string failure_reason;
};

/// Number of distinct values a smoothly realizable index sequence can take
/// in dimension m: 2^floor((m+1)/2). Throws InvalidInput for m < 3.
std::uint64_t max_distinct_values(int m);

struct CandidateDSet {
  unsigned s = 0;
  std::set<std::uint64_t> d_set;
};

/// Divisors of lcm(support) that are >= 3, ascending.
std::vector<std::uint64_t> candidate_d_values(const std::set<std::uint64_t>& support);

/// Visits every d-set drawn from candidate_d_values(support) with
/// |d_set| = s <= floor(m/2), by increasing s and then lexicographically.
/// The visitor returns false to stop.
void for_each_candidate_d_set(const std::set<std::uint64_t>& support, int m,
                              const std::function<bool(const CandidateDSet&)>& visit);

/// Materialized form of for_each_candidate_d_set, truncated at `limit`.
std::vector<CandidateDSet> enumerate_candidate_d_sets(
    const std::set<std::uint64_t>& support, int m,
    std::size_t limit = static_cast<std::size_t>(-1));

/// Checks one candidate against the support and the dimension restrictions.
/// alpha1/alpha2 are the coefficients at 1 and 2 (zero when absent).
std::optional<RealizabilityWitness> accept_candidate(
    const std::set<std::uint64_t>& support, const BigInt& alpha1,
    const BigInt& alpha2, const std::set<std::uint64_t>& d_set, int m);

/// Smooth realizability of sum_k a_k reg_k in dimension m. Returns the first
/// witness in candidate order. Throws InvalidInput for m < 3 or a sequence
/// that is not of coefficient kind.
RealizabilityVerdict decide_sequence_realizable(const DivisorSequence& coeffs, int m);

}  // namespace nielsen
