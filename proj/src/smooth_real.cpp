#include <nielsen/smooth_real.hpp>

#include <nielsen/arith.hpp>
#include <nielsen/errors.hpp>

#include <algorithm>
#include <sstream>

namespace nielsen {

const char* to_string(RestrictionCase c) {
  switch (c) {
    case RestrictionCase::unrestricted: return "unrestricted";
    case RestrictionCase::m_eq_2s: return "m=2s";
    case RestrictionCase::m_eq_2s_plus_1: return "m=2s+1";
    case RestrictionCase::m_eq_2s_plus_2: return "m=2s+2";
  }
  return "?";
}

namespace {

void require_dimension(int m) {
  if (m < 3) throw InvalidInput("dimension must be >= 3, got " + std::to_string(m));
}

// Lexicographic s-combinations of `pool`, s = 0..max_s.
bool visit_combinations(const std::vector<std::uint64_t>& pool, unsigned max_s,
                        const std::function<bool(const CandidateDSet&)>& visit) {
  for (unsigned s = 0; s <= max_s && s <= pool.size(); ++s) {
    std::vector<std::size_t> idx(s);
    for (unsigned i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      CandidateDSet c;
      c.s = s;
      for (auto i : idx) c.d_set.insert(pool[i]);
      if (!visit(c)) return false;
      // advance
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && idx[i] == pool.size() - s + static_cast<unsigned>(i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (unsigned j = static_cast<unsigned>(i) + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

bool covered(const std::set<std::uint64_t>& support,
             const std::set<std::uint64_t>& d_set, bool with_two) {
  return std::all_of(support.begin(), support.end(), [&](std::uint64_t x) {
    return in_lcm_closure(x, d_set, with_two);
  });
}

}  // namespace

std::uint64_t max_distinct_values(int m) {
  require_dimension(m);
  return std::uint64_t{1} << ((m + 1) / 2);
}

std::vector<std::uint64_t> candidate_d_values(const std::set<std::uint64_t>& support) {
  std::vector<std::uint64_t> out;
  for (auto d : divisors(lcm_of(support)))
    if (d >= 3) out.push_back(d);
  return out;
}

void for_each_candidate_d_set(const std::set<std::uint64_t>& support, int m,
                              const std::function<bool(const CandidateDSet&)>& visit) {
  if (m < 0) return;
  visit_combinations(candidate_d_values(support), static_cast<unsigned>(m / 2), visit);
}

std::vector<CandidateDSet> enumerate_candidate_d_sets(
    const std::set<std::uint64_t>& support, int m, std::size_t limit) {
  std::vector<CandidateDSet> out;
  for_each_candidate_d_set(support, m, [&](const CandidateDSet& c) {
    if (out.size() >= limit) return false;
    out.push_back(c);
    return true;
  });
  return out;
}

std::optional<RealizabilityWitness> accept_candidate(
    const std::set<std::uint64_t>& support, const BigInt& alpha1,
    const BigInt& alpha2, const std::set<std::uint64_t>& d_set, int m) {
  const auto s = static_cast<unsigned>(d_set.size());
  if (2 * static_cast<long>(s) > m) return std::nullopt;
  for (auto d : d_set)
    if (d < 3) return std::nullopt;
  if (!covered(support, d_set, true)) return std::nullopt;

  RealizabilityWitness w;
  w.s = s;
  w.d_set = d_set;
  const bool plain = covered(support, d_set, false);
  const bool small_alpha1 = abs(alpha1) <= 1;
  const long slack = m - 2 * static_cast<long>(s);
  if (slack >= 3) {
    w.restriction_case = RestrictionCase::unrestricted;
    return w;
  }
  if (slack == 0) {
    w.restriction_case = RestrictionCase::m_eq_2s;
    if (alpha1 == 1 && plain) {
      w.used_plain_lcm = true;
      return w;
    }
    return std::nullopt;
  }
  if (slack == 1) {
    w.restriction_case = RestrictionCase::m_eq_2s_plus_1;
    if (small_alpha1 && plain) {
      w.used_plain_lcm = true;
      return w;
    }
    if (alpha1 == 1 && (alpha2 == 0 || alpha2 == 1)) return w;
    return std::nullopt;
  }
  w.restriction_case = RestrictionCase::m_eq_2s_plus_2;
  if (small_alpha1) return w;
  if (plain) {
    w.used_plain_lcm = true;
    return w;
  }
  return std::nullopt;
}

RealizabilityVerdict decide_sequence_realizable(const DivisorSequence& coeffs, int m) {
  require_dimension(m);
  if (coeffs.kind() != SequenceKind::coefficients)
    throw InvalidInput("realizability is decided on expansion coefficients");

  const auto support = coeffs.support();
  const BigInt alpha1 = coeffs.at(1);
  // For odd horizons a_2 is unconstrained by the finite sequence; 0 is
  // admissible in every clause.
  const BigInt alpha2 = coeffs.horizon() % 2 == 0 ? coeffs.at(2) : BigInt(0);

  // A d dividing no support element only enlarges s, so the first witness
  // in candidate order never contains one. Search over the pruned pool.
  std::vector<std::uint64_t> pool;
  for (auto d : candidate_d_values(support))
    if (std::any_of(support.begin(), support.end(),
                    [d](std::uint64_t x) { return x % d == 0; }))
      pool.push_back(d);

  RealizabilityVerdict verdict;
  const std::set<std::uint64_t> whole(pool.begin(), pool.end());
  if (!covered(support, whole, true)) {
    verdict.failure_reason =
        "support is not contained in LCM_2 of any set of integers >= 3";
    return verdict;
  }

  std::optional<unsigned> min_cover_s;
  visit_combinations(pool, static_cast<unsigned>(m / 2), [&](const CandidateDSet& c) {
    if (!min_cover_s && covered(support, c.d_set, true)) min_cover_s = c.s;
    if (auto w = accept_candidate(support, alpha1, alpha2, c.d_set, m)) {
      verdict.realizable = true;
      verdict.witness = std::move(w);
      return false;
    }
    return true;
  });
  if (verdict.realizable) return verdict;

  std::ostringstream why;
  if (!min_cover_s) {
    why << "covering the support needs more than floor(m/2) = " << m / 2
        << " values d_i";
  } else if (abs(alpha1) >= 2) {
    why << "|alpha_1| >= 2 implies m >= 2s+3 or (m = 2s+2 and LCM); "
        << "smallest covering s = " << *min_cover_s << ", m = " << m;
  } else if (alpha1 == 0) {
    why << "alpha_1 = 0 implies m >= 2s+2 or (m >= 2s+1 and LCM); "
        << "smallest covering s = " << *min_cover_s << ", m = " << m;
  } else {
    why << "no covering d-set satisfies the restriction for m <= 2s+2; "
        << "smallest covering s = " << *min_cover_s << ", m = " << m;
  }
  verdict.failure_reason = why.str();
  return verdict;
}

}  // namespace nielsen
