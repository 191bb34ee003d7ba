#pragma once

#include <nielsen/model.hpp>
#include <nielsen/reid_graph.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace nielsen {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s);

struct ValidatorResult {
  std::string id;  // V1..V4
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

/// Structural consequences of the Lie-group assumptions, checked on a model:
///   V1  L(f) != 0 and all moduli <= 1: each prime q of |G| equals the
///       prime of some unity period d_i = q^b.
///   V2  L(f^k) != 0: i_{k, gcd(k,d)} is a bijection.
///   V3  irreducible essential vertices sit at levels dividing d.
///   V4  L(f^k) = L(f^{gcd(k,d)}).
/// V2-V4 presuppose all moduli <= 1 and are skipped otherwise. A V1 failure
/// marks a synthetic model that no Lie-group self-map produces.
struct ValidatorReport {
  std::uint64_t horizon = 1;
  std::uint64_t period_lcm = 1;
  std::vector<ValidatorResult> results;

  bool all_passed() const;
  const ValidatorResult& result(const std::string& id) const;
};

/// Works without building the graph (so inconsistent models can be
/// diagnosed); V3 uses essential <=> L(f^k) != 0.
ValidatorReport run_validators(const Model& model, std::uint64_t n);

/// Same checks, with V3 read off the graph's classification.
ValidatorReport run_validators(const ReidemeisterGraph& g);

}  // namespace nielsen
