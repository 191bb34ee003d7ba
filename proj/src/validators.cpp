#include <nielsen/validators.hpp>

#include <nielsen/arith.hpp>
#include <nielsen/errors.hpp>
#include <nielsen/spectrum.hpp>

#include <algorithm>
#include <sstream>

namespace nielsen {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

bool ValidatorReport::all_passed() const {
  return std::none_of(results.begin(), results.end(),
                      [](const ValidatorResult& r) { return r.status == CheckStatus::fail; });
}

const ValidatorResult& ValidatorReport::result(const std::string& id) const {
  for (const auto& r : results)
    if (r.id == id) return r;
  throw InvalidInput("no validator " + id);
}

namespace {

bool is_power_of(std::uint64_t d, std::uint64_t q) {
  if (d < q) return false;
  while (d % q == 0) d /= q;
  return d == 1;
}

// levels k with an irreducible essential vertex
using IeorLevels = std::vector<std::uint64_t>;

ValidatorReport run(const Model& model, const DivisorSequence& lef, const IeorLevels& ieor) {
  const auto spec = classify_spectrum(model.matrix);
  const auto d = minimal_period_lcm(spec);
  const auto& grp = model.group;
  ValidatorReport rep;
  rep.horizon = lef.horizon();
  rep.period_lcm = d;
  const bool moduli = spec.all_moduli_le_one;
  const BigInt l1 = lef.at(1);

  {
    ValidatorResult v{"V1", "each prime of |pi_1| is the prime of a unity period", CheckStatus::pass, ""};
    if (l1 == 0) {
      v.detail = "vacuous: L(f) = 0";
    } else if (!moduli) {
      v.status = CheckStatus::skipped;
      v.detail = "an eigenvalue has modulus > 1";
    } else {
      std::ostringstream bad;
      for (auto q : grp.prime_support()) {
        const auto periods = spec.periods();
        if (std::none_of(periods.begin(), periods.end(),
                         [q](std::uint64_t di) { return is_power_of(di, q); }))
          bad << (bad.tellp() > 0 ? ", " : "") << q;
      }
      if (bad.tellp() > 0) {
        v.status = CheckStatus::fail;
        v.detail = "no unity period is a power of " + bad.str() +
                   "; model does not arise from a Lie-group self-map";
      }
    }
    rep.results.push_back(std::move(v));
  }

  auto skipped = [&](const char* id, const char* name) {
    rep.results.push_back({id, name, CheckStatus::skipped, "an eigenvalue has modulus > 1"});
  };

  if (!moduli) {
    skipped("V2", "i_{k,gcd(k,d)} bijective when L(f^k) != 0");
    skipped("V3", "irreducible essential levels divide d");
    skipped("V4", "L(f^k) = L(f^gcd(k,d))");
    return rep;
  }

  {
    ValidatorResult v{"V2", "i_{k,gcd(k,d)} bijective when L(f^k) != 0", CheckStatus::pass, ""};
    for (const auto& [k, l] : lef.values()) {
      if (l == 0) continue;
      if (!is_multiplication_bijective(grp, k / gcd(k, d))) {
        v.status = CheckStatus::fail;
        v.detail = "k = " + std::to_string(k);
        break;
      }
    }
    rep.results.push_back(std::move(v));
  }
  {
    ValidatorResult v{"V3", "irreducible essential levels divide d", CheckStatus::pass, ""};
    for (auto k : ieor)
      if (d % k != 0) {
        v.status = CheckStatus::fail;
        v.detail = "level " + std::to_string(k) + " does not divide d = " + std::to_string(d);
        break;
      }
    rep.results.push_back(std::move(v));
  }
  {
    ValidatorResult v{"V4", "L(f^k) = L(f^gcd(k,d))", CheckStatus::pass, ""};
    for (const auto& [k, l] : lef.values()) {
      const auto kb = gcd(k, d);
      if (lefschetz_number(model.matrix, kb) != l) {
        v.status = CheckStatus::fail;
        v.detail = "k = " + std::to_string(k);
        break;
      }
    }
    rep.results.push_back(std::move(v));
  }
  return rep;
}

}  // namespace

ValidatorReport run_validators(const Model& model, std::uint64_t n) {
  const auto lef = lefschetz_sequence(model.matrix, n);
  IeorLevels ieor;
  for (const auto& [k, l] : lef.values())
    if (l != 0 && irreducible_class_count(model.group, k) > 0) ieor.push_back(k);
  return run(model, lef, ieor);
}

ValidatorReport run_validators(const ReidemeisterGraph& g) {
  const auto cls = classify(g);
  IeorLevels ieor;
  for (const auto& v : cls.ieor)
    if (ieor.empty() || ieor.back() != v.level) ieor.push_back(v.level);
  return run(g.model(), g.lefschetz(), ieor);
}

}  // namespace nielsen
