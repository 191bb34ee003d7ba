#include <nielsen/divisor_sequence.hpp>

#include <nielsen/arith.hpp>
#include <nielsen/errors.hpp>

#include <string>

namespace nielsen {

const char* to_string(SequenceKind kind) {
  return kind == SequenceKind::values ? "values" : "coefficients";
}

DivisorSequence::DivisorSequence(std::uint64_t horizon, SequenceKind kind)
    : horizon_(horizon), kind_(kind) {
  for (auto k : divisors(horizon)) values_.emplace(k, 0);
}

DivisorSequence::DivisorSequence(std::uint64_t horizon, SequenceKind kind,
                                 std::map<std::uint64_t, BigInt> values)
    : horizon_(horizon), kind_(kind), values_(std::move(values)) {
  const auto ds = divisors(horizon);
  if (values_.size() != ds.size())
    throw InvalidInput("sequence for horizon " + std::to_string(horizon) +
                       " must have exactly " + std::to_string(ds.size()) +
                       " entries");
  for (auto k : ds)
    if (!values_.count(k))
      throw InvalidInput("sequence is missing divisor " + std::to_string(k));
}

const BigInt& DivisorSequence::at(std::uint64_t k) const {
  auto it = values_.find(k);
  if (it == values_.end())
    throw InvalidInput(std::to_string(k) + " does not divide horizon " +
                       std::to_string(horizon_));
  return it->second;
}

void DivisorSequence::set(std::uint64_t k, BigInt v) {
  auto it = values_.find(k);
  if (it == values_.end())
    throw InvalidInput(std::to_string(k) + " does not divide horizon " +
                       std::to_string(horizon_));
  it->second = std::move(v);
}

std::set<std::uint64_t> DivisorSequence::support() const {
  std::set<std::uint64_t> out;
  for (const auto& [k, v] : values_)
    if (v != 0) out.insert(k);
  return out;
}

DivisorSequence operator+(const DivisorSequence& a, const DivisorSequence& b) {
  if (a.horizon_ != b.horizon_ || a.kind_ != b.kind_)
    throw InvalidInput("sequence sum: horizon or kind mismatch");
  DivisorSequence r = a;
  for (auto& [k, v] : r.values_) v += b.values_.at(k);
  return r;
}

std::uint64_t reg(std::uint64_t k, std::uint64_t n) {
  if (k == 0 || n == 0) throw InvalidInput("reg: arguments must be >= 1");
  return n % k == 0 ? k : 0;
}

DivisorSequence Expansion::as_sequence() const {
  if (!integral())
    throw ModelInconsistency("periodic expansion has a non-integral coefficient at k=" +
                             std::to_string(non_integral.front()));
  std::map<std::uint64_t, BigInt> vals;
  for (const auto& [k, q] : coefficients) vals.emplace(k, q.get_num());
  return DivisorSequence(horizon, SequenceKind::coefficients, std::move(vals));
}

Expansion expand(const DivisorSequence& seq) {
  if (seq.kind() != SequenceKind::values)
    throw InvalidInput("expand: expected a value sequence");
  Expansion out;
  out.horizon = seq.horizon();
  for (const auto& [k, unused] : seq.values()) {
    BigInt sum = 0;
    for (auto l : divisors(k)) {
      const int mu = moebius(k / l);
      if (mu > 0) sum += seq.at(l);
      else if (mu < 0) sum -= seq.at(l);
    }
    Rational a(sum, from_u64(k));
    a.canonicalize();
    if (a.get_den() != 1) out.non_integral.push_back(k);
    out.coefficients.emplace(k, std::move(a));
  }
  return out;
}

BigInt evaluate(const DivisorSequence& coeffs, std::uint64_t k) {
  if (k == 0 || coeffs.horizon() % k != 0)
    throw InvalidInput("evaluate: " + std::to_string(k) +
                       " does not divide horizon " +
                       std::to_string(coeffs.horizon()));
  BigInt sum = 0;
  for (const auto& [l, a] : coeffs.values())
    if (k % l == 0) sum += a * from_u64(l);
  return sum;
}

bool check_dold(const DivisorSequence& seq) {
  if (seq.kind() != SequenceKind::values)
    throw InvalidInput("check_dold: expected a value sequence");
  for (const auto& [m, unused] : seq.values()) {
    BigInt sum = 0;
    for (const auto& [k, v] : seq.values()) {
      if (m % k != 0) continue;
      sum += moebius(m / k) * v;
    }
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), m)) return false;
  }
  return true;
}

}  // namespace nielsen
