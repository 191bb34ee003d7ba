#include <nielsen/decision.hpp>

#include <nielsen/arith.hpp>
#include <nielsen/errors.hpp>
#include <nielsen/smooth_real.hpp>

#include <set>

namespace nielsen {

const char* to_string(EqualityStatus s) {
  switch (s) {
    case EqualityStatus::trivially_equal: return "trivially_equal";
    case EqualityStatus::equal: return "equal";
    case EqualityStatus::unequal: return "unequal";
  }
  return "?";
}

namespace {

std::vector<std::uint64_t> primes_to_avoid(const Model& model,
                                           const SpectrumClassification& spec) {
  std::set<std::uint64_t> ps(model.group.prime_support().begin(),
                             model.group.prime_support().end());
  for (auto d : spec.periods())
    for (auto p : prime_factors(d)) ps.insert(p);
  return {ps.begin(), ps.end()};
}

InequalityCertificate scan(const Model& model, const SpectrumClassification& spec,
                           std::uint64_t max_exponent) {
  InequalityCertificate cert;
  cert.bound = max_distinct_values(model.dimension);
  cert.avoided_primes = primes_to_avoid(model, spec);
  cert.max_exponent = max_exponent;
  const BigInt order = from_u64(model.group.order());
  const auto size = model.matrix.size();
  const IntMatrix id = IntMatrix::identity(size);

  std::set<BigInt> distinct;
  IntMatrix pow = id;
  for (std::uint64_t r = 1; r <= max_exponent; ++r) {
    pow = pow * model.matrix;
    bool coprime = true;
    for (auto p : cert.avoided_primes)
      if (r % p == 0) coprime = false;
    if (!coprime) continue;
    const BigInt l = determinant(id - pow);
    if (l == 0) continue;
    if (!mpz_divisible_p(l.get_mpz_t(), order.get_mpz_t()))
      throw ModelInconsistency("|G| = " + to_string(order) + " does not divide L(f^" +
                               std::to_string(r) + ") = " + to_string(l));
    BigInt idx;
    mpz_divexact(idx.get_mpz_t(), l.get_mpz_t(), order.get_mpz_t());
    cert.exponents.push_back(r);
    cert.index_values.push_back(idx);
    distinct.insert(idx);
    if (distinct.size() > cert.bound) {
      cert.complete = true;
      break;
    }
  }
  cert.distinct_count = distinct.size();
  BigInt h = 1;
  for (auto r : cert.exponents) mpz_lcm(h.get_mpz_t(), h.get_mpz_t(), from_u64(r).get_mpz_t());
  cert.witness_horizon = h;
  return cert;
}

void require_expanding(const Model& model, const SpectrumClassification& spec) {
  if (spec.all_moduli_le_one)
    throw InvalidInput("witness search needs an eigenvalue of modulus > 1");
  if (spec.has_eigenvalue_one || lefschetz_number(model.matrix, 1) == 0)
    throw InvalidInput("witness search needs L(f) != 0");
}

}  // namespace

InequalityCertificate witness_search(const Model& model, std::uint64_t max_exponent) {
  model.validate();
  const auto spec = classify_spectrum(model.matrix);
  require_expanding(model, spec);
  auto cert = scan(model, spec, max_exponent);
  if (!cert.complete)
    throw SearchCapExceeded("only " + std::to_string(cert.distinct_count) +
                            " distinct index values up to r = " + std::to_string(max_exponent) +
                            "; need more than " + std::to_string(cert.bound));
  return cert;
}

bool check_inequality_certificate(const Model& model, const InequalityCertificate& cert) {
  const auto spec = classify_spectrum(model.matrix);
  std::uint64_t avoid = model.group.order();
  for (auto d : spec.periods()) avoid = lcm(avoid, d);
  if (cert.exponents.size() != cert.index_values.size()) return false;
  std::set<BigInt> distinct;
  BigInt h = 1;
  for (std::size_t i = 0; i < cert.exponents.size(); ++i) {
    const auto r = cert.exponents[i];
    if (i > 0 && r <= cert.exponents[i - 1]) return false;
    if (gcd(r, avoid) != 1) return false;
    const BigInt l = lefschetz_number(model.matrix, r);
    if (l == 0 || l != cert.index_values[i] * from_u64(model.group.order())) return false;
    distinct.insert(cert.index_values[i]);
    mpz_lcm(h.get_mpz_t(), h.get_mpz_t(), from_u64(r).get_mpz_t());
  }
  return distinct.size() == cert.distinct_count &&
         cert.bound == max_distinct_values(model.dimension) &&
         cert.distinct_count > cert.bound && h == cert.witness_horizon;
}

EqualityVerdict decide_equality(const Model& model, std::optional<std::uint64_t> n,
                                std::uint64_t max_exponent) {
  model.validate();
  EqualityVerdict v;
  v.spectrum = classify_spectrum(model.matrix);
  const auto d = minimal_period_lcm(v.spectrum);
  const auto horizon = n.value_or(d);
  v.diagnostics = run_validators(model, horizon);

  if (lefschetz_number(model.matrix, 1) == 0) {
    v.status = EqualityStatus::trivially_equal;
    return v;
  }
  if (v.spectrum.all_moduli_le_one) {
    v.status = EqualityStatus::equal;
    const auto graph = build_graph(model, horizon);
    EqualityCertificate cert;
    cert.horizon = horizon;
    cert.period_lcm = d;
    cert.attachments = attach_expressions(graph, d);
    cert.report = verify_smooth_realization(graph, cert.attachments);
    cert.nf = nf_number(graph);
    v.equality = std::move(cert);
    return v;
  }
  v.status = EqualityStatus::unequal;
  v.inequality = scan(model, v.spectrum, max_exponent);
  v.certificate_incomplete = !v.inequality->complete;
  return v;
}

NfNjdSummary nf_njd_summary(const Model& model, std::uint64_t n, std::uint64_t max_exponent) {
  NfNjdSummary s;
  s.horizon = n;
  s.nf = nf_number(build_graph(model, n));
  const auto v = decide_equality(model, n, max_exponent);
  s.status = v.status;
  if (v.status == EqualityStatus::unequal) {
    s.njd_lower_bound_only = true;
    s.certificate_incomplete = v.certificate_incomplete;
    if (v.inequality && v.inequality->complete) s.witness_horizon = v.inequality->witness_horizon;
  } else {
    s.njd = s.nf;
  }
  return s;
}

Model psu2_fixture(const IntMatrix& alpha) {
  const auto s = alpha.size();
  if (s == 0) throw InvalidInput("psu2_fixture: need at least one factor");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      const BigInt parity = alpha(i, j) - (i == j ? 1 : 0);
      if (!mpz_even_p(parity.get_mpz_t()))
        throw InvalidInput("psu2_fixture: entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ") = " + to_string(alpha(i, j)) +
                           " breaks alpha = I (mod 2)");
    }
  Model m;
  m.matrix = alpha;
  m.group = FiniteAbelianGroup(std::vector<std::uint64_t>(s, 2));
  m.dimension = static_cast<int>(3 * s);
  m.label = s == 1 ? "PSU(2)" : "PSU(2)^" + std::to_string(s);
  return m;
}

}  // namespace nielsen
