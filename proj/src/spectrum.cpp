#include <nielsen/spectrum.hpp>

#include <nielsen/arith.hpp>
#include <nielsen/errors.hpp>

namespace nielsen {

std::set<std::uint64_t> SpectrumClassification::periods() const {
  std::set<std::uint64_t> out;
  for (const auto& [d, mult] : unity_periods) out.insert(d);
  return out;
}

IntPolynomial SpectrumClassification::recombine() const {
  IntPolynomial p = IntPolynomial::monomial(nilpotent_multiplicity);
  for (const auto& [d, mult] : unity_periods) p = p * power(cyclotomic(d), mult);
  return p * remainder;
}

SpectrumClassification classify_polynomial(const IntPolynomial& monic) {
  if (!monic.is_monic()) throw InvalidInput("classify: polynomial must be monic");
  SpectrumClassification c;
  c.characteristic = monic;

  // strip x^j
  const auto& cs = monic.coefficients();
  std::size_t j = 0;
  while (cs[j] == 0) ++j;
  c.nilpotent_multiplicity = static_cast<unsigned>(j);
  IntPolynomial rest(std::vector<BigInt>(cs.begin() + static_cast<long>(j), cs.end()));

  // phi(d) >= sqrt(d/2), so phi(d) <= deg forces d <= 2 deg^2.
  const auto deg = static_cast<std::uint64_t>(rest.degree());
  for (std::uint64_t d = 1; deg > 0 && d <= 2 * deg * deg; ++d) {
    if (euler_phi(d) > static_cast<std::uint64_t>(rest.degree())) continue;
    const IntPolynomial phi = cyclotomic(d);
    while (rest.degree() >= phi.degree()) {
      auto q = rest.divide_exact(phi);
      if (!q) break;
      rest = std::move(*q);
      ++c.unity_periods[d];
    }
  }
  c.remainder = std::move(rest);
  c.all_moduli_le_one = c.remainder.is_one();
  c.has_eigenvalue_one = c.unity_periods.count(1) != 0;
  return c;
}

SpectrumClassification classify_spectrum(const IntMatrix& a) {
  return classify_polynomial(char_poly(a));
}

std::uint64_t minimal_period_lcm(const SpectrumClassification& c) {
  return lcm_of(c.periods());
}

}  // namespace nielsen
