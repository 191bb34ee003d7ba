#pragma once

#include <nielsen/int_matrix.hpp>
#include <nielsen/polynomial.hpp>

#include <cstdint>
#include <map>
#include <set>

namespace nielsen {

/// Exact factorization charpoly = x^j * prod_d Phi_d^{mult(d)} * remainder,
/// where remainder has no cyclotomic factor and no root at zero. By
/// Kronecker's theorem every eigenvalue lies in the closed unit disk iff
/// remainder == 1.
struct SpectrumClassification {
  IntPolynomial characteristic;
  /// d -> multiplicity of Phi_d.
  std::map<std::uint64_t, unsigned> unity_periods;
  unsigned nilpotent_multiplicity = 0;
  IntPolynomial remainder;
  bool all_moduli_le_one = false;
  bool has_eigenvalue_one = false;

  std::set<std::uint64_t> periods() const;
  /// Re-multiplies the factors.
  IntPolynomial recombine() const;
};

SpectrumClassification classify_spectrum(const IntMatrix& a);
SpectrumClassification classify_polynomial(const IntPolynomial& monic);

/// lcm of the unity periods; 1 when there are none.
std::uint64_t minimal_period_lcm(const SpectrumClassification& c);

}  // namespace nielsen
