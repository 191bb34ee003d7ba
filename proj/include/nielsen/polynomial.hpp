#pragma once

#include <nielsen/bigint.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace nielsen {

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(std::size_t degree, const BigInt& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
  }
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt evaluate(const BigInt& x) const;

  /// Exact division by a monic divisor. Returns the quotient when the
  /// remainder is zero, nullopt otherwise.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

  std::string to_string(char var = 'x') const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// pow(p, e) by repeated multiplication.
IntPolynomial power(const IntPolynomial& p, unsigned e);

}  // namespace nielsen
