#pragma once

#include <nielsen/bigint.hpp>
#include <nielsen/divisor_sequence.hpp>
#include <nielsen/polynomial.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace nielsen {

/// Square matrix over Z. Size 0 is allowed and behaves as the empty matrix
/// (determinant 1, characteristic polynomial 1).
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t size);
  /// Row-major rows; throws InvalidInput when not square.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  static IntMatrix identity(std::size_t size);
  /// Companion matrix of a monic polynomial of degree >= 1.
  static IntMatrix companion(const IntPolynomial& monic);
  /// Block diagonal sum.
  static IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

  std::size_t size() const { return n_; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

  BigInt trace() const;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> a_;
};

IntMatrix power(const IntMatrix& m, std::uint64_t e);

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& m);

/// det(xI - A), monic, via Faddeev-LeVerrier with exact integer division.
IntPolynomial char_poly(const IntMatrix& a);

/// L(f^k) = det(I - A^k) for every k | n.
DivisorSequence lefschetz_sequence(const IntMatrix& a, std::uint64_t n);

/// Single Lefschetz number det(I - A^k).
BigInt lefschetz_number(const IntMatrix& a, std::uint64_t k);

}  // namespace nielsen
