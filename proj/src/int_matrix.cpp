#include <nielsen/int_matrix.hpp>

#include <nielsen/arith.hpp>
#include <nielsen/errors.hpp>

#include <utility>

namespace nielsen {

IntMatrix::IntMatrix(std::size_t size) : n_(size), a_(size * size) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()), a_(rows.size() * rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw InvalidInput("matrix is not square");
    std::size_t j = 0;
    for (long v : row) a_[i * n_ + j++] = v;
    ++i;
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw InvalidInput("matrix is not square: row " + std::to_string(i) +
                         " has " + std::to_string(rows[i].size()) +
                         " entries, expected " + std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t size) {
  IntMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::companion(const IntPolynomial& monic) {
  if (!monic.is_monic() || monic.degree() < 1)
    throw InvalidInput("companion: polynomial must be monic of degree >= 1");
  const auto n = static_cast<std::size_t>(monic.degree());
  IntMatrix m(n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -monic.coefficient(i);
  return m;
}

IntMatrix IntMatrix::block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  IntMatrix m(total);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m(off + i, off + j) = b(i, j);
    off += b.size();
  }
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.n_ != y.n_) throw InvalidInput("matrix product: size mismatch");
  const std::size_t n = x.n_;
  IntMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  if (x.n_ != y.n_) throw InvalidInput("matrix difference: size mismatch");
  IntMatrix r(x.n_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
  return r;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix power(const IntMatrix& m, std::uint64_t e) {
  IntMatrix result = IntMatrix::identity(m.size());
  IntMatrix base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
    }
    prev = a(k, k);
  }
  BigInt d = a(n - 1, n - 1);
  return sign < 0 ? BigInt(-d) : d;
}

IntPolynomial char_poly(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    BigInt t = (a * m).trace();
    BigInt kk = static_cast<unsigned long>(k);
    if (!mpz_divisible_p(t.get_mpz_t(), kk.get_mpz_t()))
      throw Error("char_poly: inexact Faddeev-LeVerrier step");  // unreachable over Z
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -t;
  }
  return IntPolynomial(std::move(c));
}

BigInt lefschetz_number(const IntMatrix& a, std::uint64_t k) {
  return determinant(IntMatrix::identity(a.size()) - power(a, k));
}

DivisorSequence lefschetz_sequence(const IntMatrix& a, std::uint64_t n) {
  DivisorSequence seq(n, SequenceKind::values);
  for (auto k : divisors(n)) seq.set(k, lefschetz_number(a, k));
  return seq;
}

}  // namespace nielsen
