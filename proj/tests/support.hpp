#pragma once

// Model generators shared by the unit and acceptance suites.

#include <nielsen/arith.hpp>
#include <nielsen/int_matrix.hpp>
#include <nielsen/model.hpp>
#include <nielsen/polynomial.hpp>

#include <functional>
#include <random>
#include <vector>

namespace testing_support {

using nielsen::IntMatrix;

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_size, long lo, long hi) {
  std::uniform_int_distribution<std::size_t> sz(1, max_size);
  std::uniform_int_distribution<long> val(lo, hi);
  IntMatrix m(sz(rng));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m(i, j) = val(rng);
  return m;
}

/// Random unimodular U and its inverse, as products of elementary row
/// operations.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n,
                                                         int steps = 4) {
  IntMatrix u = IntMatrix::identity(n), inv = IntMatrix::identity(n);
  if (n < 2) return {u, inv};
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> mult(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const auto i = idx(rng), j = idx(rng);
    const long c = mult(rng);
    if (i == j || c == 0) continue;
    IntMatrix e = IntMatrix::identity(n), einv = IntMatrix::identity(n);
    e(i, j) = c;
    einv(i, j) = -c;
    u = e * u;
    inv = inv * einv;
  }
  return {u, inv};
}

/// Companion of a product of cyclotomic polynomials.
inline IntMatrix cyclotomic_block(const std::vector<std::uint64_t>& ds) {
  nielsen::IntPolynomial p = nielsen::IntPolynomial::constant(1);
  for (auto d : ds) p = p * nielsen::cyclotomic(d);
  return IntMatrix::companion(p);
}

/// All eigenvalues roots of unity other than 1, with Phi_2 repeated enough
/// times that |G| divides every L(f^k). The group is one of
/// {0, Z2, Z4, Z2+Z2}; the dimension is 3 * rank.
inline nielsen::Model random_cyclotomic_model(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> group_pick(0, 3);
  std::uniform_int_distribution<int> nblocks(1, 3);
  std::uniform_int_distribution<int> per_block(1, 2);
  static const std::vector<std::uint64_t> periods = {2, 3, 4, 5, 6, 8, 10, 12};
  std::uniform_int_distribution<std::size_t> pick(0, periods.size() - 1);

  nielsen::Model m;
  std::vector<IntMatrix> blocks;
  int minus_ones = 0;
  switch (group_pick(rng)) {
    case 0: m.group = nielsen::FiniteAbelianGroup(); break;
    case 1: m.group = nielsen::FiniteAbelianGroup({2}); minus_ones = 1; break;
    case 2: m.group = nielsen::FiniteAbelianGroup({4}); minus_ones = 2; break;
    default: m.group = nielsen::FiniteAbelianGroup({2, 2}); minus_ones = 2; break;
  }
  for (int i = 0; i < minus_ones; ++i) blocks.push_back(cyclotomic_block({2}));
  const int nb = nblocks(rng);
  for (int b = 0; b < nb; ++b) {
    std::vector<std::uint64_t> ds;
    const int c = per_block(rng);
    for (int i = 0; i < c; ++i) ds.push_back(periods[pick(rng)]);
    blocks.push_back(cyclotomic_block(ds));
  }
  IntMatrix a = IntMatrix::block_diagonal(blocks);
  auto [u, uinv] = random_unimodular(rng, a.size());
  m.matrix = u * a * uinv;
  m.dimension = static_cast<int>(3 * m.matrix.size());
  m.label = "random cyclotomic";
  return m;
}

/// Factor lists (non-decreasing prime powers) with product <= max_order.
inline std::vector<std::vector<std::uint64_t>> small_groups(std::uint64_t max_order,
                                                            std::size_t max_factors) {
  std::vector<std::uint64_t> pp;
  for (std::uint64_t q = 2; q <= max_order; ++q)
    if (nielsen::is_prime_power(q)) pp.push_back(q);
  std::vector<std::vector<std::uint64_t>> out{{}};
  std::vector<std::uint64_t> cur;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t order) {
    if (cur.size() == max_factors) return;
    for (std::size_t i = from; i < pp.size() && order * pp[i] <= max_order; ++i) {
      cur.push_back(pp[i]);
      out.push_back(cur);
      rec(i, order * pp[i]);
      cur.pop_back();
    }
  };
  rec(0, 1);
  return out;
}

}  // namespace testing_support
