#include <doctest.h>

#include <nielsen/arith.hpp>
#include <nielsen/int_matrix.hpp>
#include <nielsen/spectrum.hpp>

#include "oracles.hpp"
#include "support.hpp"

#include <random>

using namespace nielsen;

namespace {

const IntMatrix rotation{{0, -1}, {1, 0}};

// det(tI - A) by cofactor expansion
BigInt char_poly_at(const IntMatrix& a, long t) {
  auto r = oracle::rows(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) r[i][j] = (i == j ? BigInt(t) : BigInt(0)) - r[i][j];
  return oracle::laplace_det(r);
}

}  // namespace

TEST_CASE("char_poly") {
  CHECK(char_poly(rotation) == IntPolynomial({1, 0, 1}));
  CHECK(char_poly(IntMatrix::identity(2)) == IntPolynomial({1, -2, 1}));
  CHECK(char_poly(IntMatrix{{3}}) == IntPolynomial({-3, 1}));
  CHECK(char_poly(IntMatrix()) == IntPolynomial::constant(1));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 150; ++i) {
    const auto a = testing_support::random_matrix(rng, 5, -4, 4);
    const auto p = char_poly(a);
    REQUIRE(p.is_monic());
    REQUIRE(p.degree() == static_cast<long>(a.size()));
    for (long t = -3; t <= 3; ++t) REQUIRE(p.evaluate(t) == char_poly_at(a, t));
  }
}

TEST_CASE("companion matrices carry their polynomial") {
  for (std::uint64_t d = 1; d <= 30; ++d)
    CHECK(char_poly(IntMatrix::companion(cyclotomic(d))) == cyclotomic(d));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = testing_support::random_matrix(rng, 6, -3, 3);
    REQUIRE(determinant(a) == oracle::laplace_det(oracle::rows(a)));
  }
  CHECK(determinant(IntMatrix()) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("lefschetz_sequence") {
  const auto rot = lefschetz_sequence(rotation, 4);
  CHECK(rot.values() == std::map<std::uint64_t, BigInt>{{1, 2}, {2, 4}, {4, 0}});
  for (auto k : divisors(4)) CHECK(rot.at(k) == oracle::lefschetz(rotation, k));

  for (std::uint64_t n : {1, 6, 12}) {
    const auto id = lefschetz_sequence(IntMatrix::identity(3), n);
    for (const auto& [k, v] : id.values()) CHECK(v == 0);
  }

  const auto three = lefschetz_sequence(IntMatrix{{3}}, 3);
  CHECK(three.values() == std::map<std::uint64_t, BigInt>{{1, -2}, {3, -26}});

  // empty matrix: L = 1
  CHECK(lefschetz_number(IntMatrix(), 5) == 1);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const auto a = testing_support::random_matrix(rng, 4, -3, 3);
    for (std::uint64_t k = 1; k <= 6; ++k) REQUIRE(lefschetz_number(a, k) == oracle::lefschetz(a, k));
  }
}

TEST_CASE("classify_spectrum examples") {
  const auto rot = classify_spectrum(rotation);
  CHECK(rot.periods() == std::set<std::uint64_t>{4});
  CHECK(rot.nilpotent_multiplicity == 0);
  CHECK(rot.remainder.is_one());
  CHECK(rot.all_moduli_le_one);
  CHECK_FALSE(rot.has_eigenvalue_one);
  CHECK(minimal_period_lcm(rot) == 4);

  const auto three = classify_spectrum(IntMatrix{{3}});
  CHECK(three.unity_periods.empty());
  CHECK(three.remainder == IntPolynomial({-3, 1}));
  CHECK_FALSE(three.all_moduli_le_one);
  CHECK(minimal_period_lcm(three) == 1);

  const auto one = classify_spectrum(IntMatrix{{1}});
  CHECK(one.periods() == std::set<std::uint64_t>{1});
  CHECK(one.has_eigenvalue_one);

  const auto nil = classify_spectrum(IntMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, -1}});
  CHECK(nil.nilpotent_multiplicity == 2);
  CHECK(nil.periods() == std::set<std::uint64_t>{2});
  CHECK(nil.all_moduli_le_one);

  const auto empty = classify_spectrum(IntMatrix());
  CHECK(empty.all_moduli_le_one);
  CHECK(minimal_period_lcm(empty) == 1);
}

TEST_CASE("minimal_period_lcm") {
  SpectrumClassification c;
  CHECK(minimal_period_lcm(c) == 1);
  c.unity_periods = {{2, 1}, {3, 2}};
  CHECK(minimal_period_lcm(c) == 6);
  c.unity_periods = {{4, 1}};
  CHECK(minimal_period_lcm(c) == 4);
}

TEST_CASE("classification recombines to the characteristic polynomial") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto a = testing_support::random_matrix(rng, 5, -2, 2);
    const auto c = classify_spectrum(a);
    REQUIRE(c.recombine() == c.characteristic);
    REQUIRE(c.all_moduli_le_one == c.remainder.is_one());
    REQUIRE(c.has_eigenvalue_one == (c.unity_periods.count(1) == 1));
    // no cyclotomic factor or x left in the remainder
    REQUIRE(c.remainder.coefficient(0) != 0);
    for (std::uint64_t d = 1; d <= 50; ++d) REQUIRE_FALSE(c.remainder.divide_exact(cyclotomic(d)));
  }
}

TEST_CASE("Kronecker classification") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint64_t> pick(1, 30);
  for (int i = 0; i < 60; ++i) {
    std::vector<std::uint64_t> ds{pick(rng), pick(rng)};
    const auto c = classify_spectrum(testing_support::cyclotomic_block(ds));
    CHECK(c.all_moduli_le_one);
    std::map<std::uint64_t, unsigned> expect;
    for (auto d : ds) ++expect[d];
    CHECK(c.unity_periods == expect);
  }
  CHECK_FALSE(classify_spectrum(IntMatrix::companion(IntPolynomial({-1, -1, 1}))).all_moduli_le_one);
}

TEST_CASE("eigenvalue one forces vanishing Lefschetz numbers") {
  std::mt19937_64 rng(23);
  int seen = 0;
  for (int i = 0; i < 400 && seen < 30; ++i) {
    const auto a = testing_support::random_matrix(rng, 4, -2, 2);
    if (!classify_spectrum(a).has_eigenvalue_one) continue;
    ++seen;
    const auto l = lefschetz_sequence(a, 12);
    for (const auto& [k, v] : l.values()) REQUIRE(v == 0);
  }
  CHECK(seen > 0);
}
