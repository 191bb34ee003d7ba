#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace nielsen {

/// Element of a finite abelian group, one residue per cyclic factor.
struct GroupElement {
  std::vector<std::uint64_t> residues;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  std::string to_string() const;
};

/// Direct sum of cyclic groups of prime-power order. The empty factor list is
/// the trivial group.
class FiniteAbelianGroup {
 public:
  static constexpr std::uint64_t default_enumeration_cap = std::uint64_t{1} << 16;

  FiniteAbelianGroup() = default;
  /// Throws InvalidInput unless every factor is a prime power > 1.
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> factors);

  const std::vector<std::uint64_t>& factors() const { return factors_; }
  std::uint64_t order() const { return order_; }
  /// Primes dividing the order, ascending.
  const std::vector<std::uint64_t>& prime_support() const { return primes_; }
  bool is_trivial() const { return factors_.empty(); }

  /// Position of x in lexicographic residue order.
  std::uint64_t index_of(const GroupElement& x) const;
  GroupElement element_at(std::uint64_t index) const;

  std::string to_string() const;

 private:
  std::vector<std::uint64_t> factors_;
  std::uint64_t order_ = 1;
  std::vector<std::uint64_t> primes_;
};

/// All elements in lexicographic residue order. Throws CapExceeded when the
/// order exceeds `cap`.
std::vector<GroupElement> elements(const FiniteAbelianGroup& g,
                                   std::uint64_t cap = FiniteAbelianGroup::default_enumeration_cap);

/// h * x, reduced per factor. Negative h is allowed.
GroupElement multiply_by(const FiniteAbelianGroup& g, std::int64_t h,
                         const GroupElement& x);

/// Multiplication by h is a bijection iff gcd(h, |G|) = 1.
bool is_multiplication_bijective(const FiniteAbelianGroup& g, std::uint64_t h);

/// |h G|.
std::uint64_t image_size(const FiniteAbelianGroup& g, std::uint64_t h);

/// #(G minus the union of pG over primes p | k), by inclusion-exclusion.
/// These are the classes at level k with no proper predecessor.
std::uint64_t irreducible_class_count(const FiniteAbelianGroup& g, std::uint64_t k);

}  // namespace nielsen
