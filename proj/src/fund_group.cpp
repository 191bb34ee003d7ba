#include <nielsen/fund_group.hpp>

#include <nielsen/arith.hpp>
#include <nielsen/errors.hpp>

#include <set>
#include <sstream>

namespace nielsen {

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
  os << ')';
  return os.str();
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> factors)
    : factors_(std::move(factors)) {
  std::set<std::uint64_t> primes;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto q = factors_[i];
    if (!is_prime_power(q))
      throw InvalidInput("group factor [" + std::to_string(i) + "] = " +
                         std::to_string(q) + " is not a prime power > 1");
    if (order_ > UINT64_MAX / q) throw InvalidInput("group order overflows 64 bits");
    order_ *= q;
    primes.insert(prime_factors(q).front());
  }
  primes_.assign(primes.begin(), primes.end());
}

std::uint64_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
  if (x.residues.size() != factors_.size())
    throw InvalidInput("group element " + x.to_string() + " has wrong arity");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (x.residues[i] >= factors_[i])
      throw InvalidInput("group element " + x.to_string() + " is not reduced");
    idx = idx * factors_[i] + x.residues[i];
  }
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::uint64_t index) const {
  GroupElement x;
  x.residues.resize(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    x.residues[i] = index % factors_[i];
    index /= factors_[i];
  }
  return x;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    os << (i ? " + " : "") << "Z" << factors_[i];
  return os.str();
}

std::vector<GroupElement> elements(const FiniteAbelianGroup& g, std::uint64_t cap) {
  if (g.order() > cap)
    throw CapExceeded("group of order " + std::to_string(g.order()) +
                      " exceeds the enumeration cap " + std::to_string(cap));
  std::vector<GroupElement> out;
  out.reserve(g.order());
  for (std::uint64_t i = 0; i < g.order(); ++i) out.push_back(g.element_at(i));
  return out;
}

GroupElement multiply_by(const FiniteAbelianGroup& g, std::int64_t h,
                         const GroupElement& x) {
  GroupElement y = x;
  for (std::size_t i = 0; i < y.residues.size(); ++i) {
    const auto q = static_cast<__int128>(g.factors()[i]);
    __int128 r = (static_cast<__int128>(h) * y.residues[i]) % q;
    if (r < 0) r += q;
    y.residues[i] = static_cast<std::uint64_t>(r);
  }
  return y;
}

bool is_multiplication_bijective(const FiniteAbelianGroup& g, std::uint64_t h) {
  return gcd(h, g.order()) == 1;
}

std::uint64_t image_size(const FiniteAbelianGroup& g, std::uint64_t h) {
  std::uint64_t size = 1;
  for (auto q : g.factors()) size *= q / gcd(h, q);
  return size;
}

std::uint64_t irreducible_class_count(const FiniteAbelianGroup& g, std::uint64_t k) {
  if (k == 0) throw InvalidInput("irreducible_class_count: k must be >= 1");
  // For distinct primes, the intersection of the p G is (prod p) G.
  const auto primes = prime_factors(k);
  std::int64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
    std::uint64_t h = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1) {
        h *= primes[i];
        ++bits;
      }
    const auto term = static_cast<std::int64_t>(image_size(g, h));
    count += bits % 2 == 0 ? term : -term;
  }
  return static_cast<std::uint64_t>(count);
}

}  // namespace nielsen
