#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nielsen {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline BigInt from_i64(std::int64_t v) {
  if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
  // -(v+1) avoids overflow at INT64_MIN
  BigInt r = from_u64(static_cast<std::uint64_t>(-(v + 1)));
  return -r - 1;
}

}  // namespace nielsen
