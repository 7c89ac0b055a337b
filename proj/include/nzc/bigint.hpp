#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace nzc {

// Exact arithmetic only. Index values outgrow 64 bits quickly (forgotten
// index scales like q^{5n}), so everything index-valued is a Bigint.
using Bigint = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using u128 = unsigned __int128;

inline Bigint bigint_from_u128(u128 x) {
  Bigint hi = static_cast<std::uint64_t>(x >> 64);
  return (hi << 64) | static_cast<std::uint64_t>(x);
}

/// base^exp by repeated squaring, exact.
inline Bigint bigpow(const Bigint& base, std::uint64_t exp) {
  Bigint r = 1, b = base;
  while (exp != 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline std::string to_decimal(const Bigint& v) { return v.str(); }

inline std::string to_decimal(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1)
    return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

}  // namespace nzc
