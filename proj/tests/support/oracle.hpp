#pragma once

// Independent reference arithmetic for tests: boost::multiprecision::cpp_int.
// Nothing here calls into the library's arithmetic except to read values out.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>

#include "lazyarith/integer.hpp"

namespace lazyarith::testing {

using boost::multiprecision::cpp_int;

inline cpp_int pow2(unsigned e) { return cpp_int(1) << e; }

/// 2^(W-1) - 1
inline cpp_int word_max(int bits) { return pow2(unsigned(bits - 1)) - 1; }

inline cpp_int abs_value(const cpp_int& v) { return v < 0 ? cpp_int(-v) : v; }

inline cpp_int isqrt_oracle(const cpp_int& n) { return boost::multiprecision::sqrt(n); }

template <PrecisionLevel L>
cpp_int to_oracle(const Int<L>& a) {
  if constexpr (is_fixed(L)) {
    return cpp_int(a.value());
  } else {
    return cpp_int(to_decimal(a));
  }
}

inline std::string oracle_decimal(const cpp_int& v) { return v.str(); }

/// Fixed-level word from an oracle value already known to be in range.
template <PrecisionLevel L>
Int<L> from_oracle(const cpp_int& v) {
  if constexpr (is_fixed(L)) {
    using rep = typename Int<L>::rep;
    return Int<L>::from_value(static_cast<rep>(v));
  } else {
    return from_decimal<L>(v.str());
  }
}

/// Random operands that exercise every magnitude from 0 up to the full
/// word range, with extra weight around the guard bounds.
class OperandGen {
 public:
  explicit OperandGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }

  bool coin() { return (rng_() & 1) != 0; }

  /// Magnitude uniform in bit length over [0, bits], random sign.
  cpp_int any(int magnitude_bits) {
    const unsigned len = unsigned(below(std::uint64_t(magnitude_bits) + 1));
    cpp_int mag = 0;
    for (unsigned got = 0; got < len; got += 64) mag = (mag << 64) | cpp_int(rng_());
    if (len == 0) {
      mag = 0;
    } else {
      mag &= pow2(len) - 1;
      mag |= pow2(len - 1);
    }
    return coin() ? cpp_int(-mag) : mag;
  }

  /// bound + delta for small delta, random sign, clamped to |v| <= limit.
  cpp_int near(const cpp_int& bound, const cpp_int& limit) {
    cpp_int v = bound + cpp_int(int(below(7)) - 3);
    if (v > limit) v = limit;
    if (v < 0) v = 0;
    return coin() ? cpp_int(-v) : v;
  }

  /// Operand for a W-bit level: mostly full-range, sometimes at a guard bound.
  cpp_int fixed_operand(int bits, const cpp_int& guard_bound) {
    const cpp_int limit = word_max(bits);
    switch (below(8)) {
      case 0:
        return near(guard_bound, limit);
      case 1:
        return near(limit, limit);
      case 2:
        return cpp_int(int(below(21)) - 10);
      default:
        return any(bits - 1);
    }
  }

  /// long long scalar, magnitude <= 2^63 - 1, with extra weight at `guard_bound`.
  long long scalar(const cpp_int& guard_bound) {
    const cpp_int limit = word_max(64);
    cpp_int v;
    switch (below(6)) {
      case 0:
        v = near(guard_bound < limit ? guard_bound : limit, limit);
        break;
      case 1:
        v = cpp_int(int(below(21)) - 10);
        break;
      default:
        v = any(63);
        break;
    }
    return static_cast<long long>(v);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace lazyarith::testing
