#pragma once

#include <cstdint>
#include <type_traits>

#include "lazyarith/precision.hpp"

namespace lazyarith {

// Building with LAZYARITH_UNCHECKED turns every guard into a no-op. Only
// meant for measuring guard overhead; results are then unprotected.
#ifdef LAZYARITH_UNCHECKED
inline constexpr bool guards_enabled = false;
#else
inline constexpr bool guards_enabled = true;
#endif

using int128_t = __int128;
using uint128_t = unsigned __int128;

template <int W>
struct fixed_word;

template <>
struct fixed_word<64> {
  using type = std::int64_t;
  using unsigned_type = std::uint64_t;
};

template <>
struct fixed_word<128> {
  using type = int128_t;
  using unsigned_type = uint128_t;
};

template <int W>
using fixed_word_t = typename fixed_word<W>::type;

namespace detail {

template <class U>
constexpr U isqrt(U n) noexcept {
  static_assert(std::is_unsigned_v<U> || std::is_same_v<U, uint128_t>);
  if (n < 2) return n;
  // Newton iteration from an overestimate; strictly decreasing until it settles.
  U x = n;
  U y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

}  // namespace detail

/// Operand bounds for lazy overflow detection at word size W.
///
///   mul = floor(sqrt(2^(W-1) - 1))   any product of two operands fits
///   lin = 2^(W/2-1) - 1              a*ka + b*kb fits
///   add = 2^(W-2) - 1                a + b fits
template <int W>
struct GuardBounds {
  using rep = fixed_word_t<W>;
  using urep = typename fixed_word<W>::unsigned_type;

  static constexpr rep max_value = static_cast<rep>((urep{1} << (W - 1)) - 1);
  static constexpr rep add = static_cast<rep>((urep{1} << (W - 2)) - 1);
  static constexpr rep lin = static_cast<rep>((urep{1} << (W / 2 - 1)) - 1);
  static constexpr rep mul = static_cast<rep>(detail::isqrt(static_cast<urep>(max_value)));

  static_assert(lin <= mul && mul <= add);
};

/// True iff |a| <= bound and |b| <= bound. Inclusive on the boundary.
template <class Rep>
constexpr bool within(Rep a, Rep b, Rep bound) noexcept {
  return !(a > bound || b > bound || a < -bound || b < -bound);
}

template <int W>
constexpr bool safe_add(fixed_word_t<W> a, fixed_word_t<W> b) noexcept {
  return within(a, b, GuardBounds<W>::add);
}

template <int W>
constexpr bool safe_lin(fixed_word_t<W> a, fixed_word_t<W> b) noexcept {
  return within(a, b, GuardBounds<W>::lin);
}

template <int W>
constexpr bool safe_mul(fixed_word_t<W> a, fixed_word_t<W> b) noexcept {
  return within(a, b, GuardBounds<W>::mul);
}

}  // namespace lazyarith
