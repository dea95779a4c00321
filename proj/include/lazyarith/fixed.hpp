#pragma once

#include <charconv>
#include <climits>
#include <compare>
#include <string>
#include <string_view>

#include "lazyarith/decimal.hpp"
#include "lazyarith/errors.hpp"
#include "lazyarith/guard.hpp"
#include "lazyarith/precision.hpp"

namespace lazyarith {

template <PrecisionLevel L>
class Int;

namespace detail {
struct fixed_access;
}

/// Integer at a fixed level: one two's-complement machine word whose stored
/// magnitude never exceeds 2^(W-1) - 1, so negation is always safe.
template <PrecisionLevel L>
  requires(is_fixed(L))
class Int<L> {
 public:
  static constexpr PrecisionLevel level = L;
  static constexpr int bits = word_size(L);
  using rep = fixed_word_t<bits>;
  using bounds = GuardBounds<bits>;

  constexpr Int() noexcept = default;

  /// Throws range_error for the one word value the invariant excludes.
  static constexpr Int from_value(rep v) {
    if (v < -bounds::max_value) throw range_error("most negative word value", L);
    Int out;
    out.v_ = v;
    return out;
  }

  constexpr rep value() const noexcept { return v_; }

  friend constexpr bool operator==(const Int&, const Int&) = default;
  friend constexpr std::strong_ordering operator<=>(const Int& a, const Int& b) noexcept {
    return a.v_ < b.v_ ? std::strong_ordering::less
                       : (a.v_ == b.v_ ? std::strong_ordering::equal : std::strong_ordering::greater);
  }

 private:
  friend struct detail::fixed_access;
  rep v_ = 0;
};

using Int64 = Int<PrecisionLevel::Fixed64>;
using Int128 = Int<PrecisionLevel::Fixed128>;

namespace detail {

struct fixed_access {
  template <PrecisionLevel L>
  static constexpr auto& ref(Int<L>& a) noexcept {
    return a.v_;
  }
};

template <PrecisionLevel L>
constexpr auto& raw(Int<L>& a) noexcept {
  return fixed_access::ref(a);
}

template <class Rep>
constexpr Rep abs_rep(Rep v) noexcept {
  return v < 0 ? -v : v;
}

}  // namespace detail

// Guard predicates. True means the operation is safe to perform.

template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr bool safe_add(const Int<L>& a, const Int<L>& b) noexcept {
  return safe_add<Int<L>::bits>(a.value(), b.value());
}

template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr bool safe_lin(const Int<L>& a, const Int<L>& b) noexcept {
  return safe_lin<Int<L>::bits>(a.value(), b.value());
}

template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr bool safe_mul(const Int<L>& a, const Int<L>& b) noexcept {
  return safe_mul<Int<L>::bits>(a.value(), b.value());
}

// a = i
template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr void itomp(long long i, Int<L>& a) {
  if constexpr (Int<L>::bits == 64) {
    if (i == LLONG_MIN) throw range_error(std::to_string(i), L);
  }
  detail::raw(a) = static_cast<typename Int<L>::rep>(i);
}

// b = a
template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr void copy(Int<L>& b, const Int<L>& a) noexcept {
  b = a;
}

// c = a + b
template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr void addint(const Int<L>& a, const Int<L>& b, Int<L>& c) {
  if constexpr (guards_enabled) {
    if (!safe_add(a, b)) [[unlikely]]
      detail::signal_overflow("addint", L);
  }
  detail::raw(c) = a.value() + b.value();
}

// c = a - b
template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr void subint(const Int<L>& a, const Int<L>& b, Int<L>& c) {
  if constexpr (guards_enabled) {
    if (!safe_add(a, b)) [[unlikely]]
      detail::signal_overflow("subint", L);
  }
  detail::raw(c) = a.value() - b.value();
}

// c = a * b
template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr void mulint(const Int<L>& a, const Int<L>& b, Int<L>& c) {
  if constexpr (guards_enabled) {
    if (!safe_mul(a, b)) [[unlikely]]
      detail::signal_overflow("mulint", L);
  }
  detail::raw(c) = a.value() * b.value();
}

/// c = a / b truncated toward zero, and a is replaced by the remainder
/// (sign of the dividend). Never overflows. `c` must not alias `a`.
template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr void divint(Int<L>& a, const Int<L>& b, Int<L>& c) {
  if (b.value() == 0) throw division_by_zero("divint");
  const auto q = a.value() / b.value();
  const auto r = a.value() % b.value();
  detail::raw(c) = q;
  detail::raw(a) = r;
}

/// a = a*ka + b*kb. All four of a, b, ka, kb must lie within the linear bound.
template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr void linint(Int<L>& a, long long ka, const Int<L>& b, long long kb) {
  using rep = typename Int<L>::rep;
  if constexpr (guards_enabled) {
    if (!safe_lin(a, b) || !within<rep>(ka, kb, Int<L>::bounds::lin)) [[unlikely]]
      detail::signal_overflow("linint", L);
  }
  detail::raw(a) = a.value() * rep(ka) + b.value() * rep(kb);
}

/// a = (a*b - c*d) / e. The division must be exact; a is left untouched when
/// anything is reported.
template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr void qpiv(Int<L>& a, const Int<L>& b, const Int<L>& c, const Int<L>& d, const Int<L>& e) {
  if (e.value() == 0) throw division_by_zero("qpiv");
  if constexpr (guards_enabled) {
    if (!safe_lin(a, b) || !safe_lin(c, d)) [[unlikely]]
      detail::signal_overflow("qpiv", L);
  }
  const auto num = a.value() * b.value() - c.value() * d.value();
  if (num % e.value() != 0) throw inexact_division("qpiv");
  detail::raw(a) = num / e.value();
}

template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr void changesign(Int<L>& a) noexcept {
  detail::raw(a) = -a.value();
}

template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr int sign(const Int<L>& a) noexcept {
  return (a.value() > 0) - (a.value() < 0);
}

template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr int comp(const Int<L>& a, const Int<L>& b) noexcept {
  return (a.value() > b.value()) - (a.value() < b.value());
}

template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr bool is_zero(const Int<L>& a) noexcept {
  return a.value() == 0;
}

template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr bool is_odd(const Int<L>& a) noexcept {
  return (a.value() & 1) != 0;
}

/// Nonnegative gcd of |a| and |b|; gcd(0, 0) = 0.
template <PrecisionLevel L>
  requires(is_fixed(L))
constexpr Int<L> gcd(const Int<L>& a, const Int<L>& b) noexcept {
  auto u = detail::abs_rep(a.value());
  auto v = detail::abs_rep(b.value());
  while (v != 0) {
    auto t = u % v;
    u = v;
    v = t;
  }
  Int<L> out;
  detail::raw(out) = u;
  return out;
}

template <PrecisionLevel L>
  requires(is_fixed(L))
std::string to_decimal(const Int<L>& a) {
  using urep = typename Int<L>::bounds::urep;
  const auto v = a.value();
  urep mag = v < 0 ? urep(0) - urep(v) : urep(v);
  char buf[48];
  char* end = buf + sizeof(buf);
  char* p = end;
  do {
    *--p = char('0' + int(mag % 10));
    mag /= 10;
  } while (mag != 0);
  if (v < 0) *--p = '-';
  return std::string(p, end);
}

template <PrecisionLevel L>
  requires(is_fixed(L))
Int<L> from_decimal(std::string_view text) {
  using urep = typename Int<L>::bounds::urep;
  const auto parsed = detail::split_decimal(text);
  const urep limit = urep(Int<L>::bounds::max_value);
  urep mag = 0;
  for (char ch : parsed.digits) {
    const urep digit = urep(ch - '0');
    if (mag > (limit - digit) / 10) throw range_error(std::string(text), L);
    mag = mag * 10 + digit;
  }
  Int<L> out;
  detail::raw(out) = parsed.negative ? -static_cast<typename Int<L>::rep>(mag)
                                     : static_cast<typename Int<L>::rep>(mag);
  return out;
}

}  // namespace lazyarith
