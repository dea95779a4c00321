#pragma once

#include <gmp.h>

#include <climits>
#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "lazyarith/decimal.hpp"
#include "lazyarith/errors.hpp"
#include "lazyarith/fixed.hpp"
#include "lazyarith/precision.hpp"

namespace lazyarith {

/// Unbounded integer, the top rung of the ladder. Owns one GMP mpz_t.
/// Guard predicates are always true here and nothing ever signals.
template <>
class Int<PrecisionLevel::Extended> {
 public:
  static constexpr PrecisionLevel level = PrecisionLevel::Extended;
  static constexpr int bits = 0;

  Int() noexcept { mpz_init(z_); }
  Int(const Int& other) { mpz_init_set(z_, other.z_); }
  Int(Int&& other) noexcept {
    mpz_init(z_);
    mpz_swap(z_, other.z_);
  }
  Int& operator=(const Int& other) {
    if (this != &other) mpz_set(z_, other.z_);
    return *this;
  }
  Int& operator=(Int&& other) noexcept {
    mpz_swap(z_, other.z_);
    return *this;
  }
  ~Int() { mpz_clear(z_); }

  mpz_srcptr get() const noexcept { return z_; }
  mpz_ptr get() noexcept { return z_; }

  /// Number of limbs in use; 0 for zero.
  std::size_t limbs() const noexcept { return mpz_size(z_); }

  friend bool operator==(const Int& a, const Int& b) noexcept { return mpz_cmp(a.z_, b.z_) == 0; }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) noexcept {
    const int c = mpz_cmp(a.z_, b.z_);
    return c < 0 ? std::strong_ordering::less
                 : (c == 0 ? std::strong_ordering::equal : std::strong_ordering::greater);
  }

 private:
  mpz_t z_;
};

using BigInt = Int<PrecisionLevel::Extended>;

constexpr bool safe_add(const BigInt&, const BigInt&) noexcept { return true; }
constexpr bool safe_lin(const BigInt&, const BigInt&) noexcept { return true; }
constexpr bool safe_mul(const BigInt&, const BigInt&) noexcept { return true; }

inline void itomp(long long i, BigInt& a) { mpz_set_si(a.get(), static_cast<long>(i)); }

inline void copy(BigInt& b, const BigInt& a) { b = a; }

inline void addint(const BigInt& a, const BigInt& b, BigInt& c) { mpz_add(c.get(), a.get(), b.get()); }

inline void subint(const BigInt& a, const BigInt& b, BigInt& c) { mpz_sub(c.get(), a.get(), b.get()); }

inline void mulint(const BigInt& a, const BigInt& b, BigInt& c) { mpz_mul(c.get(), a.get(), b.get()); }

inline void divint(BigInt& a, const BigInt& b, BigInt& c) {
  if (mpz_sgn(b.get()) == 0) throw division_by_zero("divint");
  mpz_tdiv_qr(c.get(), a.get(), a.get(), b.get());
}

namespace detail {

// target += src * k for a signed machine scalar k.
inline void add_scaled(mpz_ptr target, mpz_srcptr src, long long k) {
  if (k >= 0) {
    mpz_addmul_ui(target, src, static_cast<unsigned long>(k));
  } else {
    mpz_submul_ui(target, src, 0UL - static_cast<unsigned long>(k));
  }
}

}  // namespace detail

inline void linint(BigInt& a, long long ka, const BigInt& b, long long kb) {
  BigInt sum;
  detail::add_scaled(sum.get(), a.get(), ka);
  detail::add_scaled(sum.get(), b.get(), kb);
  mpz_swap(a.get(), sum.get());
}

inline void qpiv(BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d, const BigInt& e) {
  if (mpz_sgn(e.get()) == 0) throw division_by_zero("qpiv");
  BigInt num;
  mpz_mul(num.get(), a.get(), b.get());
  mpz_submul(num.get(), c.get(), d.get());
  if (!mpz_divisible_p(num.get(), e.get())) throw inexact_division("qpiv");
  mpz_divexact(a.get(), num.get(), e.get());
}

inline void changesign(BigInt& a) { mpz_neg(a.get(), a.get()); }

inline int sign(const BigInt& a) noexcept { return mpz_sgn(a.get()); }

inline int comp(const BigInt& a, const BigInt& b) noexcept {
  const int c = mpz_cmp(a.get(), b.get());
  return (c > 0) - (c < 0);
}

inline bool is_zero(const BigInt& a) noexcept { return mpz_sgn(a.get()) == 0; }

inline bool is_odd(const BigInt& a) noexcept { return mpz_odd_p(a.get()) != 0; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get(), a.get(), b.get());
  return out;
}

inline std::string to_decimal(const BigInt& a) {
  // mpz_sizeinbase may overstate by one digit; trim to what mpz_get_str wrote.
  std::string out(mpz_sizeinbase(a.get(), 10) + 2, '\0');
  mpz_get_str(out.data(), 10, a.get());
  out.resize(std::char_traits<char>::length(out.c_str()));
  return out;
}

template <PrecisionLevel L>
  requires(L == PrecisionLevel::Extended)
BigInt from_decimal(std::string_view text) {
  detail::split_decimal(text);
  BigInt out;
  const std::string owned(text);
  mpz_set_str(out.get(), owned.c_str(), 10);
  return out;
}

}  // namespace lazyarith
