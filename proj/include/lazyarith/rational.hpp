#pragma once

#include <string>
#include <string_view>

#include "lazyarith/integer.hpp"

namespace lazyarith {

// Rationals are pairs of Ints at one level. Overflow detection comes entirely
// from the integer operations used; nothing here adds guards of its own.

/// Divides a and b by gcd(|a|, |b|) and moves the sign into a, leaving b > 0.
template <PrecisionLevel L>
void reduce(Int<L>& a, Int<L>& b) {
  if (is_zero(b)) throw division_by_zero("reduce");
  const Int<L> g = gcd(a, b);
  Int<L> num;
  Int<L> den;
  Int<L> rem = a;
  divint(rem, g, num);
  rem = b;
  divint(rem, g, den);
  if (sign(den) < 0) {
    changesign(num);
    changesign(den);
  }
  a = std::move(num);
  b = std::move(den);
}

// e/f = a/b * c/d
template <PrecisionLevel L>
void mulrat(const Int<L>& a, const Int<L>& b, const Int<L>& c, const Int<L>& d, Int<L>& e, Int<L>& f) {
  if (is_zero(b) || is_zero(d)) throw division_by_zero("mulrat");
  Int<L> num;
  Int<L> den;
  mulint(a, c, num);
  mulint(b, d, den);
  reduce(num, den);
  e = std::move(num);
  f = std::move(den);
}

// e/f = a/b + c/d
template <PrecisionLevel L>
void addrat(const Int<L>& a, const Int<L>& b, const Int<L>& c, const Int<L>& d, Int<L>& e, Int<L>& f) {
  if (is_zero(b) || is_zero(d)) throw division_by_zero("addrat");
  Int<L> ad;
  Int<L> cb;
  Int<L> den;
  mulint(a, d, ad);
  mulint(c, b, cb);
  mulint(b, d, den);
  addint(ad, cb, ad);
  reduce(ad, den);
  e = std::move(ad);
  f = std::move(den);
}

// e/f = a/b - c/d
template <PrecisionLevel L>
void subrat(const Int<L>& a, const Int<L>& b, const Int<L>& c, const Int<L>& d, Int<L>& e, Int<L>& f) {
  if (is_zero(b) || is_zero(d)) throw division_by_zero("subrat");
  Int<L> ad;
  Int<L> cb;
  Int<L> den;
  mulint(a, d, ad);
  mulint(c, b, cb);
  mulint(b, d, den);
  subint(ad, cb, ad);
  reduce(ad, den);
  e = std::move(ad);
  f = std::move(den);
}

// e/f = (a/b) / (c/d)
template <PrecisionLevel L>
void divrat(const Int<L>& a, const Int<L>& b, const Int<L>& c, const Int<L>& d, Int<L>& e, Int<L>& f) {
  if (is_zero(b) || is_zero(d) || is_zero(c)) throw division_by_zero("divrat");
  Int<L> num;
  Int<L> den;
  mulint(a, d, num);
  mulint(b, c, den);
  reduce(num, den);
  e = std::move(num);
  f = std::move(den);
}

/// Sign of a/b - c/d.
template <PrecisionLevel L>
int ratcmp(const Int<L>& a, const Int<L>& b, const Int<L>& c, const Int<L>& d) {
  if (is_zero(b) || is_zero(d)) throw division_by_zero("ratcmp");
  Int<L> ad;
  Int<L> cb;
  mulint(a, d, ad);
  mulint(c, b, cb);
  const int s = comp(ad, cb);
  // Cross-multiplying by a negative denominator flips the comparison.
  return (sign(b) * sign(d) < 0) ? -s : s;
}

/// Exact rational in canonical form: den > 0 and gcd(|num|, den) = 1.
template <PrecisionLevel L>
class Rat {
 public:
  Rat() { itomp(1, den_); }

  explicit Rat(Int<L> num) : num_(std::move(num)) { itomp(1, den_); }

  Rat(Int<L> num, Int<L> den) : num_(std::move(num)), den_(std::move(den)) { reduce(num_, den_); }

  static Rat from_ints(long long num, long long den = 1) {
    return Rat(make_int<L>(num), make_int<L>(den));
  }

  /// Parses "num" or "num/den"; the result is reduced.
  static Rat parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(from_decimal<L>(text));
    return Rat(from_decimal<L>(text.substr(0, slash)), from_decimal<L>(text.substr(slash + 1)));
  }

  const Int<L>& num() const noexcept { return num_; }
  const Int<L>& den() const noexcept { return den_; }

  /// "num/den", or just "num" when den is 1.
  std::string to_string() const {
    std::string out = to_decimal(num_);
    if (to_decimal(den_) != "1") out += "/" + to_decimal(den_);
    return out;
  }

  friend Rat operator+(const Rat& x, const Rat& y) {
    Rat r;
    addrat(x.num_, x.den_, y.num_, y.den_, r.num_, r.den_);
    return r;
  }
  friend Rat operator-(const Rat& x, const Rat& y) {
    Rat r;
    subrat(x.num_, x.den_, y.num_, y.den_, r.num_, r.den_);
    return r;
  }
  friend Rat operator*(const Rat& x, const Rat& y) {
    Rat r;
    mulrat(x.num_, x.den_, y.num_, y.den_, r.num_, r.den_);
    return r;
  }
  friend Rat operator/(const Rat& x, const Rat& y) {
    Rat r;
    divrat(x.num_, x.den_, y.num_, y.den_, r.num_, r.den_);
    return r;
  }
  Rat operator-() const {
    Rat r = *this;
    changesign(r.num_);
    return r;
  }

  friend bool operator==(const Rat& x, const Rat& y) { return x.num_ == y.num_ && x.den_ == y.den_; }

  friend int compare(const Rat& x, const Rat& y) { return ratcmp(x.num_, x.den_, y.num_, y.den_); }

 private:
  Int<L> num_;
  Int<L> den_;
};

}  // namespace lazyarith
