#pragma once

#include <string_view>

#include "lazyarith/extended.hpp"
#include "lazyarith/fixed.hpp"

namespace lazyarith {

template <PrecisionLevel L>
Int<L> make_int(long long i) {
  Int<L> out;
  itomp(i, out);
  return out;
}

/// Re-expresses `a` at another level through the decimal interchange form.
/// Throws range_error when the target is a fixed level too narrow for `a`.
template <PrecisionLevel To, PrecisionLevel From>
Int<To> level_cast(const Int<From>& a) {
  if constexpr (To == From) {
    return a;
  } else {
    return from_decimal<To>(to_decimal(a));
  }
}

}  // namespace lazyarith
