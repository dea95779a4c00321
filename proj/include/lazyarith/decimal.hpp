#pragma once

#include <string>
#include <string_view>

#include "lazyarith/errors.hpp"

namespace lazyarith::detail {

struct decimal_text {
  bool negative = false;
  std::string_view digits;
};

/// Validates the interchange encoding: optional '-', then digits, no
/// whitespace, no leading zeros except the value "0", and no "-0".
inline decimal_text split_decimal(std::string_view text) {
  decimal_text out;
  out.negative = !text.empty() && text.front() == '-';
  out.digits = out.negative ? text.substr(1) : text;
  if (out.digits.empty()) throw parse_error("empty decimal string: \"" + std::string(text) + "\"");
  for (char ch : out.digits) {
    if (ch < '0' || ch > '9') {
      throw parse_error("not a decimal integer: \"" + std::string(text) + "\"");
    }
  }
  if (out.digits.size() > 1 && out.digits.front() == '0') {
    throw parse_error("leading zeros in decimal integer: \"" + std::string(text) + "\"");
  }
  if (out.negative && out.digits == "0") throw parse_error("negative zero: \"-0\"");
  return out;
}

}  // namespace lazyarith::detail
