#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lazyarith/precision.hpp"

namespace lazyarith {

/// Raised by a guarded operation at a fixed level when its operands are too
/// large to rule out overflow. Never raised at PrecisionLevel::Extended.
class overflow_signal : public std::exception {
 public:
  overflow_signal(const char* operation, PrecisionLevel level)
      : operation_(operation),
        level_(level),
        what_(std::string("possible overflow in ") + operation + " at " +
              std::string(level_name(level))) {}

  const char* operation() const noexcept { return operation_; }
  PrecisionLevel level() const noexcept { return level_; }
  const char* what() const noexcept override { return what_.c_str(); }

 private:
  const char* operation_;
  PrecisionLevel level_;
  std::string what_;
};

/// Base of every reported domain error (bad input, division by zero, ...).
class arith_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class division_by_zero : public arith_error {
 public:
  explicit division_by_zero(const char* operation)
      : arith_error(std::string(operation) + ": division by zero") {}
};

class inexact_division : public arith_error {
 public:
  explicit inexact_division(const char* operation)
      : arith_error(std::string(operation) + ": division is not exact") {}
};

/// Malformed decimal (or checkpoint) text.
class parse_error : public arith_error {
 public:
  using arith_error::arith_error;
};

/// A value that is valid but does not fit the target fixed level.
class range_error : public arith_error {
 public:
  range_error(std::string_view what, PrecisionLevel level)
      : arith_error(std::string(what) + " does not fit " + std::string(level_name(level))),
        level_(level) {}

  PrecisionLevel level() const noexcept { return level_; }

 private:
  PrecisionLevel level_;
};

namespace detail {

[[noreturn, gnu::cold, gnu::noinline]] inline void signal_overflow(const char* operation,
                                                                  PrecisionLevel level) {
  throw overflow_signal(operation, level);
}

}  // namespace detail

}  // namespace lazyarith
